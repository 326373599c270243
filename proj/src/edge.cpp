#include <edgetext/edge.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace edgetext {

Kernel3x3 Kernel3x3::transposed() const noexcept
{
  Kernel3x3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      t.coefficients[c * 3 + r] = coefficients[r * 3 + c];
  return t;
}

Kernel3x3 sobel_x_kernel() noexcept
{
  return Kernel3x3{{-1, 0, 1,
                    -2, 0, 2,
                    -1, 0, 1}};
}

Kernel3x3 sobel_y_kernel() noexcept { return sobel_x_kernel().transposed(); }

MagnitudeMode parse_magnitude_mode(std::string_view s)
{
  if (s == "exact")
    return MagnitudeMode::exact;
  if (s == "approx")
    return MagnitudeMode::approx;
  throw std::invalid_argument("unknown magnitude mode '" + std::string(s) +
                              "' (expected exact|approx)");
}

std::string_view to_string(MagnitudeMode m) noexcept
{
  return m == MagnitudeMode::exact ? "exact" : "approx";
}

SignedPlane convolve3x3(const GrayImage& img, const Kernel3x3& k)
{
  const int w = img.width();
  const int h = img.height();
  SignedPlane out(w, h);
  for (int y = 0; y < h; ++y) {
    const auto up = img.row(std::max(y - 1, 0));
    const auto mid = img.row(y);
    const auto down = img.row(std::min(y + 1, h - 1));
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) {
      const int l = std::max(x - 1, 0);
      const int r = std::min(x + 1, w - 1);
      dst[x] = k.coefficients[0] * up[l] + k.coefficients[1] * up[x] + k.coefficients[2] * up[r] +
               k.coefficients[3] * mid[l] + k.coefficients[4] * mid[x] + k.coefficients[5] * mid[r] +
               k.coefficients[6] * down[l] + k.coefficients[7] * down[x] + k.coefficients[8] * down[r];
    }
  }
  return out;
}

SignedPlane gradient_magnitude(const SignedPlane& gx, const SignedPlane& gy, MagnitudeMode mode)
{
  if (gx.width() != gy.width() || gx.height() != gy.height())
    throw std::invalid_argument("gradient planes differ in size");
  SignedPlane out(gx.width(), gx.height());
  const auto a = gx.pixels();
  const auto b = gy.pixels();
  auto m = out.pixels();
  if (mode == MagnitudeMode::approx) {
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] = std::abs(a[i]) + std::abs(b[i]);
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double sq = static_cast<double>(a[i]) * a[i] + static_cast<double>(b[i]) * b[i];
      m[i] = static_cast<std::int32_t>(std::floor(std::sqrt(sq) + 0.5));
    }
  }
  return out;
}

GradientMap sobel_gradients(const GrayImage& img, MagnitudeMode mode)
{
  auto gx = convolve3x3(img, sobel_x_kernel());
  auto gy = convolve3x3(img, sobel_y_kernel());
  auto mag = gradient_magnitude(gx, gy, mode);
  return {std::move(gx), std::move(gy), std::move(mag)};
}

GrayImage edge_emphasize(const SignedPlane& magnitude)
{
  const auto px = magnitude.pixels();
  const auto [lo, hi] = std::minmax_element(px.begin(), px.end());
  if (*lo < 0)
    throw std::invalid_argument("edge_emphasize: negative magnitude sample");

  GrayImage out(magnitude.width(), magnitude.height());
  const long long max = *hi;
  if (max == 0)
    return out;
  auto dst = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i)
    dst[i] = static_cast<std::uint8_t>((2LL * px[i] * 255 + max) / (2 * max));
  return out;
}

}  // namespace edgetext
