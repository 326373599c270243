#pragma once

#include <edgetext/image.hpp>

#include <array>
#include <cstdint>
#include <string_view>

namespace edgetext {

/// 3x3 integer kernel, row-major. coefficients[0] multiplies the pixel
/// up-left of center, coefficients[8] the pixel down-right of center.
struct Kernel3x3
{
  std::array<int, 9> coefficients{};

  int at(int dx, int dy) const noexcept { return coefficients[(dy + 1) * 3 + (dx + 1)]; }
  Kernel3x3 transposed() const noexcept;
};

/// Horizontal derivative: [[-1,0,1],[-2,0,2],[-1,0,1]].
Kernel3x3 sobel_x_kernel() noexcept;
/// Vertical derivative, the transpose of sobel_x_kernel().
Kernel3x3 sobel_y_kernel() noexcept;

enum class MagnitudeMode
{
  exact,   // sqrt(gx^2 + gy^2), rounded half-up
  approx,  // |gx| + |gy|
};

MagnitudeMode parse_magnitude_mode(std::string_view s);
std::string_view to_string(MagnitudeMode m) noexcept;

struct GradientMap
{
  SignedPlane gx;
  SignedPlane gy;
  SignedPlane magnitude;  // nonnegative

  int width() const noexcept { return gx.width(); }
  int height() const noexcept { return gx.height(); }
};

/// Correlation with replicated borders, exact integer arithmetic.
SignedPlane convolve3x3(const GrayImage& img, const Kernel3x3& k);

/// Throws std::invalid_argument when the planes differ in size.
SignedPlane gradient_magnitude(const SignedPlane& gx, const SignedPlane& gy, MagnitudeMode mode);

GradientMap sobel_gradients(const GrayImage& img, MagnitudeMode mode = MagnitudeMode::approx);

/// Linear rescale of [0, max] onto [0, 255], rounded half-up. An all-zero
/// plane maps to an all-zero image. Negative samples are rejected.
GrayImage edge_emphasize(const SignedPlane& magnitude);

}  // namespace edgetext
