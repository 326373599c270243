#include <edgetext/binarize.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

namespace edgetext {

namespace mp = boost::multiprecision;

std::uint64_t Histogram256::total() const noexcept
{
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram256 histogram(const GrayImage& img)
{
  Histogram256 h;
  for (auto v : img.pixels())
    ++h.counts[v];
  return h;
}

std::uint8_t otsu_threshold(const Histogram256& h)
{
  const mp::cpp_int total = h.total();
  if (total == 0)
    throw std::invalid_argument("otsu_threshold: empty histogram");

  mp::cpp_int sum = 0;
  for (int v = 0; v < 256; ++v)
    sum += mp::cpp_int(h.counts[v]) * v;

  // With N pixels, class 0 holding n0 pixels of intensity sum s0:
  //   N^3 * sigma_b^2 = (N*s0 - n0*S)^2 / (n0 * n1)
  // so comparing d^2/(n0*n1) across t orders the candidates exactly.
  mp::cpp_int best_num = 0;
  mp::cpp_int best_den = 1;
  int best_t = 0;
  mp::cpp_int n0 = 0;
  mp::cpp_int s0 = 0;
  for (int t = 0; t < 256; ++t) {
    n0 += h.counts[t];
    s0 += mp::cpp_int(h.counts[t]) * t;
    const mp::cpp_int n1 = total - n0;
    if (n0 == 0 || n1 == 0)
      continue;
    const mp::cpp_int d = total * s0 - n0 * sum;
    const mp::cpp_int num = d * d;
    const mp::cpp_int den = n0 * n1;
    if (num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      best_t = t;
    }
  }
  if (best_num == 0) {
    // Single populated intensity: no split separates anything. Threshold at
    // that intensity so the whole image falls into class 0.
    int v = 0;
    while (h.counts[v] == 0)
      ++v;
    return static_cast<std::uint8_t>(v);
  }
  return static_cast<std::uint8_t>(best_t);
}

BinaryImage apply_threshold(const GrayImage& img, std::uint8_t t)
{
  BinaryImage out(img.width(), img.height());
  auto dst = out.bits();
  const auto src = img.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = src[i] > t ? 1 : 0;
  return out;
}

}  // namespace edgetext
