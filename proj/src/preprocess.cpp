#include <edgetext/preprocess.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace edgetext {

GrayImage median_filter(const GrayImage& img, const MedianConfig& cfg)
{
  const int window = cfg.window;
  if (window < 1 || window % 2 == 0)
    throw std::invalid_argument("median window must be odd and >= 1, got " +
                                std::to_string(window));
  if (window == 1)
    return img;

  const int radius = window / 2;
  const int rank = window * window / 2;
  GrayImage out(img.width(), img.height());

  // Sliding histogram along each row (Huang). Column entering/leaving the
  // window is added/removed; the median is found by walking the 256 bins.
  std::array<int, 256> hist{};
  for (int y = 0; y < img.height(); ++y) {
    hist.fill(0);
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx)
        ++hist[img.clamped(dx, y + dy)];

    for (int x = 0;; ++x) {
      int seen = 0;
      int v = 0;
      while (seen + hist[v] <= rank)
        seen += hist[v++];
      out(x, y) = static_cast<std::uint8_t>(v);

      if (x + 1 == img.width())
        break;
      for (int dy = -radius; dy <= radius; ++dy) {
        --hist[img.clamped(x - radius, y + dy)];
        ++hist[img.clamped(x + radius + 1, y + dy)];
      }
    }
  }
  return out;
}

}  // namespace edgetext
