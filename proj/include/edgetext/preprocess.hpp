#pragma once

#include <edgetext/image.hpp>

namespace edgetext {

struct MedianConfig
{
  /// Odd side length of the square neighborhood.
  int window = 3;
};

/// Median of the window x window neighborhood of every pixel. Samples outside
/// the image are replicated from the nearest edge pixel. Throws
/// std::invalid_argument for an even or non-positive window.
GrayImage median_filter(const GrayImage& img, const MedianConfig& cfg = {});

}  // namespace edgetext
