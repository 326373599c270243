#pragma once

#include <edgetext/image.hpp>

#include <array>
#include <cstdint>

namespace edgetext {

struct Histogram256
{
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const noexcept;
  bool operator==(const Histogram256&) const = default;
};

Histogram256 histogram(const GrayImage& img);

/// Otsu's global threshold: the t in [0, 255] maximizing the between-class
/// variance w0*w1*(mu0 - mu1)^2 with class 0 = {v <= t}. Scores are compared
/// exactly; ties go to the smallest t and an empty class scores 0. When no t
/// splits the pixels (one populated intensity v) the result is v.
/// Throws std::invalid_argument for an empty histogram.
std::uint8_t otsu_threshold(const Histogram256& h);

/// Foreground where img(x, y) > t.
BinaryImage apply_threshold(const GrayImage& img, std::uint8_t t);

}  // namespace edgetext
