#pragma once

#include <edgetext/image.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace edgetext {

/// Binary structuring element with odd extents; the origin is the center cell
/// and must be set.
class StructuringElement
{
public:
  /// Throws std::invalid_argument for even/non-positive extents, a mask of
  /// the wrong length, or an unset origin.
  StructuringElement(int width, int height, std::vector<std::uint8_t> mask);

  /// Full width x height rectangle.
  static StructuringElement rectangle(int width, int height);
  /// Parses "WxH" (e.g. "3x3", "5x1") into a full rectangle.
  static StructuringElement parse(std::string_view text);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int origin_x() const noexcept { return width_ / 2; }
  int origin_y() const noexcept { return height_ / 2; }
  bool test(int col, int row) const noexcept { return mask_[row * width_ + col] != 0; }
  bool is_full_rectangle() const noexcept;

private:
  int width_;
  int height_;
  std::vector<std::uint8_t> mask_;
};

/// output(p) is set iff some set cell of se, with its origin placed at p,
/// lands on a foreground pixel. Pixels outside the image are background.
BinaryImage dilate(const BinaryImage& img, const StructuringElement& se);

}  // namespace edgetext
