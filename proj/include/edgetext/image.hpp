#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgetext {

/// Row-major single-plane raster. Width and height are always at least 1.
template <typename T>
class Raster
{
public:
  using value_type = T;

  Raster(int width, int height, T fill = T{})
    : width_(checked_extent(width, "width"))
    , height_(checked_extent(height, "height"))
    , data_(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), fill)
  {
  }

  Raster(int width, int height, std::vector<T> data)
    : width_(checked_extent(width, "width"))
    , height_(checked_extent(height, "height"))
    , data_(std::move(data))
  {
    if (data_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_))
      throw std::invalid_argument("raster data length does not match " + std::to_string(width_) +
                                  "x" + std::to_string(height_));
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(int x, int y) noexcept { return data_[index(x, y)]; }
  const T& operator()(int x, int y) const noexcept { return data_[index(x, y)]; }

  /// Sample with coordinates clamped to the nearest edge pixel.
  const T& clamped(int x, int y) const noexcept
  {
    x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
    y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
    return data_[index(x, y)];
  }

  bool contains(int x, int y) const noexcept
  {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::span<T> pixels() noexcept { return data_; }
  std::span<const T> pixels() const noexcept { return data_; }
  std::span<T> row(int y) noexcept { return std::span<T>(data_).subspan(index(0, y), width_); }
  std::span<const T> row(int y) const noexcept
  {
    return std::span<const T>(data_).subspan(index(0, y), width_);
  }

  bool operator==(const Raster&) const = default;

private:
  static int checked_extent(int v, const char* what)
  {
    if (v < 1)
      throw std::invalid_argument(std::string("raster ") + what + " must be >= 1, got " +
                                  std::to_string(v));
    return v;
  }

  std::size_t index(int x, int y) const noexcept
  {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<T> data_;
};

using GrayImage = Raster<std::uint8_t>;
/// Signed integer response plane (convolution output, gradient components).
using SignedPlane = Raster<std::int32_t>;

/// Foreground/background mask. Stored one byte per pixel; values are 0 or 1.
class BinaryImage
{
public:
  BinaryImage(int width, int height) : bits_(width, height, 0) {}

  int width() const noexcept { return bits_.width(); }
  int height() const noexcept { return bits_.height(); }
  std::size_t size() const noexcept { return bits_.size(); }

  bool test(int x, int y) const noexcept { return bits_(x, y) != 0; }
  void set(int x, int y, bool on = true) noexcept { bits_(x, y) = on ? 1 : 0; }
  bool contains(int x, int y) const noexcept { return bits_.contains(x, y); }

  std::size_t count() const noexcept
  {
    std::size_t n = 0;
    for (auto b : bits_.pixels())
      n += b;
    return n;
  }

  std::span<const std::uint8_t> bits() const noexcept { return bits_.pixels(); }
  std::span<std::uint8_t> bits() noexcept { return bits_.pixels(); }

  bool operator==(const BinaryImage&) const = default;

private:
  Raster<std::uint8_t> bits_;
};

/// Interleaved 8-bit RGB raster.
class RgbImage
{
public:
  struct Pixel
  {
    std::uint8_t r, g, b;
    bool operator==(const Pixel&) const = default;
  };

  RgbImage(int width, int height) : px_(width, height) {}
  RgbImage(int width, int height, std::vector<std::uint8_t> interleaved);

  int width() const noexcept { return px_.width(); }
  int height() const noexcept { return px_.height(); }

  Pixel& operator()(int x, int y) noexcept { return px_(x, y); }
  const Pixel& operator()(int x, int y) const noexcept { return px_(x, y); }

  std::vector<std::uint8_t> interleaved() const;

  bool operator==(const RgbImage&) const = default;

private:
  Raster<Pixel> px_;
};

/// Axis-aligned rectangle; (x, y) is the top-left pixel.
struct Rect
{
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  long long area() const noexcept { return static_cast<long long>(w) * h; }
  int right() const noexcept { return x + w; }   // exclusive
  int bottom() const noexcept { return y + h; }  // exclusive

  bool contains(const Rect& o) const noexcept
  {
    return o.x >= x && o.y >= y && o.right() <= right() && o.bottom() <= bottom();
  }

  bool operator==(const Rect&) const = default;
};

long long intersection_area(const Rect& a, const Rect& b) noexcept;

inline RgbImage::RgbImage(int width, int height, std::vector<std::uint8_t> interleaved)
  : px_(width, height)
{
  if (interleaved.size() != 3 * px_.size())
    throw std::invalid_argument("RGB data length does not match 3*width*height");
  auto out = px_.pixels();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = {interleaved[3 * i], interleaved[3 * i + 1], interleaved[3 * i + 2]};
}

inline std::vector<std::uint8_t> RgbImage::interleaved() const
{
  std::vector<std::uint8_t> out;
  out.reserve(3 * px_.size());
  for (const auto& p : px_.pixels()) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

inline long long intersection_area(const Rect& a, const Rect& b) noexcept
{
  const long long w = static_cast<long long>(std::min(a.right(), b.right())) - std::max(a.x, b.x);
  const long long h = static_cast<long long>(std::min(a.bottom(), b.bottom())) - std::max(a.y, b.y);
  return (w > 0 && h > 0) ? w * h : 0;
}

}  // namespace edgetext
