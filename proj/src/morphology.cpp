#include <edgetext/morphology.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace edgetext {

StructuringElement::StructuringElement(int width, int height, std::vector<std::uint8_t> mask)
  : width_(width), height_(height), mask_(std::move(mask))
{
  if (width < 1 || height < 1 || width % 2 == 0 || height % 2 == 0)
    throw std::invalid_argument("structuring element extents must be odd and >= 1, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  if (mask_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("structuring element mask length mismatch");
  if (!test(origin_x(), origin_y()))
    throw std::invalid_argument("structuring element origin cell must be set");
}

StructuringElement StructuringElement::rectangle(int width, int height)
{
  const auto n = (width > 0 && height > 0) ? static_cast<std::size_t>(width) * height : 0;
  return StructuringElement(width, height, std::vector<std::uint8_t>(n, 1));
}

StructuringElement StructuringElement::parse(std::string_view text)
{
  const auto sep = text.find_first_of("xX");
  int w = 0;
  int h = 0;
  bool ok = sep != std::string_view::npos;
  if (ok) {
    const auto ws = text.substr(0, sep);
    const auto hs = text.substr(sep + 1);
    auto rw = std::from_chars(ws.data(), ws.data() + ws.size(), w);
    auto rh = std::from_chars(hs.data(), hs.data() + hs.size(), h);
    ok = rw.ec == std::errc{} && rw.ptr == ws.data() + ws.size() && rh.ec == std::errc{} &&
         rh.ptr == hs.data() + hs.size();
  }
  if (!ok)
    throw std::invalid_argument("structuring element must be given as WxH, got '" +
                                std::string(text) + "'");
  return rectangle(w, h);
}

bool StructuringElement::is_full_rectangle() const noexcept
{
  return std::all_of(mask_.begin(), mask_.end(), [](auto b) { return b != 0; });
}

namespace {

// Rectangular elements decompose into a horizontal run followed by a vertical
// run; each pass is a sliding-window OR over a line.
BinaryImage dilate_rectangle(const BinaryImage& img, int rx, int ry)
{
  const int w = img.width();
  const int h = img.height();
  const auto src = img.bits();

  BinaryImage horiz(w, h);
  auto hb = horiz.bits();
  for (int y = 0; y < h; ++y) {
    const auto* row = src.data() + static_cast<std::size_t>(y) * w;
    auto* out = hb.data() + static_cast<std::size_t>(y) * w;
    // Count of set pixels inside [x - rx, x + rx].
    int inside = 0;
    for (int x = 0; x <= std::min(rx, w - 1); ++x)
      inside += row[x];
    for (int x = 0; x < w; ++x) {
      out[x] = inside > 0 ? 1 : 0;
      if (x + rx + 1 < w)
        inside += row[x + rx + 1];
      if (x - rx >= 0)
        inside -= row[x - rx];
    }
  }

  BinaryImage out(w, h);
  auto ob = out.bits();
  for (int x = 0; x < w; ++x) {
    int inside = 0;
    for (int y = 0; y <= std::min(ry, h - 1); ++y)
      inside += hb[static_cast<std::size_t>(y) * w + x];
    for (int y = 0; y < h; ++y) {
      ob[static_cast<std::size_t>(y) * w + x] = inside > 0 ? 1 : 0;
      if (y + ry + 1 < h)
        inside += hb[static_cast<std::size_t>(y + ry + 1) * w + x];
      if (y - ry >= 0)
        inside -= hb[static_cast<std::size_t>(y - ry) * w + x];
    }
  }
  return out;
}

BinaryImage dilate_general(const BinaryImage& img, const StructuringElement& se)
{
  std::vector<std::pair<int, int>> offsets;
  for (int r = 0; r < se.height(); ++r)
    for (int c = 0; c < se.width(); ++c)
      if (se.test(c, r))
        offsets.emplace_back(c - se.origin_x(), r - se.origin_y());

  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (const auto& [dx, dy] : offsets) {
        const int sx = x + dx;
        const int sy = y + dy;
        if (img.contains(sx, sy) && img.test(sx, sy)) {
          out.set(x, y);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

BinaryImage dilate(const BinaryImage& img, const StructuringElement& se)
{
  if (se.width() == 1 && se.height() == 1)
    return img;
  if (se.is_full_rectangle())
    return dilate_rectangle(img, se.width() / 2, se.height() / 2);
  return dilate_general(img, se);
}

}  // namespace edgetext
