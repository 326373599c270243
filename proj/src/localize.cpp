#include <edgetext/localize.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edgetext {

std::vector<TextRegion> merge_detections(const std::vector<Component>& components,
                                         const LabelMap& labels,
                                         const StructuringElement& fill_se)
{
  if (components.empty())
    return {};

  // keep[l] is set for surviving component labels.
  std::vector<std::uint8_t> keep;
  for (const auto& c : components) {
    if (c.label < 1)
      throw std::invalid_argument("merge_detections: component label must be positive");
    if (static_cast<std::size_t>(c.label) >= keep.size())
      keep.resize(static_cast<std::size_t>(c.label) + 1, 0);
    keep[static_cast<std::size_t>(c.label)] = 1;
  }

  BinaryImage canvas(labels.width(), labels.height());
  const auto ls = labels.pixels();
  auto bits = canvas.bits();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto l = static_cast<std::size_t>(ls[i]);
    bits[i] = (ls[i] > 0 && l < keep.size() && keep[l]) ? 1 : 0;
  }

  const auto filled = dilate(canvas, fill_se);
  const auto merged = label_components(filled);

  std::vector<std::set<int>> members(merged.components.size());
  const auto ms = merged.labels.pixels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (bits[i])
      members[static_cast<std::size_t>(ms[i]) - 1].insert(ls[i]);

  std::vector<TextRegion> regions;
  regions.reserve(merged.components.size());
  for (std::size_t r = 0; r < merged.components.size(); ++r)
    regions.push_back({merged.components[r].bbox, {members[r].begin(), members[r].end()}});
  return regions;
}

std::vector<Rect> localize(const std::vector<TextRegion>& regions)
{
  std::vector<Rect> boxes;
  boxes.reserve(regions.size());
  for (const auto& r : regions)
    boxes.push_back(r.box);
  std::stable_sort(boxes.begin(), boxes.end(), [](const Rect& a, const Rect& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return boxes;
}

}  // namespace edgetext
