#pragma once

#include <edgetext/components.hpp>
#include <edgetext/morphology.hpp>

#include <vector>

namespace edgetext {

struct TextRegion
{
  Rect box;
  /// Labels of the input components that fall inside this region, ascending.
  std::vector<int> member_labels;
};

/// Paints the pixels of `components` (looked up in `labels`) onto a blank
/// canvas the size of the label map, dilates with `fill_se`, relabels with
/// 8-connectivity and returns one region per connected result.
std::vector<TextRegion> merge_detections(const std::vector<Component>& components,
                                         const LabelMap& labels,
                                         const StructuringElement& fill_se);

/// Region boxes ordered by (y, x); duplicates are kept.
std::vector<Rect> localize(const std::vector<TextRegion>& regions);

}  // namespace edgetext
