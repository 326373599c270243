#pragma once

#include <edgetext/image.hpp>

#include <cstdint>
#include <vector>

namespace edgetext {

/// 0 is background; components are numbered 1..K with no gaps.
using LabelMap = Raster<std::int32_t>;

struct Component
{
  int label = 0;
  long long area = 0;
  Rect bbox;
  /// Pixels of the component that are set in the edge (pre-dilation) mask.
  long long edge_pixel_count = 0;
  /// edge_pixel_count / bbox area.
  double edge_density = 0.0;
};

struct Labeling
{
  LabelMap labels;
  std::vector<Component> components;  // components[i].label == i + 1
};

/// 8-connected labeling by a two-pass raster scan with union-find merging.
/// Labels follow raster-scan first-encounter order. Edge statistics are zero.
Labeling label_components(const BinaryImage& img);

/// Fills edge_pixel_count and edge_density from an edge mask of the same size.
void measure_edge_density(std::vector<Component>& components, const LabelMap& labels,
                          const BinaryImage& edge_mask);

/// Keeps components whose area is at least `fraction` of the mean area.
/// Throws std::invalid_argument unless 0 < fraction < 1.
std::vector<Component> prune_small(const std::vector<Component>& components, double fraction = 0.20);

/// Keeps components with edge_density >= min_density (in [0, 1]).
std::vector<Component> prune_low_edge_density(const std::vector<Component>& components,
                                               double min_density);

}  // namespace edgetext
