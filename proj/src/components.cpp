#include <edgetext/components.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgetext {

namespace {

class DisjointSets
{
public:
  int make()
  {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int find(int x)
  {
    int root = x;
    while (parent_[root] != root)
      root = parent_[root];
    while (parent_[x] != root) {
      const int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // The smaller id stays the root so roots are always the earliest label.
  int unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return a;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return a;
  }

  std::size_t size() const noexcept { return parent_.size(); }

private:
  std::vector<int> parent_;
};

}  // namespace

Labeling label_components(const BinaryImage& img)
{
  const int w = img.width();
  const int h = img.height();
  LabelMap labels(w, h, 0);

  // Provisional labels start at 1; slot 0 of the set structure is unused.
  DisjointSets sets;
  sets.make();

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!img.test(x, y))
        continue;
      int label = 0;
      auto consider = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w)
          return;
        const int n = labels(nx, ny);
        if (n == 0)
          return;
        label = label == 0 ? sets.find(n) : sets.unite(label, n);
      };
      consider(x - 1, y);
      consider(x - 1, y - 1);
      consider(x, y - 1);
      consider(x + 1, y - 1);
      labels(x, y) = label == 0 ? sets.make() : label;
    }
  }

  // Second pass: resolve equivalences and renumber in first-encounter order.
  std::vector<int> final_id(sets.size(), 0);
  std::vector<Component> components;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int& l = labels(x, y);
      if (l == 0)
        continue;
      const int root = sets.find(l);
      if (final_id[root] == 0) {
        components.push_back(Component{static_cast<int>(components.size()) + 1, 0, Rect{x, y, 1, 1}});
        final_id[root] = static_cast<int>(components.size());
      }
      l = final_id[root];
      auto& c = components[l - 1];
      ++c.area;
      // Track the bbox as inclusive extremes, converted below.
      c.bbox.x = std::min(c.bbox.x, x);
      c.bbox.y = std::min(c.bbox.y, y);
      c.bbox.w = std::max(c.bbox.w, x + 1);
      c.bbox.h = std::max(c.bbox.h, y + 1);
    }
  }
  for (auto& c : components) {
    c.bbox.w -= c.bbox.x;
    c.bbox.h -= c.bbox.y;
  }
  return {std::move(labels), std::move(components)};
}

void measure_edge_density(std::vector<Component>& components, const LabelMap& labels,
                          const BinaryImage& edge_mask)
{
  if (labels.width() != edge_mask.width() || labels.height() != edge_mask.height())
    throw std::invalid_argument("edge mask and label map differ in size");

  std::vector<long long> counts(components.size() + 1, 0);
  const auto ls = labels.pixels();
  const auto es = edge_mask.bits();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] > 0 && es[i])
      ++counts[static_cast<std::size_t>(ls[i])];

  for (auto& c : components) {
    if (c.label < 1 || static_cast<std::size_t>(c.label) >= counts.size())
      throw std::invalid_argument("component label not present in label map");
    c.edge_pixel_count = counts[static_cast<std::size_t>(c.label)];
    c.edge_density = static_cast<double>(c.edge_pixel_count) / static_cast<double>(c.bbox.area());
  }
}

std::vector<Component> prune_small(const std::vector<Component>& components, double fraction)
{
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("prune_small: fraction must lie in (0, 1)");
  if (components.empty())
    return {};

  // Fraction as parts-per-billion so that a ratio typed as 0.20 is exactly
  // 1/5 and areas sitting on the threshold are kept.
  __extension__ using wide = __int128;
  constexpr long long ppb = 1'000'000'000;
  const wide frac = static_cast<wide>(std::llround(fraction * ppb));
  wide total = 0;
  for (const auto& c : components)
    total += c.area;
  const wide n = static_cast<wide>(components.size());

  // area >= fraction * total / n, compared without dividing.
  std::vector<Component> kept;
  for (const auto& c : components)
    if (static_cast<wide>(c.area) * n * ppb >= frac * total)
      kept.push_back(c);
  return kept;
}

std::vector<Component> prune_low_edge_density(const std::vector<Component>& components,
                                               double min_density)
{
  if (!(min_density >= 0.0 && min_density <= 1.0))
    throw std::invalid_argument("prune_low_edge_density: min_density must lie in [0, 1]");
  std::vector<Component> kept;
  std::copy_if(components.begin(), components.end(), std::back_inserter(kept),
               [&](const Component& c) { return c.edge_density >= min_density; });
  return kept;
}

}  // namespace edgetext
