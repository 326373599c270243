#include <edgetext/pipeline.hpp>

#include <edgetext/binarize.hpp>
#include <edgetext/components.hpp>
#include <edgetext/localize.hpp>
#include <edgetext/preprocess.hpp>

#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

namespace edgetext {

void PipelineConfig::validate() const
{
  if (median_window < 1 || median_window % 2 == 0)
    throw ConfigError("median_window must be odd and >= 1");
  if (!(min_area_fraction > 0.0 && min_area_fraction < 1.0))
    throw ConfigError("min_area_fraction must lie in (0, 1)");
  if (!(min_edge_density >= 0.0 && min_edge_density <= 1.0))
    throw ConfigError("min_edge_density must lie in [0, 1]");
}

namespace {

std::string trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value)
{
  T v{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  return v;
}

}  // namespace

void apply_config(PipelineConfig& cfg, std::istream& in)
{
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(std::string_view(t).substr(0, eq));
    const auto value = trim(std::string_view(t).substr(eq + 1));
    try {
      if (key == "median_window")
        cfg.median_window = parse_number<int>(key, value);
      else if (key == "magnitude")
        cfg.magnitude_mode = parse_magnitude_mode(value);
      else if (key == "bridge_se")
        cfg.bridge_se = StructuringElement::parse(value);
      else if (key == "fill_se")
        cfg.fill_se = StructuringElement::parse(value);
      else if (key == "min_area_fraction")
        cfg.min_area_fraction = parse_number<double>(key, value);
      else if (key == "min_edge_density")
        cfg.min_edge_density = parse_number<double>(key, value);
      else if (key == "debug_dir")
        cfg.debug_dir = value;
      else
        throw ConfigError("unknown key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open config " + path.string());
  apply_config(cfg, in);
}

GrayImage render_labels(const Raster<std::int32_t>& labels)
{
  GrayImage out(labels.width(), labels.height());
  const auto src = labels.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = src[i] == 0 ? 0 : static_cast<std::uint8_t>(56 + (src[i] * 37) % 200);
  return out;
}

RgbImage render_overlay(const AnyImage& img, const std::vector<Rect>& boxes)
{
  RgbImage out = std::visit(
      [](const auto& src) -> RgbImage {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, RgbImage>) {
          return src;
        } else {
          RgbImage rgb(src.width(), src.height());
          for (int y = 0; y < src.height(); ++y)
            for (int x = 0; x < src.width(); ++x)
              rgb(x, y) = {src(x, y), src(x, y), src(x, y)};
          return rgb;
        }
      },
      img);

  const RgbImage::Pixel red{255, 0, 0};
  const auto plot = [&](int x, int y) {
    if (x >= 0 && y >= 0 && x < out.width() && y < out.height())
      out(x, y) = red;
  };
  for (const auto& b : boxes) {
    for (int x = b.x; x < b.right(); ++x) {
      plot(x, b.y);
      plot(x, b.bottom() - 1);
    }
    for (int y = b.y; y < b.bottom(); ++y) {
      plot(b.x, y);
      plot(b.right() - 1, y);
    }
  }
  return out;
}

namespace {

GrayImage mask_to_gray(const BinaryImage& mask)
{
  GrayImage out(mask.width(), mask.height());
  const auto src = mask.bits();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = src[i] ? 255 : 0;
  return out;
}

GrayImage render_regions(int width, int height, const std::vector<Rect>& boxes)
{
  GrayImage out(width, height);
  for (const auto& b : boxes)
    for (int y = b.y; y < b.bottom(); ++y)
      for (int x = b.x; x < b.right(); ++x)
        out(x, y) = 255;
  return out;
}

// Runs `fn`, rewrapping any non-stage failure with the stage name.
template <typename Fn>
auto stage(const char* name, Fn&& fn)
{
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

class SnapshotWriter
{
public:
  SnapshotWriter(const PipelineConfig& cfg, const StageSink& sink) : cfg_(cfg), sink_(sink)
  {
    if (cfg_.debug_dir) {
      std::error_code ec;
      std::filesystem::create_directories(*cfg_.debug_dir, ec);
      if (ec)
        throw IoError("cannot create debug directory " + cfg_.debug_dir->string() + ": " +
                      ec.message());
    }
  }

  bool active() const noexcept { return cfg_.debug_dir.has_value() || static_cast<bool>(sink_); }

  void emit(std::string_view name, const AnyImage& image)
  {
    if (sink_)
      sink_(name, image);
    if (!cfg_.debug_dir)
      return;
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "%02d_", index_);
    const auto base = *cfg_.debug_dir / (prefix + std::string(name));
    if (const auto* gray = std::get_if<GrayImage>(&image))
      save_pgm(*gray, base.string() + ".pgm");
    else
      save_ppm(std::get<RgbImage>(image), base.string() + ".ppm");
    ++index_;
  }

private:
  const PipelineConfig& cfg_;
  const StageSink& sink_;
  int index_ = 0;
};

}  // namespace

std::vector<Rect> run_pipeline(const AnyImage& img, const PipelineConfig& cfg,
                               const StageSink& sink)
{
  cfg.validate();
  SnapshotWriter snap(cfg, sink);

  const auto gray = stage("gray", [&] { return to_grayscale(img); });
  if (snap.active())
    snap.emit("gray", gray);

  const auto median = stage("median", [&] { return median_filter(gray, {cfg.median_window}); });
  if (snap.active())
    snap.emit("median", median);

  const auto gradients = stage("edges", [&] { return sobel_gradients(median, cfg.magnitude_mode); });
  const auto edges = stage("edges", [&] { return edge_emphasize(gradients.magnitude); });
  if (snap.active())
    snap.emit("edges", edges);

  const auto binary = stage("binary", [&] {
    return apply_threshold(edges, otsu_threshold(histogram(edges)));
  });
  if (snap.active())
    snap.emit("binary", mask_to_gray(binary));

  const auto bridged = stage("bridged", [&] { return dilate(binary, cfg.bridge_se); });
  if (snap.active())
    snap.emit("bridged", mask_to_gray(bridged));

  auto labeling = stage("components", [&] { return label_components(bridged); });
  const auto survivors = stage("components", [&] {
    measure_edge_density(labeling.components, labeling.labels, binary);
    const auto sized = prune_small(labeling.components, cfg.min_area_fraction);
    return prune_low_edge_density(sized, cfg.min_edge_density);
  });
  if (snap.active()) {
    // Only the surviving components are drawn.
    auto shown = labeling.labels;
    std::vector<std::uint8_t> alive(labeling.components.size() + 1, 0);
    for (const auto& c : survivors)
      alive[static_cast<std::size_t>(c.label)] = 1;
    for (auto& l : shown.pixels())
      if (!alive[static_cast<std::size_t>(l)])
        l = 0;
    snap.emit("components", render_labels(shown));
  }

  const auto boxes = stage("regions", [&] {
    return localize(merge_detections(survivors, labeling.labels, cfg.fill_se));
  });
  if (snap.active()) {
    snap.emit("regions", render_regions(gray.width(), gray.height(), boxes));
    snap.emit("overlay", render_overlay(img, boxes));
  }
  return boxes;
}

std::vector<FrameResult> run_sequence(const FrameSequence& frames, const PipelineConfig& cfg,
                                      const SequenceOptions& opts)
{
  cfg.validate();
  std::vector<FrameResult> results(frames.frames.size());
  std::vector<std::exception_ptr> failures(frames.frames.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  const auto work = [&] {
    for (;;) {
      if (opts.strict && abort.load())
        return;
      const std::size_t i = next.fetch_add(1);
      if (i >= frames.frames.size())
        return;
      auto& r = results[i];
      r.frame = frames.frames[i];
      try {
        auto frame_cfg = cfg;
        if (cfg.debug_dir)
          frame_cfg.debug_dir = *cfg.debug_dir / r.frame.stem();
        r.boxes = run_pipeline(load_image(r.frame), frame_cfg);
      } catch (const std::exception& e) {
        r.error = e.what();
        failures[i] = std::current_exception();
        if (opts.strict)
          abort.store(true);
      }
    }
  };

  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(frames.frames.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (auto& t : pool)
      t.join();
  }

  if (opts.strict)
    for (const auto& f : failures)
      if (f)
        std::rethrow_exception(f);
  return results;
}

}  // namespace edgetext
