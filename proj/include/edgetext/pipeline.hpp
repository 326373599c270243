#pragma once

// End-to-end text localization: grayscale -> median -> Sobel emphasis ->
// Otsu -> bridging dilation -> labeling -> pruning -> gap filling -> boxes.

#include <edgetext/edge.hpp>
#include <edgetext/imageio.hpp>
#include <edgetext/morphology.hpp>

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edgetext {

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A failure inside one pipeline stage; what() is prefixed with the stage.
class StageError : public std::runtime_error
{
public:
  StageError(std::string stage, const std::string& why)
    : std::runtime_error(stage + ": " + why), stage_(std::move(stage))
  {
  }
  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

struct PipelineConfig
{
  int median_window = 3;
  MagnitudeMode magnitude_mode = MagnitudeMode::approx;
  StructuringElement bridge_se = StructuringElement::rectangle(3, 3);
  StructuringElement fill_se = StructuringElement::rectangle(5, 1);
  double min_area_fraction = 0.20;
  double min_edge_density = 0.10;
  std::optional<std::filesystem::path> debug_dir;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

/// Applies "key = value" lines ('#' comments) on top of `cfg`. Keys:
/// median_window, magnitude, bridge_se, fill_se, min_area_fraction,
/// min_edge_density, debug_dir.
void apply_config(PipelineConfig& cfg, std::istream& in);
void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& path);

/// Debug snapshot names, in the order they are produced.
inline constexpr std::string_view stage_names[] = {
    "gray", "median", "edges", "binary", "bridged", "components", "regions", "overlay"};

using StageSink = std::function<void(std::string_view stage, const AnyImage& image)>;

/// Runs every stage and returns boxes ordered by (y, x). Snapshots go to
/// `sink` when given and to cfg.debug_dir (as NN_<stage>.pgm/.ppm) when set.
std::vector<Rect> run_pipeline(const AnyImage& img, const PipelineConfig& cfg,
                               const StageSink& sink = {});

struct FrameResult
{
  std::filesystem::path frame;
  std::vector<Rect> boxes;
  std::optional<std::string> error;
};

struct SequenceOptions
{
  int workers = 1;
  /// Abort on the first failing frame instead of recording and skipping it.
  bool strict = false;
};

/// Runs the pipeline on each frame independently; results follow frame
/// order whatever the worker count. With cfg.debug_dir set, each frame's
/// snapshots go to a subdirectory named after the frame.
std::vector<FrameResult> run_sequence(const FrameSequence& frames, const PipelineConfig& cfg,
                                      const SequenceOptions& opts = {});

/// Renders a label map with a distinct gray level per label.
GrayImage render_labels(const Raster<std::int32_t>& labels);
/// Input image (gray promoted to RGB) with red box outlines.
RgbImage render_overlay(const AnyImage& img, const std::vector<Rect>& boxes);

}  // namespace edgetext
