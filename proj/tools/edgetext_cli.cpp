// edgetext: batch text localization and block-level evaluation.
//
// Exit codes: 0 success, 1 usage/config error, 2 I/O error, 3 stage failure.

#include <edgetext/evaluation.hpp>
#include <edgetext/imageio.hpp>
#include <edgetext/pipeline.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace edgetext;

namespace {

enum ExitCode
{
  ok = 0,
  usage_error = 1,
  io_error = 2,
  stage_failure = 3,
};

struct DetectArgs
{
  std::string input;
  std::string out;
  std::string config;
  int median_window = 3;
  std::string magnitude = "approx";
  std::string bridge_se = "3x3";
  std::string fill_se = "5x1";
  double min_area_fraction = 0.20;
  double min_edge_density = 0.10;
  std::string debug_dir;
  std::string dump_edges;
  std::string dump_binary;
  std::string dump_components;
  std::string dump_overlay;
  int workers = 1;
  bool strict = false;
};

struct EvalArgs
{
  std::string gt;
  std::string pred;
  bool macro = false;
  double tdb_overlap = 0.5;
  double mdb_coverage = 0.95;
  std::string format = "both";
};

// Config file first, then only the flags given explicitly on the command line.
PipelineConfig make_config(const DetectArgs& a, const CLI::App& cmd)
{
  PipelineConfig cfg;
  if (!a.config.empty())
    apply_config_file(cfg, a.config);
  const auto given = [&](const char* name) { return cmd.count(name) > 0; };
  try {
    if (given("--median-window"))
      cfg.median_window = a.median_window;
    if (given("--magnitude"))
      cfg.magnitude_mode = parse_magnitude_mode(a.magnitude);
    if (given("--bridge-se"))
      cfg.bridge_se = StructuringElement::parse(a.bridge_se);
    if (given("--fill-se"))
      cfg.fill_se = StructuringElement::parse(a.fill_se);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (given("--min-area-fraction"))
    cfg.min_area_fraction = a.min_area_fraction;
  if (given("--min-edge-density"))
    cfg.min_edge_density = a.min_edge_density;
  if (given("--debug-dir"))
    cfg.debug_dir = a.debug_dir;
  cfg.validate();
  return cfg;
}

class Output
{
public:
  explicit Output(const std::string& path)
  {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_)
        throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

int run_detect(const DetectArgs& a, const CLI::App& cmd)
{
  const auto cfg = make_config(a, cmd);
  const fs::path input(a.input);

  if (fs::is_directory(input)) {
    if (!a.dump_edges.empty() || !a.dump_binary.empty() || !a.dump_components.empty() ||
        !a.dump_overlay.empty())
      throw ConfigError("--dump-* flags need a single image input; use --debug-dir for frames");
    const auto frames = load_frame_sequence(input);
    const auto results = run_sequence(frames, cfg, {a.workers, a.strict});
    Output out(a.out);
    for (const auto& r : results) {
      out.stream() << "# frame " << r.frame.filename().string() << '\n';
      if (r.error) {
        std::cerr << "edgetext: frame " << r.frame.filename().string() << " skipped: " << *r.error
                  << '\n';
        out.stream() << "# error " << *r.error << '\n';
        continue;
      }
      write_detections(r.boxes, out.stream());
    }
    return ok;
  }

  const auto image = load_image(input);
  const std::map<std::string_view, std::string> dumps = {{"edges", a.dump_edges},
                                                          {"binary", a.dump_binary},
                                                          {"components", a.dump_components},
                                                          {"overlay", a.dump_overlay}};
  const StageSink sink = [&](std::string_view name, const AnyImage& img) {
    const auto it = dumps.find(name);
    if (it == dumps.end() || it->second.empty())
      return;
    if (const auto* g = std::get_if<GrayImage>(&img))
      save_pgm(*g, fs::path(it->second));
    else
      save_ppm(std::get<RgbImage>(img), fs::path(it->second));
  };
  const auto boxes = run_pipeline(image, cfg, sink);
  Output out(a.out);
  write_detections(boxes, out.stream());
  return ok;
}

bool has_frame_sections(const fs::path& file)
{
  std::ifstream in(file);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("# frame ", 0) == 0)
      return true;
  return false;
}

// Box lists keyed by file stem.
std::map<std::string, std::vector<Rect>> load_box_sets(const fs::path& path)
{
  std::map<std::string, std::vector<Rect>> sets;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file())
        sets[entry.path().stem().string()] = load_annotations(entry.path());
    return sets;
  }
  if (!fs::exists(path))
    throw IoError("no such file or directory: " + path.string());
  if (has_frame_sections(path)) {
    std::ifstream in(path);
    for (auto& s : load_sectioned_detections(in))
      sets[fs::path(s.name).stem().string()] = std::move(s.boxes);
    return sets;
  }
  sets[path.stem().string()] = load_annotations(path);
  return sets;
}

int run_eval(const EvalArgs& a)
{
  const MatchConfig match{a.tdb_overlap, a.mdb_coverage};
  try {
    match.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  auto gt = load_box_sets(a.gt);
  auto pred = load_box_sets(a.pred);

  std::vector<ImageEvaluation> images;
  if (gt.size() == 1 && pred.size() == 1 && !fs::is_directory(a.gt) && !fs::is_directory(a.pred) &&
      !has_frame_sections(a.gt)) {
    images.push_back({gt.begin()->first,
                      match_detections(pred.begin()->second, gt.begin()->second, match)});
  } else {
    for (const auto& [name, truth] : gt) {
      const auto it = pred.find(name);
      if (it == pred.end())
        std::cerr << "edgetext: no detections for " << name << ", counted as empty\n";
      const std::vector<Rect> none;
      images.push_back({name, match_detections(it == pred.end() ? none : it->second, truth, match)});
    }
    for (const auto& [name, boxes] : pred)
      if (!gt.count(name))
        std::cerr << "edgetext: detections for " << name << " have no ground truth, ignored\n";
  }

  const auto report = build_report(std::move(images), a.macro);
  if (a.format == "text" || a.format == "both")
    write_report_text(report, std::cout);
  if (a.format == "both")
    std::cout << '\n';
  if (a.format == "kv" || a.format == "both")
    write_report_kv(report, std::cout);
  return ok;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Edge-emphasis text localization and evaluation"};
  app.require_subcommand(1);

  DetectArgs d;
  auto* detect = app.add_subcommand("detect", "Localize text in an image or a directory of frames");
  detect->add_option("input", d.input, "P5/P6 image or directory of frames")->required();
  detect->add_option("--out", d.out, "Detection output file (default stdout)");
  detect->add_option("--config", d.config, "key = value config file; flags override it");
  detect->add_option("--median-window", d.median_window, "Odd median window side");
  detect->add_option("--magnitude", d.magnitude, "Gradient magnitude: exact|approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  detect->add_option("--bridge-se", d.bridge_se, "Bridging dilation element WxH");
  detect->add_option("--fill-se", d.fill_se, "Gap-filling dilation element WxH");
  detect->add_option("--min-area-fraction", d.min_area_fraction,
                     "Drop components below this fraction of the mean area");
  detect->add_option("--min-edge-density", d.min_edge_density,
                     "Drop components with fewer edge pixels per bbox pixel");
  detect->add_option("--debug-dir", d.debug_dir, "Write every stage snapshot here");
  detect->add_option("--dump-edges", d.dump_edges, "Write the emphasized edge image (P5)");
  detect->add_option("--dump-binary", d.dump_binary, "Write the Otsu mask (P5)");
  detect->add_option("--dump-components", d.dump_components, "Write the component labels (P5)");
  detect->add_option("--dump-overlay", d.dump_overlay, "Write boxes over the input (P6)");
  detect->add_option("--workers", d.workers, "Frames processed concurrently")
      ->check(CLI::PositiveNumber);
  detect->add_flag("--strict", d.strict, "Abort on the first unreadable frame");

  EvalArgs e;
  auto* eval = app.add_subcommand("eval", "Score detections against ground truth");
  eval->add_option("--gt", e.gt, "Ground-truth file or directory")->required();
  eval->add_option("--pred", e.pred, "Detection file or directory")->required();
  eval->add_flag("--macro", e.macro, "Average per-image rates instead of pooling counts");
  eval->add_option("--tdb-overlap", e.tdb_overlap, "Truth coverage needed for a TDB");
  eval->add_option("--mdb-coverage", e.mdb_coverage, "TDBs covering less are also MDB");
  eval->add_option("--format", e.format, "text|kv|both")
      ->check(CLI::IsMember({"text", "kv", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? ok : usage_error;
  }

  try {
    if (*detect)
      return run_detect(d, *detect);
    return run_eval(e);
  } catch (const ConfigError& err) {
    std::cerr << "edgetext: " << err.what() << '\n';
    return usage_error;
  } catch (const StageError& err) {
    std::cerr << "edgetext: stage failure: " << err.what() << '\n';
    return stage_failure;
  } catch (const ImageFormatError& err) {
    std::cerr << "edgetext: " << err.what() << '\n';
    return io_error;
  } catch (const AnnotationParseError& err) {
    std::cerr << "edgetext: " << err.what() << '\n';
    return io_error;
  } catch (const IoError& err) {
    std::cerr << "edgetext: " << err.what() << '\n';
    return io_error;
  } catch (const fs::filesystem_error& err) {
    std::cerr << "edgetext: " << err.what() << '\n';
    return io_error;
  } catch (const std::exception& err) {
    std::cerr << "edgetext: internal error: " << err.what() << '\n';
    return stage_failure;
  }
}
