#pragma once

#include <edgetext/image.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace edgetext {

struct MatchConfig
{
  /// Minimum fraction of a truth box a detection must cover to be a TDB.
  double tdb_overlap = 0.5;
  /// A TDB covering less than this fraction of its truth box is also an MDB.
  double mdb_coverage = 0.95;

  /// Throws std::invalid_argument unless 0 < tdb_overlap <= mdb_coverage <= 1.
  void validate() const;
};

/// Block tallies: truly detected (tdb), falsely detected (fdb), detected with
/// missing data (mdb, a subset of tdb) and the number of ground-truth blocks.
struct EvalCounts
{
  long long tdb = 0;
  long long fdb = 0;
  long long mdb = 0;
  long long actual = 0;

  EvalCounts& operator+=(const EvalCounts& o) noexcept;
  bool operator==(const EvalCounts&) const = default;
};

/// Flags mark ratios whose denominator was zero; such ratios are reported as 0.
struct DegenerateFlags
{
  bool detection_rate = false;
  bool false_positive_rate = false;
  bool misdetection_rate = false;
  bool precision = false;
  bool recall = false;
  bool f_measure = false;

  bool any() const noexcept
  {
    return detection_rate || false_positive_rate || misdetection_rate || precision || recall ||
           f_measure;
  }
};

struct Metrics
{
  double detection_rate = 0.0;       // tdb / actual
  double false_positive_rate = 0.0;  // fdb / (tdb + fdb)
  double misdetection_rate = 0.0;    // mdb / tdb
  double precision = 0.0;            // tdb / (tdb + fdb)
  double recall = 0.0;               // tdb / actual
  double f_measure = 0.0;            // 2PR / (P + R)
  DegenerateFlags degenerate;
};

/// Greedy one-to-one matching in descending order of truth-box coverage.
/// The result does not depend on the order of `detections`.
EvalCounts match_detections(const std::vector<Rect>& detections, const std::vector<Rect>& truth,
                            const MatchConfig& cfg = {});

/// Fills the detection, false-positive and misdetection rates only.
Metrics compute_rates(const EvalCounts& c);

/// All rates plus precision, recall and F-measure.
Metrics precision_recall_f(const EvalCounts& c);

/// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

/// Mean of per-image metrics (each flag set if it was set for any image).
Metrics macro_average(std::span<const EvalCounts> per_image);

struct ImageEvaluation
{
  std::string name;
  EvalCounts counts;
};

struct EvalReport
{
  std::vector<ImageEvaluation> images;
  EvalCounts total;
  Metrics metrics;
  bool macro = false;
};

/// Micro-averaged (pooled counts) unless `macro` is set.
EvalReport build_report(std::vector<ImageEvaluation> images, bool macro);

void write_report_text(const EvalReport& report, std::ostream& out);
/// One "key=value" per line.
void write_report_kv(const EvalReport& report, std::ostream& out);

}  // namespace edgetext
