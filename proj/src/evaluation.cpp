#include <edgetext/evaluation.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace edgetext {

void MatchConfig::validate() const
{
  if (!(tdb_overlap > 0.0 && tdb_overlap <= mdb_coverage && mdb_coverage <= 1.0))
    throw std::invalid_argument("match config needs 0 < tdb_overlap <= mdb_coverage <= 1");
}

EvalCounts& EvalCounts::operator+=(const EvalCounts& o) noexcept
{
  tdb += o.tdb;
  fdb += o.fdb;
  mdb += o.mdb;
  actual += o.actual;
  return *this;
}

namespace {

__extension__ using wide = __int128;
constexpr long long ppb = 1'000'000'000;

// covered / area >= ratio, with the ratio rounded to parts-per-billion.
bool covers_at_least(long long covered, long long area, double ratio)
{
  return static_cast<wide>(covered) * ppb >= static_cast<wide>(std::llround(ratio * ppb)) * area;
}

struct Candidate
{
  std::size_t det;
  std::size_t truth;
  long long covered;  // intersection area
  long long area;     // truth area
};

}  // namespace

EvalCounts match_detections(const std::vector<Rect>& detections, const std::vector<Rect>& truth,
                            const MatchConfig& cfg)
{
  cfg.validate();

  std::vector<Candidate> candidates;
  for (std::size_t d = 0; d < detections.size(); ++d) {
    for (std::size_t t = 0; t < truth.size(); ++t) {
      const long long covered = intersection_area(detections[d], truth[t]);
      if (covered > 0 && covers_at_least(covered, truth[t].area(), cfg.tdb_overlap))
        candidates.push_back({d, t, covered, truth[t].area()});
    }
  }

  // Descending coverage; ties resolved by detection geometry, not list order.
  std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
    const wide lhs = static_cast<wide>(a.covered) * b.area;
    const wide rhs = static_cast<wide>(b.covered) * a.area;
    if (lhs != rhs)
      return lhs > rhs;
    const auto& da = detections[a.det];
    const auto& db = detections[b.det];
    const auto ka = std::tie(da.x, da.y, da.w, da.h);
    const auto kb = std::tie(db.x, db.y, db.w, db.h);
    if (ka != kb)
      return ka < kb;
    if (a.truth != b.truth)
      return a.truth < b.truth;
    return a.det < b.det;
  });

  std::vector<bool> det_used(detections.size(), false);
  std::vector<bool> truth_used(truth.size(), false);
  EvalCounts c;
  c.actual = static_cast<long long>(truth.size());
  for (const auto& cand : candidates) {
    if (det_used[cand.det] || truth_used[cand.truth])
      continue;
    det_used[cand.det] = true;
    truth_used[cand.truth] = true;
    ++c.tdb;
    if (!covers_at_least(cand.covered, cand.area, cfg.mdb_coverage))
      ++c.mdb;
  }
  c.fdb = static_cast<long long>(detections.size()) - c.tdb;
  return c;
}

namespace {

double ratio(long long num, long long den, bool& degenerate)
{
  degenerate = den == 0;
  return degenerate ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Metrics compute_rates(const EvalCounts& c)
{
  Metrics m;
  m.detection_rate = ratio(c.tdb, c.actual, m.degenerate.detection_rate);
  m.false_positive_rate = ratio(c.fdb, c.tdb + c.fdb, m.degenerate.false_positive_rate);
  m.misdetection_rate = ratio(c.mdb, c.tdb, m.degenerate.misdetection_rate);
  return m;
}

double f_measure(double precision, double recall)
{
  const double s = precision + recall;
  return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

Metrics precision_recall_f(const EvalCounts& c)
{
  Metrics m = compute_rates(c);
  m.precision = ratio(c.tdb, c.tdb + c.fdb, m.degenerate.precision);
  m.recall = ratio(c.tdb, c.actual, m.degenerate.recall);
  m.degenerate.f_measure = m.precision + m.recall == 0.0;
  m.f_measure = f_measure(m.precision, m.recall);
  return m;
}

Metrics macro_average(std::span<const EvalCounts> per_image)
{
  Metrics mean;
  if (per_image.empty()) {
    mean.degenerate = {true, true, true, true, true, true};
    return mean;
  }
  for (const auto& c : per_image) {
    const auto m = precision_recall_f(c);
    mean.detection_rate += m.detection_rate;
    mean.false_positive_rate += m.false_positive_rate;
    mean.misdetection_rate += m.misdetection_rate;
    mean.precision += m.precision;
    mean.recall += m.recall;
    mean.f_measure += m.f_measure;
    mean.degenerate.detection_rate |= m.degenerate.detection_rate;
    mean.degenerate.false_positive_rate |= m.degenerate.false_positive_rate;
    mean.degenerate.misdetection_rate |= m.degenerate.misdetection_rate;
    mean.degenerate.precision |= m.degenerate.precision;
    mean.degenerate.recall |= m.degenerate.recall;
    mean.degenerate.f_measure |= m.degenerate.f_measure;
  }
  const double n = static_cast<double>(per_image.size());
  mean.detection_rate /= n;
  mean.false_positive_rate /= n;
  mean.misdetection_rate /= n;
  mean.precision /= n;
  mean.recall /= n;
  mean.f_measure /= n;
  return mean;
}

EvalReport build_report(std::vector<ImageEvaluation> images, bool macro)
{
  EvalReport r;
  r.images = std::move(images);
  r.macro = macro;
  std::vector<EvalCounts> counts;
  for (const auto& img : r.images) {
    r.total += img.counts;
    counts.push_back(img.counts);
  }
  r.metrics = macro ? macro_average(counts) : precision_recall_f(r.total);
  return r;
}

void write_report_text(const EvalReport& report, std::ostream& out)
{
  out << std::left << std::setw(32) << "image" << std::right << std::setw(8) << "actual"
      << std::setw(8) << "TDB" << std::setw(8) << "FDB" << std::setw(8) << "MDB" << '\n';
  for (const auto& img : report.images)
    out << std::left << std::setw(32) << img.name << std::right << std::setw(8)
        << img.counts.actual << std::setw(8) << img.counts.tdb << std::setw(8) << img.counts.fdb
        << std::setw(8) << img.counts.mdb << '\n';
  const auto& t = report.total;
  out << std::left << std::setw(32) << "total" << std::right << std::setw(8) << t.actual
      << std::setw(8) << t.tdb << std::setw(8) << t.fdb << std::setw(8) << t.mdb << "\n\n";

  const auto& m = report.metrics;
  const auto line = [&](const char* name, double v, bool degenerate) {
    out << std::left << std::setw(22) << name << std::fixed << std::setprecision(4) << v
        << (degenerate ? "  (undefined, reported as 0)" : "") << '\n';
  };
  out << "averaging: " << (report.macro ? "macro" : "micro") << '\n';
  line("detection rate", m.detection_rate, m.degenerate.detection_rate);
  line("false positive rate", m.false_positive_rate, m.degenerate.false_positive_rate);
  line("misdetection rate", m.misdetection_rate, m.degenerate.misdetection_rate);
  line("precision", m.precision, m.degenerate.precision);
  line("recall", m.recall, m.degenerate.recall);
  line("f-measure", m.f_measure, m.degenerate.f_measure);
  out.unsetf(std::ios::floatfield);
}

void write_report_kv(const EvalReport& report, std::ostream& out)
{
  const auto& t = report.total;
  const auto& m = report.metrics;
  out << "images=" << report.images.size() << '\n'
      << "averaging=" << (report.macro ? "macro" : "micro") << '\n'
      << "actual=" << t.actual << '\n'
      << "tdb=" << t.tdb << '\n'
      << "fdb=" << t.fdb << '\n'
      << "mdb=" << t.mdb << '\n'
      << std::setprecision(6) << std::fixed
      << "detection_rate=" << m.detection_rate << '\n'
      << "false_positive_rate=" << m.false_positive_rate << '\n'
      << "misdetection_rate=" << m.misdetection_rate << '\n'
      << "precision=" << m.precision << '\n'
      << "recall=" << m.recall << '\n'
      << "f_measure=" << m.f_measure << '\n'
      << "degenerate=" << (m.degenerate.any() ? 1 : 0) << '\n';
  out.unsetf(std::ios::floatfield);
}

}  // namespace edgetext
