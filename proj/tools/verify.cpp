#include "verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fracmeasure/fracmeasure.hpp>

#include "report.hpp"

namespace fracmeasure::cli {

namespace {

constexpr double kRel = 0.02;
constexpr int kDepth = 10;
const double kDelta = std::ldexp(1.0, -6);

SftSystem load_sft(const std::string& dir, const std::string& file) {
  auto d = load_system(dir + "/" + file);
  if (!d.sft) throw ParseError(dir + "/" + file + ": expected a transition-matrix system");
  return *d.sft;
}

bool within(double x, double target) { return std::abs(x - target) <= kRel * target; }

CheckRow segments_content(const std::string& dir) {
  const auto sys = load_sft(dir, "segments.json");
  const double c = content_upper(sample_cylinders(sys, {0, 1, 2, 3}, kDepth), 1).value;
  return {"segments-content", "content <= sqrt2 = 1.414214", fixed(c), c <= std::sqrt(2.0) * (1 + kRel)};
}

CheckRow segments_measure(const std::string& dir) {
  const auto sys = load_sft(dir, "segments.json");
  const double m = hausdorff_measure_delta(sample_cylinders(sys, {0, 1, 2, 3}, kDepth), 1, kDelta).value;
  return {"segments-measure", "measure = 2", fixed(m), within(m, 2)};
}

CheckRow gap_row(const std::string& name, const std::vector<CellSample>& cells, double s, GapClass want) {
  const auto r = equality_gap_report(cells, s, {kDelta});
  return {name, to_string(want),
          to_string(r.classification) + " (" + fixed(r.content, 4) + " vs " + fixed(r.measure, 4) + ")",
          r.classification == want};
}

CheckRow segments_gap(const std::string& dir) {
  const auto sys = load_sft(dir, "segments.json");
  return gap_row("segments-gap", sample_cylinders(sys, {0, 1, 2, 3}, kDepth), 1, GapClass::strict_gap);
}

CheckRow segments_halves(const std::string& dir) {
  const auto sys = load_sft(dir, "segments.json");
  return gap_row("segments-halves", sample_cylinders(sys, {0, 1}, kDepth), 1, GapClass::consistent_with_equality);
}

CheckRow fixture_row(const std::string& name, const std::vector<CellSample>& cells, double content, double measure,
                     const std::string& expected) {
  const double c = content_upper(cells, 1).value;
  const double m = hausdorff_measure_delta(cells, 1, kDelta).value;
  return {name, expected, fixed(c, 4) + " < " + fixed(m, 4), c <= content * (1 + kRel) && within(m, measure)};
}

CheckRow circle_row(const std::string&) {
  return fixture_row("circle", fixtures::circle(), 2, 2 * std::numbers::pi, "2 < 2pi = 6.2832");
}

CheckRow square_row(const std::string&) {
  return fixture_row("square", fixtures::square_boundary(), std::sqrt(2.0), 4, "sqrt2 < 4");
}

CheckRow nonirreducible_row(const std::string& dir) {
  const auto sys = load_sft(dir, "nonirreducible.json");
  const auto cells = sample_attractor(sys, Word{2}, 6);
  const int points = count_clusters(cells, 1e-3);
  const double c = content_upper(cells, 0).value;
  const double m = hausdorff_measure_delta(cells, 0, 1e-3).value;
  return {"nonirreducible", "2 points, 1 < 2",
          std::to_string(points) + " points, " + fixed(c, 0) + " < " + fixed(m, 0),
          points == 2 && std::abs(c - 1) < 1e-9 && std::abs(m - 2) < 1e-9};
}

CheckRow interval_row(const std::string& dir, const std::string& name, double delta) {
  const auto sys = load_sft(dir, "interval.json");
  const auto est = packing_premeasure_delta(sys, {0, 1}, 8, 1, delta);
  const auto& b = est.bracket;
  return {name, "1 + delta = " + fixed(1 + delta, 4), "[" + fixed(b.lower, 4) + ", " + fixed(b.upper, 4) + "]",
          b.contains(1 + delta) && b.width() <= 0.02};
}

CheckRow halves_straight(const std::string& dir) {
  const auto sys = load_sft(dir, "segments.json");
  const auto low = content_lower(sys, {0, 1}, 1);
  const double up = content_upper(sample_cylinders(sys, {0, 1}, kDepth), 1).value;
  const double lo = low.value.value_or(0);
  return {"halves-straight", "content = measure = 1", "[" + fixed(lo, 4) + ", " + fixed(up, 4) + "]",
          low.value && lo >= 1 - kRel && up <= 1 + kRel};
}

}  // namespace

const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names = {
      "segments-content", "segments-measure", "segments-gap",         "segments-halves",      "halves-straight",
      "circle",           "square",           "nonirreducible",       "interval-packing-0.1", "interval-packing-0.05"};
  return names;
}

CheckRow run_catalogue_entry(const std::string& name, const std::string& dir) {
  if (name == "segments-content") return segments_content(dir);
  if (name == "segments-measure") return segments_measure(dir);
  if (name == "segments-gap") return segments_gap(dir);
  if (name == "segments-halves") return segments_halves(dir);
  if (name == "halves-straight") return halves_straight(dir);
  if (name == "circle") return circle_row(dir);
  if (name == "square") return square_row(dir);
  if (name == "nonirreducible") return nonirreducible_row(dir);
  if (name == "interval-packing-0.1") return interval_row(dir, name, 0.1);
  if (name == "interval-packing-0.05") return interval_row(dir, name, 0.05);
  throw std::domain_error("unknown catalogue entry: " + name);
}

}  // namespace fracmeasure::cli
