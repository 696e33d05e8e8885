#ifndef FRACMEASURE_ESTIMATORS_HPP
#define FRACMEASURE_ESTIMATORS_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fracmeasure/separation.hpp"
#include "fracmeasure/simgeom.hpp"

namespace fracmeasure {

/// Result of a cover search. Groups are contiguous runs of cells in list
/// order; value is the sum of diam(group)^s.
struct CoverEstimate {
  double value = 0.0;
  // Part of value due to cell size rather than the spread of cell centers.
  double inflation = 0.0;
  std::size_t groups = 0;
  std::string method;
};

/// Upper bound for the s-dimensional Hausdorff content of the union of the
/// cells: the better of one set covering everything and the best split into
/// contiguous runs of at most `budget` cells.
CoverEstimate content_upper(const std::vector<CellSample>& cells, double s, int budget = 256);

/// Same search restricted to sets of diameter <= delta: an upper bound for
/// the delta-approximate Hausdorff measure. Throws PreconditionError if a
/// single cell is wider than delta.
CoverEstimate hausdorff_measure_delta(const std::vector<CellSample>& cells, double s, double delta, int budget = 256);

/// Self-similar (Markov) measure at exponent s: mu([w]) = r_{tau(w)}^s v_last
/// where v is the Perron vector of A_{ij} r_i^s normalised to total mass 1.
/// Only meaningful when s is the dimension of an irreducible system.
struct NaturalMeasure {
  double s = 0.0;
  Vector v;
  std::vector<double> rs;  // r_i^s

  double weight(const Word& w) const;
};

NaturalMeasure natural_measure(const SftSystem& sys, double s);

/// Cylinder weights of the natural measure at a fixed depth.
struct MassDistribution {
  std::vector<Word> words;
  std::vector<double> weights;
  double total = 0.0;
};

MassDistribution mass_distribution(const SftSystem& sys, const std::vector<Symbol>& roots, int depth);

struct LowerBound {
  std::optional<double> value;
  std::string method;
  std::string reason;  // why no bound was produced
};

enum class LowerBoundRoute { automatic, separation, projection };

/// Mass-distribution lower bound for the content of the union of the
/// cylinders of `roots`. The separation route needs a strong certificate;
/// the projection route (s = 1) needs maps that keep a coordinate axis and
/// projected first-level cubes with disjoint interiors.
LowerBound content_lower(const SftSystem& sys, const std::vector<Symbol>& roots, double s, int depth = 8,
                         LowerBoundRoute route = LowerBoundRoute::automatic);

struct Ball {
  Vector center;
  double diameter = 0.0;
};

struct BallPacking {
  std::vector<Ball> balls;
  double delta = 0.0;

  double value(double s) const;
};

/// Disjoint closed balls with diameters in (0, delta]; centers are checked
/// only against each other.
bool verify_packing(const BallPacking& p, double tol = 1e-12);

struct PackingEstimate {
  EstimateBracket bracket;
  BallPacking packing;
};

/// Bracket for the delta-approximate packing pre-measure of the union of the
/// cylinders of `roots`, sampled at `depth`. `budget` bounds the local
/// search rounds.
PackingEstimate packing_premeasure_delta(const SftSystem& sys, const std::vector<Symbol>& roots, int depth, double s,
                                         double delta, int budget = 64);

struct AhlforsReport {
  double c_low = 0.0;
  double c_high = 0.0;
  double spread() const { return c_low > 0 ? c_high / c_low : std::numeric_limits<double>::infinity(); }
};

/// Observed range of mu(B(x,r)) / r^s over pseudo-random attractor points
/// and radii (fixed seed).
AhlforsReport ahlfors_check(const SftSystem& sys, double s, int samples, const std::vector<double>& radii,
                            int depth = 10);

enum class GapClass { consistent_with_equality, strict_gap, inconclusive };

std::string to_string(GapClass g);

struct EqualityGapReport {
  double content = 0.0;
  double measure = 0.0;
  double delta = 0.0;
  double tolerance = 0.0;
  GapClass classification = GapClass::inconclusive;
};

/// Compares content_upper with hausdorff_measure_delta at the smallest
/// delta. A strict gap needs content*(1+tol) < measure*(1-tol); overlapping
/// tolerance bands count as consistent with equality.
EqualityGapReport equality_gap_report(const std::vector<CellSample>& cells, double s, const std::vector<double>& deltas,
                                      int budget = 256, double tolerance = 0.02);

/// Single-linkage clusters of cell centers at distance <= scale.
int count_clusters(const std::vector<CellSample>& cells, double scale);

}  // namespace fracmeasure

#endif  // FRACMEASURE_ESTIMATORS_HPP
