#ifndef FRACMEASURE_SEPARATION_HPP
#define FRACMEASURE_SEPARATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "fracmeasure/simgeom.hpp"

namespace fracmeasure {

enum class SeparationKind { strong, failed, inconclusive };

std::string to_string(SeparationKind k);

struct PairSeparation {
  Symbol a = 0;
  Symbol b = 0;
  SeparationKind kind = SeparationKind::inconclusive;
  double gap = 0.0;  // min distance between cell boxes of the two symbols
};

struct SeparationCertificate {
  SeparationKind kind = SeparationKind::inconclusive;
  double gap = 0.0;  // min over pairs; positive iff strong
  int depth = 0;
  // Depth-1 images of [0,1]^n have pairwise disjoint interiors.
  bool open_cube_condition = false;
  std::vector<PairSeparation> pairs;

  bool strong() const { return kind == SeparationKind::strong; }
};

/// Compares depth-`depth` cells of every pair of distinct live first
/// symbols. A pair is strong when their boxes are apart, failed when two
/// cells' bounding balls meet.
SeparationCertificate check_strong_separation(const SftSystem& sys, int depth = 8);

/// Lower bound for the packing constant delta_0 with the open set taken as
/// the (gap/3)-neighbourhood of the attractor. Requires a strong certificate.
double delta0(const SeparationCertificate& cert);

struct WspWitness {
  Word i;
  Word j;
  double deviation = 0.0;  // sup over cube corners of |S_i^{-1} S_j x - x|
  double ratio_mismatch = 0.0;
  double rotation_mismatch = 0.0;
  double translation_mismatch = 0.0;
};

struct WspSearchResult {
  std::optional<WspWitness> witness;
  bool budget_exceeded = false;
  int searched_length = 0;       // all words up to this length were enumerated
  std::size_t distinct_maps = 0;
  std::size_t compared_pairs = 0;
};

inline constexpr std::size_t kMaxWspMaps = 4'000'000;

/// Searches admissible words up to max_len for S_i^{-1} S_j within eps of
/// the identity (and not equal to it). Returns the witness with the
/// shortlex-least (i, j). No witness is not a proof of the weak separation
/// property.
WspSearchResult wsp_witness_search(const SftSystem& sys, int max_len, double eps,
                                   std::size_t max_maps = kMaxWspMaps);

/// sup over corners x of [0,1]^n of |S_i^{-1} S_j x - x|.
double identity_deviation(const Similarity& si, const Similarity& sj);

/// Product self-similar set F_1 x E^{n-1} of dimension s with F_1 = [0,1]
/// generated by an overlapping system of equal ratios r.
struct ProductCounterexample {
  int n = 0;
  double s = 0.0;
  double t = 0.0;  // dim E = (s-1)/(n-1)
  double r = 0.0;
  std::vector<Similarity> e_maps;        // x -> rx, x -> rx + 1 - r
  std::vector<Similarity> first_factor;  // attractor [0,1], fails WSP
  std::vector<Similarity> product_maps;  // empty when the product is too large
  std::size_t product_size = 0;
};

inline constexpr std::size_t kMaxProductMaps = 100'000;

ProductCounterexample build_product_counterexample(int n, double s);

}  // namespace fracmeasure

#endif  // FRACMEASURE_SEPARATION_HPP
