#ifndef FRACMEASURE_DIMENSION_HPP
#define FRACMEASURE_DIMENSION_HPP

#include <optional>
#include <vector>

#include "fracmeasure/systems.hpp"

namespace fracmeasure {

struct SeparationCertificate;

struct DimensionResult {
  double s = 0.0;
  double residual = 0.0;  // value of the defining function at s
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  bool degenerate = false;       // the root is s = 0
  bool exceeds_ambient = false;  // s > n: an upper bound only
};

/// Root of sum_i r_i^s = 1 by bisection. A single ratio gives s = 0 with
/// the degenerate flag. Pass the ambient dimension to set exceeds_ambient.
DimensionResult moran_dimension(const std::vector<double>& ratios, std::optional<int> ambient_dim = std::nullopt);

/// (A^s)_{ij} = sum over edges i -> j of r_e^s.
Matrix weighted_matrix(const GraphDirectedSystem& g, double s);

/// (A^s)_{ij} = A_{ij} r_i^s, the weighted matrix of sft_to_gds(sys).
Matrix weighted_matrix(const SftSystem& sys, double s);

struct PerronResult {
  double rho = 0.0;
  double lo = 0.0;  // Collatz-Wielandt bracket
  double hi = 0.0;
  Vector vector;    // right eigenvector, nonnegative, entries sum to 1
  int iterations = 0;
};

/// Perron root of a nonnegative square matrix, computed per strongly
/// connected block. The vector is filled for irreducible input only.
PerronResult perron(const Matrix& m);
double spectral_radius(const Matrix& m);

/// s with rho(A^s) = 1. Throws PreconditionError listing the strongly
/// connected components if g is not strongly connected.
DimensionResult gds_dimension(const GraphDirectedSystem& g);

/// Moran equation for full shifts, the weighted-matrix equation otherwise
/// (A must then be irreducible).
DimensionResult sft_dimension(const SftSystem& sys);

/// Finite stage of the Vitali exhaustion of the cylinder [j] by disjoint
/// cylinders that begin and end with j.
struct ExhaustionFamily {
  Symbol root = 0;
  std::vector<Word> words;  // completed words, in order of discovery
  double moran_sum = 0.0;   // sum of r_{tau(w)}^s over words
  int stages = 0;
  double guarantee = 0.0;   // proven lower bound for moran_sum
  double ratio_proxy = 0.0; // min over connectors of r^s
  std::size_t pending = 0;  // unfinished words after the last stage
};

inline constexpr std::size_t kMaxFamilyWords = 2'000'000;

/// Needs an irreducible matrix and a certificate that is strong or has the
/// open cube condition; otherwise throws PreconditionError.
ExhaustionFamily exhaustion_family(const SftSystem& sys, Symbol j, double s, int stages,
                                   const SeparationCertificate& sep);

/// Lexicographically least shortest admissible word from `from` to `to`
/// (both endpoints included, length >= 2).
Word connector_word(const TransitionMatrix& a, Symbol from, Symbol to);

/// True if the attractor pieces coded by the words have disjoint interiors,
/// checked on cube-image boxes refined up to `extra_depth` further levels.
bool family_cells_disjoint(const SftSystem& sys, const std::vector<Word>& words, int extra_depth = 6);

}  // namespace fracmeasure

#endif  // FRACMEASURE_DIMENSION_HPP
