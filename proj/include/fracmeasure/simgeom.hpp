#ifndef FRACMEASURE_SIMGEOM_HPP
#define FRACMEASURE_SIMGEOM_HPP

#include <cstddef>
#include <vector>

#include "fracmeasure/symbolic.hpp"
#include "fracmeasure/types.hpp"

namespace fracmeasure {

/// Contracting similarity x -> ratio * orthogonal * x + translation.
class Similarity {
 public:
  Similarity() = default;
  /// Throws ParseError unless ratio is in (0,1) and orthogonal^T orthogonal = I
  /// within 1e-12.
  Similarity(double ratio, Matrix orthogonal, Vector translation);

  /// x -> ratio * x + translation.
  static Similarity scaling(double ratio, Vector translation);

  int dim() const { return static_cast<int>(translation_.size()); }
  double ratio() const { return ratio_; }
  const Matrix& orthogonal() const { return orthogonal_; }
  const Vector& translation() const { return translation_; }
  Matrix linear() const { return ratio_ * orthogonal_; }

  Vector operator()(const Vector& x) const { return ratio_ * (orthogonal_ * x) + translation_; }

  /// The unique fixed point.
  Vector fixed_point() const;

  /// True if the image of [0,1]^n lies in [0,1]^n within tol (checked on
  /// the 2^n corners).
  bool maps_unit_cube_into_itself(double tol = 1e-9) const;

 private:
  double ratio_ = 0.5;
  Matrix orthogonal_;
  Vector translation_;
};

/// (a o b)(x) = a(b(x)).
Similarity compose(const Similarity& a, const Similarity& b);

/// Axis-aligned box [lo, hi].
struct Box {
  Vector lo;
  Vector hi;

  int dim() const { return static_cast<int>(lo.size()); }
  Vector center() const { return (lo + hi) / 2; }
  double diagonal() const { return (hi - lo).norm(); }
  /// Euclidean distance between the boxes (0 if they meet).
  double distance(const Box& other) const;
  /// Volume of the intersection (0 if the interiors are disjoint).
  double overlap_volume(const Box& other) const;
  bool contains(const Box& inner, double tol = 0.0) const;
  void expand(const Box& other);
};

/// Bounding box of the image of [0,1]^n under s.
Box unit_cube_image_box(const Similarity& s);

/// Similarity system driven by a subshift of finite type: symbol i carries
/// maps[i]; admissible sequences come from the transition matrix.
class SftSystem {
 public:
  SftSystem() = default;
  SftSystem(std::vector<Similarity> maps, TransitionMatrix transitions);

  int dim() const { return dim_; }
  int alphabet_size() const { return static_cast<int>(maps_.size()); }
  const std::vector<Similarity>& maps() const { return maps_; }
  const Similarity& map(Symbol i) const { return maps_.at(i); }
  const TransitionMatrix& transitions() const { return transitions_; }
  std::vector<double> ratios() const;
  double ratio(const Word& w) const;

 private:
  int dim_ = 0;
  std::vector<Similarity> maps_;
  TransitionMatrix transitions_;
};

/// Depth-k approximant of the attractor: the image of [0,1]^n under S_word,
/// plus the ball B(center, radius) that contains it.
struct CellSample {
  Word word;
  Box box;
  Vector center;
  double radius = 0.0;
  double diameter = 0.0;
};

struct CodingPoint {
  Vector point;
  double error_radius = 0.0;
};

/// S_{w_0} o ... o S_{w_{k-1}}.
Similarity word_map(const SftSystem& sys, const Word& w);

/// S_w applied to the cube center; every point coded by an extension of w
/// lies within error_radius.
CodingPoint coding_point(const SftSystem& sys, const Word& w);

/// A point of F_A^{(i)}: the image of an eventually periodic admissible
/// sequence starting with i. Requires i to be live.
Vector attractor_point(const SftSystem& sys, Symbol i);

/// A point of the attractor inside the cylinder of w (w admissible, last
/// symbol live): S_{w without last}(attractor_point(last)).
Vector attractor_point(const SftSystem& sys, const Word& w);

/// Hard cap on the number of cells produced by sample_attractor.
inline constexpr std::size_t kMaxCells = 10'000'000;

/// One cell per admissible extension of root to total length depth, in
/// lexicographic order. Only extensions that continue to infinite
/// admissible sequences are kept.
std::vector<CellSample> sample_attractor(const SftSystem& sys, const Word& root, int depth);

/// Cells of several root symbols concatenated in root order.
std::vector<CellSample> sample_cylinders(const SftSystem& sys, const std::vector<Symbol>& roots, int depth);

/// Bracket for the diameter of the union of the cells.
EstimateBracket set_diameter(const std::vector<CellSample>& cells);

}  // namespace fracmeasure

#endif  // FRACMEASURE_SIMGEOM_HPP
