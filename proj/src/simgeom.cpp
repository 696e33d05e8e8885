#include "fracmeasure/simgeom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fracmeasure/geometry.hpp"

namespace fracmeasure {

Similarity::Similarity(double ratio, Matrix orthogonal, Vector translation)
    : ratio_(ratio), orthogonal_(std::move(orthogonal)), translation_(std::move(translation)) {
  if (!(ratio_ > 0.0 && ratio_ < 1.0)) {
    throw ParseError("similarity ratio must lie in (0,1), got " + std::to_string(ratio_));
  }
  const auto n = translation_.size();
  if (n < 1) throw ParseError("similarity needs ambient dimension >= 1");
  if (orthogonal_.rows() != n || orthogonal_.cols() != n) {
    throw ParseError("orthogonal part must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  const double err = (orthogonal_.transpose() * orthogonal_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (err > 1e-12) throw ParseError("orthogonal part is not orthogonal (deviation " + std::to_string(err) + ")");
}

Similarity Similarity::scaling(double ratio, Vector translation) {
  const auto n = translation.size();
  return Similarity(ratio, Matrix::Identity(n, n), std::move(translation));
}

Vector Similarity::fixed_point() const {
  const auto n = translation_.size();
  const Matrix system = Matrix::Identity(n, n) - linear();
  return system.partialPivLu().solve(translation_);
}

bool Similarity::maps_unit_cube_into_itself(double tol) const {
  const Box b = unit_cube_image_box(*this);
  return (b.lo.array() >= -tol).all() && (b.hi.array() <= 1.0 + tol).all();
}

Similarity compose(const Similarity& a, const Similarity& b) {
  if (a.dim() != b.dim()) {
    throw std::domain_error("compose: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
  return Similarity(a.ratio() * b.ratio(), a.orthogonal() * b.orthogonal(), a(b.translation()));
}

double Box::distance(const Box& other) const {
  const Vector gap = (lo - other.hi).cwiseMax(other.lo - hi).cwiseMax(0.0);
  return gap.norm();
}

double Box::overlap_volume(const Box& other) const {
  const Vector extent = hi.cwiseMin(other.hi) - lo.cwiseMax(other.lo);
  if ((extent.array() <= 0.0).any()) return 0.0;
  return extent.prod();
}

bool Box::contains(const Box& inner, double tol) const {
  return (inner.lo.array() >= lo.array() - tol).all() && (inner.hi.array() <= hi.array() + tol).all();
}

void Box::expand(const Box& other) {
  lo = lo.cwiseMin(other.lo);
  hi = hi.cwiseMax(other.hi);
}

Box unit_cube_image_box(const Similarity& s) {
  // Row i of the linear part sends [0,1]^n onto [sum of negative entries,
  // sum of positive entries].
  const Matrix lin = s.linear();
  Box b;
  b.lo = s.translation() + lin.cwiseMin(0.0).rowwise().sum();
  b.hi = s.translation() + lin.cwiseMax(0.0).rowwise().sum();
  return b;
}

SftSystem::SftSystem(std::vector<Similarity> maps, TransitionMatrix transitions)
    : maps_(std::move(maps)), transitions_(std::move(transitions)) {
  if (maps_.empty()) throw ParseError("system needs at least one map");
  if (transitions_.size() != static_cast<int>(maps_.size())) {
    throw ParseError("transition matrix size " + std::to_string(transitions_.size()) +
                     " does not match the number of maps " + std::to_string(maps_.size()));
  }
  dim_ = maps_.front().dim();
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].dim() != dim_) throw ParseError("map " + std::to_string(i) + " has a different dimension");
    if (!maps_[i].maps_unit_cube_into_itself()) {
      throw ParseError("map " + std::to_string(i) + " does not send [0,1]^n into itself");
    }
  }
}

std::vector<double> SftSystem::ratios() const {
  std::vector<double> out;
  out.reserve(maps_.size());
  for (const auto& m : maps_) out.push_back(m.ratio());
  return out;
}

double SftSystem::ratio(const Word& w) const {
  double r = 1.0;
  for (Symbol x : w) r *= maps_.at(x).ratio();
  return r;
}

Similarity word_map(const SftSystem& sys, const Word& w) {
  if (w.empty()) throw std::domain_error("word_map of the empty word");
  Similarity out = sys.map(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) out = compose(out, sys.map(w[i]));
  return out;
}

CodingPoint coding_point(const SftSystem& sys, const Word& w) {
  if (w.empty()) throw std::domain_error("coding_point needs a nonempty word");
  if (!is_admissible(w, sys.transitions())) throw std::domain_error("word " + to_string(w) + " is not admissible");
  const Similarity m = word_map(sys, w);
  const int n = sys.dim();
  return {m(Vector::Constant(n, 0.5)), m.ratio() * std::sqrt(static_cast<double>(n)) / 2};
}

Vector attractor_point(const SftSystem& sys, Symbol i) {
  const TransitionMatrix& a = sys.transitions();
  const auto live = live_symbols(a);
  if (i < 0 || i >= a.size() || !live[i]) {
    throw std::domain_error("symbol " + std::to_string(i) + " starts no infinite admissible sequence");
  }
  // Walk along least live successors until a symbol repeats.
  Word path{i};
  std::vector<int> seen(a.size(), -1);
  seen[i] = 0;
  while (true) {
    int next = -1;
    for (int j = 0; j < a.size(); ++j) {
      if (a.allows(path.back(), j) && live[j]) {
        next = j;
        break;
      }
    }
    if (seen[next] >= 0) {
      const Word prefix(path.begin(), path.begin() + seen[next]);
      const Word cycle(path.begin() + seen[next], path.end());
      Vector p = word_map(sys, cycle).fixed_point();
      if (!prefix.empty()) p = word_map(sys, prefix)(p);
      return p;
    }
    seen[next] = static_cast<int>(path.size());
    path.push_back(next);
  }
}

Vector attractor_point(const SftSystem& sys, const Word& w) {
  if (w.empty()) throw std::domain_error("attractor_point needs a nonempty word");
  const Vector tail = attractor_point(sys, w.back());
  if (w.size() == 1) return tail;
  return word_map(sys, Word(w.begin(), w.end() - 1))(tail);
}

namespace {

// Number of live extensions of a word ending in `last` to `extra` more
// symbols, saturating at cap.
std::size_t count_extensions(const TransitionMatrix& a, const std::vector<bool>& live, Symbol last, int extra,
                             std::size_t cap) {
  std::vector<double> ending(a.size(), 0.0);
  ending[last] = 1.0;
  for (int step = 0; step < extra; ++step) {
    std::vector<double> next(a.size(), 0.0);
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < a.size(); ++j)
        if (ending[i] > 0 && live[j] && a.allows(i, j)) next[j] += ending[i];
    ending = std::move(next);
  }
  double total = 0;
  for (double x : ending) total += x;
  return total > static_cast<double>(cap) ? cap + 1 : static_cast<std::size_t>(total);
}

}  // namespace

std::vector<CellSample> sample_attractor(const SftSystem& sys, const Word& root, int depth) {
  const TransitionMatrix& a = sys.transitions();
  if (root.empty()) throw std::domain_error("sample_attractor needs a nonempty root word");
  if (!is_admissible(root, a)) throw std::domain_error("root " + to_string(root) + " is not admissible");
  if (depth < static_cast<int>(root.size())) {
    throw std::domain_error("depth " + std::to_string(depth) + " is shorter than the root word");
  }
  const auto live = live_symbols(a);
  if (!live[root.back()]) {
    throw std::domain_error("root " + to_string(root) + " starts no infinite admissible sequence");
  }
  const int extra = depth - static_cast<int>(root.size());
  if (count_extensions(a, live, root.back(), extra, kMaxCells) > kMaxCells) {
    int ok = 0;
    while (ok < extra && count_extensions(a, live, root.back(), ok + 1, kMaxCells) <= kMaxCells) ++ok;
    throw BudgetError("sampling to depth " + std::to_string(depth) + " exceeds " + std::to_string(kMaxCells) +
                      " cells; try depth " + std::to_string(static_cast<int>(root.size()) + ok));
  }

  const int n = sys.dim();
  const double half_diag = std::sqrt(static_cast<double>(n)) / 2;
  const Vector cube_center = Vector::Constant(n, 0.5);
  std::vector<CellSample> cells;
  Word word = root;
  std::function<void(const Similarity&)> descend = [&](const Similarity& m) {
    if (static_cast<int>(word.size()) == depth) {
      CellSample c;
      c.word = word;
      c.box = unit_cube_image_box(m);
      c.center = m(cube_center);
      c.radius = m.ratio() * half_diag;
      c.diameter = 2 * c.radius;
      cells.push_back(std::move(c));
      return;
    }
    for (int j = 0; j < a.size(); ++j) {
      if (!live[j] || !a.allows(word.back(), j)) continue;
      word.push_back(j);
      descend(compose(m, sys.map(j)));
      word.pop_back();
    }
  };
  descend(word_map(sys, root));
  return cells;
}

std::vector<CellSample> sample_cylinders(const SftSystem& sys, const std::vector<Symbol>& roots, int depth) {
  std::vector<CellSample> out;
  for (Symbol r : roots) {
    auto part = sample_attractor(sys, Word{r}, depth);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

EstimateBracket set_diameter(const std::vector<CellSample>& cells) {
  if (cells.empty()) throw std::domain_error("set_diameter of an empty cell list");
  std::vector<Vector> centers;
  centers.reserve(cells.size());
  double max_diam = 0;
  for (const auto& c : cells) {
    centers.push_back(c.center);
    max_diam = std::max(max_diam, c.diameter);
  }
  EstimateBracket b;
  b.lower = point_set_diameter(centers);
  b.upper = b.lower + 2 * max_diam;
  b.s = 1.0;
  b.lower_method = "max center distance";
  b.upper_method = "center distance + 2 cell diameters";
  return b;
}

}  // namespace fracmeasure
