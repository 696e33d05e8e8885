#include "fracmeasure/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "fracmeasure/dimension.hpp"
#include "fracmeasure/geometry.hpp"

namespace fracmeasure {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cell_diameter(const CellSample& c) { return std::min(c.box.diagonal(), c.diameter); }

// Diameter bound for a growing run of cells: the smaller of the union box
// diagonal and (center spread + two radii). Buffers are reused across runs.
class RunBound {
 public:
  explicit RunBound(int n) : n_(n), lo_(n), hi_(n), cmin_(n), cmax_(n) {}

  void reset() { empty_ = true; }

  void add(const CellSample& c) {
    for (int k = 0; k < n_; ++k) {
      if (empty_) {
        lo_[k] = c.box.lo(k);
        hi_[k] = c.box.hi(k);
        cmin_[k] = cmax_[k] = c.center(k);
      } else {
        lo_[k] = std::min(lo_[k], c.box.lo(k));
        hi_[k] = std::max(hi_[k], c.box.hi(k));
        cmin_[k] = std::min(cmin_[k], c.center(k));
        cmax_[k] = std::max(cmax_[k], c.center(k));
      }
    }
    max_radius_ = empty_ ? c.radius : std::max(max_radius_, c.radius);
    empty_ = false;
  }

  double spread() const { return extent(cmin_, cmax_); }
  double diagonal() const { return extent(lo_, hi_); }
  double max_radius() const { return max_radius_; }
  double bound() const { return std::min(diagonal(), spread() + 2 * max_radius_); }

 private:
  double extent(const std::vector<double>& a, const std::vector<double>& b) const {
    double sq = 0;
    for (int k = 0; k < n_; ++k) sq += (b[k] - a[k]) * (b[k] - a[k]);
    return std::sqrt(sq);
  }

  int n_;
  std::vector<double> lo_, hi_, cmin_, cmax_;
  double max_radius_ = 0.0;
  bool empty_ = true;
};

// Best split of the cell sequence into contiguous runs of at most k cells,
// optionally of diameter <= delta.
CoverEstimate run_cover(const std::vector<CellSample>& cells, double s, int k, double delta) {
  const std::size_t n = cells.size();
  std::vector<double> best(n + 1, kInf);
  std::vector<std::size_t> from(n + 1, 0);
  std::vector<double> spread(n + 1, 0.0);
  best[0] = 0;
  RunBound run(static_cast<int>(cells.front().center.size()));
  for (std::size_t end = 1; end <= n; ++end) {
    run.reset();
    for (std::size_t start = end; start-- > 0 && end - start <= static_cast<std::size_t>(k);) {
      run.add(cells[start]);
      const double b = run.bound();
      if (b > delta) break;
      const double piece = std::pow(b, s);
      if (best[start] + piece < best[end]) {
        best[end] = best[start] + piece;
        from[end] = start;
        spread[end] = end - start > 1 ? run.spread() : 0.0;
      }
      // best[] is nondecreasing and longer runs only grow, so no earlier
      // start can beat the current best once one piece alone reaches it.
      if (piece >= best[end]) break;
    }
  }
  CoverEstimate out;
  out.value = best[n];
  double centers_only = 0;
  for (std::size_t end = n; end > 0; end = from[end]) {
    ++out.groups;
    centers_only += std::pow(std::min(spread[end], kInf), s);
  }
  out.inflation = std::max(0.0, out.value - centers_only);
  out.method = "contiguous runs of <= " + std::to_string(k) + " cells";
  return out;
}

void require_cells(const std::vector<CellSample>& cells) {
  if (cells.empty()) throw std::domain_error("estimate needs at least one cell");
}

}  // namespace

CoverEstimate content_upper(const std::vector<CellSample>& cells, double s, int budget) {
  require_cells(cells);
  if (budget < 1) throw std::domain_error("cover budget must be positive");
  CoverEstimate runs = run_cover(cells, s, budget, kInf);

  RunBound all(static_cast<int>(cells.front().center.size()));
  for (const auto& c : cells) all.add(c);
  std::vector<Vector> centers;
  centers.reserve(cells.size());
  for (const auto& c : cells) centers.push_back(c.center);
  const double centers_diam = point_set_diameter(centers);
  const double single = std::min(all.diagonal(), centers_diam + 2 * all.max_radius());
  if (std::pow(single, s) <= runs.value) {
    CoverEstimate out;
    out.value = std::pow(single, s);
    out.inflation = std::max(0.0, out.value - std::pow(centers_diam, s));
    out.groups = 1;
    out.method = "single set";
    return out;
  }
  return runs;
}

CoverEstimate hausdorff_measure_delta(const std::vector<CellSample>& cells, double s, double delta, int budget) {
  require_cells(cells);
  if (!(delta > 0)) throw std::domain_error("delta must be positive");
  if (budget < 1) throw std::domain_error("cover budget must be positive");
  double widest = 0;
  for (const auto& c : cells) widest = std::max(widest, cell_diameter(c));
  if (widest > delta) {
    throw PreconditionError("cells of diameter " + std::to_string(widest) + " are coarser than delta " +
                            std::to_string(delta) + "; sample deeper");
  }
  return run_cover(cells, s, budget, delta);
}

double NaturalMeasure::weight(const Word& w) const {
  if (w.empty()) throw std::domain_error("weight of the empty word");
  double m = v(w.back());
  for (std::size_t k = 0; k + 1 < w.size(); ++k) m *= rs[w[k]];
  return m;
}

NaturalMeasure natural_measure(const SftSystem& sys, double s) {
  NaturalMeasure nm;
  nm.s = s;
  for (double r : sys.ratios()) nm.rs.push_back(std::pow(r, s));
  if (sys.transitions().is_full()) {
    nm.v = Eigen::Map<const Vector>(nm.rs.data(), static_cast<Eigen::Index>(nm.rs.size()));
    nm.v /= nm.v.sum();
    return nm;
  }
  if (!is_irreducible(sys.transitions())) {
    throw PreconditionError("natural measure needs an irreducible transition matrix");
  }
  nm.v = perron(weighted_matrix(sys, s)).vector;
  return nm;
}

MassDistribution mass_distribution(const SftSystem& sys, const std::vector<Symbol>& roots, int depth) {
  const NaturalMeasure nm = natural_measure(sys, sft_dimension(sys).s);
  MassDistribution md;
  for (auto& c : sample_cylinders(sys, roots, depth)) {
    md.weights.push_back(nm.weight(c.word));
    md.total += md.weights.back();
    md.words.push_back(std::move(c.word));
  }
  return md;
}

namespace {

std::vector<bool> reachable_from(const TransitionMatrix& a, const std::vector<Symbol>& roots) {
  const auto live = live_symbols(a);
  std::vector<bool> seen(a.size(), false);
  std::vector<int> stack;
  for (Symbol r : roots)
    if (live[r] && !seen[r]) seen[r] = true, stack.push_back(r);
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < a.size(); ++v)
      if (a.allows(u, v) && live[v] && !seen[v]) seen[v] = true, stack.push_back(v);
  }
  return seen;
}

bool intervals_interior_disjoint(std::vector<std::pair<double, double>> iv) {
  std::sort(iv.begin(), iv.end());
  for (std::size_t k = 1; k < iv.size(); ++k)
    if (iv[k].first < iv[k - 1].second - 1e-12) return false;
  return true;
}

std::optional<double> projection_bound(const SftSystem& sys, const std::vector<Symbol>& roots,
                                       const NaturalMeasure& nm, int axis) {
  const TransitionMatrix& a = sys.transitions();
  for (const auto& m : sys.maps()) {
    const Matrix& o = m.orthogonal();
    if (std::abs(std::abs(o(axis, axis)) - 1) > 1e-12) return std::nullopt;
  }
  auto projected = [&](Symbol i) {
    const Box b = unit_cube_image_box(sys.map(i));
    return std::make_pair(b.lo(axis), b.hi(axis));
  };
  const auto live = live_symbols(a);
  std::vector<std::pair<double, double>> first;
  for (Symbol r : roots)
    if (live[r]) first.push_back(projected(r));
  if (!intervals_interior_disjoint(first)) return std::nullopt;
  const auto reach = reachable_from(a, roots);
  double c = 0;
  for (int l = 0; l < a.size(); ++l) {
    if (!reach[l]) continue;
    std::vector<std::pair<double, double>> children;
    for (int k = 0; k < a.size(); ++k)
      if (a.allows(l, k) && live[k]) children.push_back(projected(k));
    if (!intervals_interior_disjoint(children)) return std::nullopt;
    // Every projected cell ending in l carries density v_l / r_l.
    c = std::max(c, nm.v(l) / sys.map(l).ratio());
  }
  double mass = 0;
  for (Symbol r : roots) mass += nm.v(r);
  return mass / c;
}

}  // namespace

LowerBound content_lower(const SftSystem& sys, const std::vector<Symbol>& roots, double s, int depth,
                         LowerBoundRoute route) {
  LowerBound out;
  if (roots.empty()) throw std::domain_error("content_lower needs at least one root symbol");
  for (Symbol r : roots)
    if (r < 0 || r >= sys.alphabet_size()) throw std::domain_error("root symbol outside the alphabet");

  DimensionResult dim;
  try {
    dim = sft_dimension(sys);
  } catch (const PreconditionError& e) {
    out.reason = std::string("no lower bound: ") + e.what();
    return out;
  }
  if (std::abs(dim.s - s) > 1e-9) {
    out.reason = "no lower bound: the natural measure lives at s = " + std::to_string(dim.s);
    return out;
  }
  const NaturalMeasure nm = natural_measure(sys, s);
  double mass = 0;
  for (Symbol r : roots) mass += nm.v(r);

  std::vector<std::string> reasons;
  if (route != LowerBoundRoute::projection) {
    const SeparationCertificate cert = check_strong_separation(sys, depth);
    if (cert.strong()) {
      // mu(U) <= C diam(U)^s with C = gap^{-s} max(1, max_l v_l / r_l^s).
      double worst = 1.0;
      const auto live = live_symbols(sys.transitions());
      for (int l = 0; l < sys.alphabet_size(); ++l)
        if (live[l]) worst = std::max(worst, nm.v(l) / nm.rs[l]);
      out.value = std::pow(cert.gap, s) * mass / worst;
      out.method = "mass distribution, separation gap " + std::to_string(cert.gap);
    } else {
      reasons.push_back("separation " + to_string(cert.kind));
    }
  }
  if (route != LowerBoundRoute::separation) {
    if (std::abs(s - 1) > 1e-12) {
      reasons.push_back("projection needs s = 1");
    } else {
      bool any = false;
      for (int axis = 0; axis < sys.dim(); ++axis) {
        const auto v = projection_bound(sys, roots, nm, axis);
        if (!v) continue;
        any = true;
        if (!out.value || *v > *out.value) {
          out.value = *v;
          out.method = "mass distribution, projection to axis " + std::to_string(axis);
        }
      }
      if (!any) reasons.push_back("no axis with disjoint projected cells");
    }
  }
  if (!out.value) {
    out.reason = "no lower bound:";
    for (const auto& r : reasons) out.reason += " " + r + ";";
    out.reason.pop_back();
  }
  return out;
}

double BallPacking::value(double s) const {
  double v = 0;
  for (const auto& b : balls) v += std::pow(b.diameter, s);
  return v;
}

bool verify_packing(const BallPacking& p, double tol) {
  for (std::size_t i = 0; i < p.balls.size(); ++i) {
    const auto& bi = p.balls[i];
    if (!(bi.diameter > 0) || bi.diameter > p.delta + tol) return false;
    for (std::size_t j = i + 1; j < p.balls.size(); ++j) {
      const auto& bj = p.balls[j];
      if ((bi.center - bj.center).norm() < (bi.diameter + bj.diameter) / 2 - tol) return false;
    }
  }
  return true;
}

namespace {

constexpr double kShrink = 1 - 1e-9;
constexpr std::size_t kMaxCandidates = 1u << 16;

// Largest diameter for a ball at c given the other balls.
double room(const Vector& c, const std::vector<Ball>& balls, std::size_t skip, double delta) {
  double d = delta;
  for (std::size_t j = 0; j < balls.size(); ++j) {
    if (j == skip) continue;
    d = std::min(d, 2 * (c - balls[j].center).norm() * kShrink - balls[j].diameter);
  }
  return d;
}

void ascend(std::vector<Ball>& balls, double delta) {
  for (auto& b : balls) b.diameter = 0;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    double d = delta;
    for (std::size_t j = 0; j < balls.size(); ++j)
      if (j != i) d = std::min(d, (balls[i].center - balls[j].center).norm() * kShrink);
    balls[i].diameter = d;
  }
  for (int sweep = 0; sweep < 50; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < balls.size(); ++i) {
      const double d = room(balls[i].center, balls, i, delta);
      if (d > balls[i].diameter + 1e-15) {
        balls[i].diameter = d;
        changed = true;
      }
    }
    if (!changed) break;
  }
}

double packing_value(const std::vector<Ball>& balls, double s) {
  double v = 0;
  for (const auto& b : balls)
    if (b.diameter > 0) v += std::pow(b.diameter, s);
  return v;
}

std::vector<Ball> greedy_packing(const std::vector<Vector>& candidates, double delta, double theta, int budget) {
  const double spacing = delta * (1 - theta);
  std::vector<Ball> balls;
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& b : balls) {
      if ((c - b.center).norm() < spacing) {
        ok = false;
        break;
      }
    }
    if (ok) balls.push_back({c, 0.0});
  }
  ascend(balls, delta);

  // Move single centers to nearby candidates when that frees room.
  for (int round = 0; round < budget; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < balls.size(); ++i) {
      const Vector here = balls[i].center;
      double best = balls[i].diameter;
      const Vector* target = nullptr;
      for (const auto& c : candidates) {
        if ((c - here).norm() > delta) continue;
        const double d = room(c, balls, i, delta);
        if (d > best + 1e-12) {
          best = d;
          target = &c;
        }
      }
      if (target) {
        balls[i] = {*target, best};
        improved = true;
      }
    }
    if (!improved) break;
    ascend(balls, delta);
  }

  // Fill remaining gaps with smaller balls.
  for (const auto& c : candidates) {
    const double d = room(c, balls, balls.size(), delta);
    if (d > 0) balls.push_back({c, d});
  }
  std::erase_if(balls, [](const Ball& b) { return !(b.diameter > 0); });
  return balls;
}

// Volume of the (delta/2)-neighbourhood of the union of the cell boxes,
// from above; only for n <= 2.
std::optional<double> neighbourhood_volume(const std::vector<CellSample>& cells, double delta) {
  const int n = cells.front().box.dim();
  const double h = delta / 2;
  if (n == 1) {
    std::vector<std::pair<double, double>> iv;
    for (const auto& c : cells) iv.emplace_back(c.box.lo(0) - h, c.box.hi(0) + h);
    std::sort(iv.begin(), iv.end());
    double total = 0, lo = iv.front().first, hi = iv.front().second;
    for (const auto& [a, b] : iv) {
      if (a > hi) {
        total += hi - lo;
        lo = a;
        hi = b;
      } else {
        hi = std::max(hi, b);
      }
    }
    return total + (hi - lo);
  }
  if (n == 2) {
    Box all = cells.front().box;
    for (const auto& c : cells) all.expand(c.box);
    const double step = delta / 16;
    const auto nx = static_cast<long long>(std::ceil((all.hi(0) - all.lo(0) + delta) / step)) + 1;
    const auto ny = static_cast<long long>(std::ceil((all.hi(1) - all.lo(1) + delta) / step)) + 1;
    if (nx * ny > 4'000'000) return std::nullopt;
    std::vector<char> hit(static_cast<std::size_t>(nx * ny), 0);
    const double x0 = all.lo(0) - h, y0 = all.lo(1) - h;
    for (const auto& c : cells) {
      const auto ix0 = std::max(0LL, static_cast<long long>(std::floor((c.box.lo(0) - h - x0) / step)));
      const auto ix1 = std::min(nx - 1, static_cast<long long>(std::floor((c.box.hi(0) + h - x0) / step)));
      const auto iy0 = std::max(0LL, static_cast<long long>(std::floor((c.box.lo(1) - h - y0) / step)));
      const auto iy1 = std::min(ny - 1, static_cast<long long>(std::floor((c.box.hi(1) + h - y0) / step)));
      for (auto ix = ix0; ix <= ix1; ++ix)
        for (auto iy = iy0; iy <= iy1; ++iy) hit[static_cast<std::size_t>(ix * ny + iy)] = 1;
    }
    return static_cast<double>(std::count(hit.begin(), hit.end(), 1)) * step * step;
  }
  return std::nullopt;
}

// Lower bound for mu_a(B(y, rho)) / (2 rho)^s over symbols a, points y of
// F^a and radii rho in [r_min R, R].
std::optional<double> density_floor(const SftSystem& sys, const NaturalMeasure& nm, double s, double big_r) {
  const auto live = live_symbols(sys.transitions());
  double r_min = 1;
  for (double r : sys.ratios()) r_min = std::min(r_min, r);
  const double rho_min = r_min * big_r;
  constexpr double kStep = 1.03;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::log(big_r / rho_min) / std::log(kStep))));
  std::vector<double> rho(steps + 1);
  for (int k = 0; k < steps; ++k) rho[k] = rho_min * std::pow(kStep, k);
  rho[steps] = big_r;

  double floor = kInf;
  for (Symbol a = 0; a < sys.alphabet_size(); ++a) {
    if (!live[a]) continue;
    // Refine until cells are small against the smallest radius.
    int depth = 1;
    std::vector<CellSample> cells = sample_attractor(sys, Word{a}, depth);
    while (true) {
      double widest = 0;
      for (const auto& c : cells) widest = std::max(widest, c.radius);
      if (widest <= rho_min / 32) break;
      if (cells.size() > 2048) break;
      cells = sample_attractor(sys, Word{a}, ++depth);
    }
    std::vector<double> w(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) w[k] = nm.weight(cells[k].word);
    std::vector<std::pair<double, double>> reach(cells.size());
    for (const auto& y : cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) {
        reach[k] = {(cells[k].center - y.center).norm() + cells[k].radius + y.radius, w[k]};
      }
      std::sort(reach.begin(), reach.end());
      std::size_t idx = 0;
      double mass = 0;
      for (int k = 0; k < steps; ++k) {
        while (idx < reach.size() && reach[idx].first <= rho[k]) mass += reach[idx++].second;
        floor = std::min(floor, mass / std::pow(2 * rho[k + 1], s));
      }
    }
  }
  if (!(floor > 0)) return std::nullopt;
  return floor;
}

}  // namespace

PackingEstimate packing_premeasure_delta(const SftSystem& sys, const std::vector<Symbol>& roots, int depth, double s,
                                         double delta, int budget) {
  if (!(delta > 0)) throw std::domain_error("delta must be positive");
  if (roots.empty()) throw std::domain_error("packing needs at least one root symbol");
  const std::vector<CellSample> cells = sample_cylinders(sys, roots, depth);
  double widest = 0;
  for (const auto& c : cells) widest = std::max(widest, cell_diameter(c));
  if (widest > delta / 4) {
    throw PreconditionError("sampling too coarse: cell diameter " + std::to_string(widest) + " exceeds delta/4");
  }

  // Candidate centers are points of the attractor: S_{tau(w)} of a fixed
  // point reached from the last symbol. Sample finer than the cells when
  // affordable.
  std::vector<Vector> tails(sys.alphabet_size());
  const auto live = live_symbols(sys.transitions());
  for (Symbol l = 0; l < sys.alphabet_size(); ++l)
    if (live[l]) tails[l] = attractor_point(sys, l);
  int cdepth = depth;
  std::vector<CellSample> fine = cells;
  while (true) {
    double w = 0;
    for (const auto& c : fine) w = std::max(w, cell_diameter(c));
    if (w <= delta / 256) break;
    std::vector<CellSample> next;
    try {
      next = sample_cylinders(sys, roots, cdepth + 1);
    } catch (const BudgetError&) {
      break;
    }
    if (next.size() > kMaxCandidates) break;
    fine = std::move(next);
    ++cdepth;
  }
  std::vector<Vector> candidates;
  candidates.reserve(fine.size());
  for (const auto& c : fine) {
    const Word prefix(c.word.begin(), c.word.end() - 1);
    candidates.push_back(prefix.empty() ? tails[c.word.back()] : word_map(sys, prefix)(tails[c.word.back()]));
  }

  PackingEstimate out;
  out.bracket.s = s;
  out.packing.delta = delta;
  double best = -1;
  for (double theta : {0.0, 0.0025, 0.005, 0.01, 0.02, 0.05}) {
    auto balls = greedy_packing(candidates, delta, theta, budget);
    const double v = packing_value(balls, s);
    if (v > best) {
      best = v;
      out.packing.balls = std::move(balls);
    }
  }
  out.bracket.lower = best;
  out.bracket.lower_method = "greedy packing of " + std::to_string(out.packing.balls.size()) + " balls";

  out.bracket.upper = kInf;
  out.bracket.upper_method = "none";
  if (std::abs(s - sys.dim()) < 1e-12) {
    if (auto vol = neighbourhood_volume(cells, delta)) {
      const double unit = unit_ball_volume(sys.dim()) / std::pow(2.0, sys.dim());
      out.bracket.upper = *vol / unit;
      out.bracket.upper_method = "volume of the delta/2-neighbourhood";
    }
  }
  try {
    const double dim = sft_dimension(sys).s;
    if (std::abs(dim - s) <= 1e-9) {
      const NaturalMeasure nm = natural_measure(sys, s);
      if (auto c = density_floor(sys, nm, s, delta / 2)) {
        // Balls centered in the target may also catch mass outside it unless
        // every other piece is farther than delta/2.
        double numerator = 0;
        for (Symbol r : roots) numerator += nm.v(r);
        bool all_roots = true;
        for (Symbol i = 0; i < sys.alphabet_size(); ++i)
          if (live[i] && std::find(roots.begin(), roots.end(), i) == roots.end()) all_roots = false;
        if (!all_roots) {
          const auto cert = check_strong_separation(sys, std::max(1, depth / 2));
          if (!(cert.strong() && cert.gap > delta / 2)) numerator = 1.0;
        }
        const double u2 = numerator / *c;
        if (u2 < out.bracket.upper) {
          out.bracket.upper = u2;
          out.bracket.upper_method = "natural measure density floor";
        }
      }
    }
  } catch (const PreconditionError&) {
    // No natural measure; keep the other bound.
  }
  return out;
}

AhlforsReport ahlfors_check(const SftSystem& sys, double s, int samples, const std::vector<double>& radii, int depth) {
  if (samples < 1 || radii.empty()) throw std::domain_error("ahlfors_check needs samples and radii");
  const NaturalMeasure nm = natural_measure(sys, sft_dimension(sys).s);
  const auto live = live_symbols(sys.transitions());
  std::vector<Symbol> roots;
  for (Symbol i = 0; i < sys.alphabet_size(); ++i)
    if (live[i]) roots.push_back(i);
  const auto cells = sample_cylinders(sys, roots, depth);
  std::vector<double> w(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) w[k] = nm.weight(cells[k].word);

  std::mt19937_64 rng(20160501);
  AhlforsReport rep{kInf, 0.0};
  for (int t = 0; t < samples; ++t) {
    Word word{roots[rng() % roots.size()]};
    for (int k = 1; k < depth; ++k) {
      std::vector<Symbol> next;
      for (Symbol j = 0; j < sys.alphabet_size(); ++j)
        if (live[j] && sys.transitions().allows(word.back(), j)) next.push_back(j);
      word.push_back(next[rng() % next.size()]);
    }
    const Vector x = attractor_point(sys, word);
    for (double r : radii) {
      double mass = 0;
      for (std::size_t k = 0; k < cells.size(); ++k)
        if ((cells[k].center - x).norm() <= r) mass += w[k];
      const double ratio = mass / std::pow(r, s);
      rep.c_low = std::min(rep.c_low, ratio);
      rep.c_high = std::max(rep.c_high, ratio);
    }
  }
  return rep;
}

std::string to_string(GapClass g) {
  switch (g) {
    case GapClass::consistent_with_equality:
      return "consistent with equality";
    case GapClass::strict_gap:
      return "strict gap certified";
    case GapClass::inconclusive:
      return "inconclusive";
  }
  return "?";
}

EqualityGapReport equality_gap_report(const std::vector<CellSample>& cells, double s, const std::vector<double>& deltas,
                                      int budget, double tolerance) {
  if (deltas.empty()) throw std::domain_error("equality_gap_report needs at least one delta");
  EqualityGapReport rep;
  rep.delta = *std::min_element(deltas.begin(), deltas.end());
  rep.tolerance = tolerance;
  rep.content = content_upper(cells, s, budget).value;
  rep.measure = hausdorff_measure_delta(cells, s, rep.delta, budget).value;
  if (rep.content * (1 + tolerance) < rep.measure * (1 - tolerance)) {
    rep.classification = GapClass::strict_gap;
  } else if (rep.content * (1 - tolerance) <= rep.measure * (1 + tolerance)) {
    rep.classification = GapClass::consistent_with_equality;
  }
  return rep;
}

int count_clusters(const std::vector<CellSample>& cells, double scale) {
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if ((cells[i].center - cells[j].center).norm() <= scale) parent[find(i)] = find(j);
  int count = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) count += find(i) == static_cast<int>(i);
  return count;
}

}  // namespace fracmeasure
