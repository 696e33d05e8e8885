#include "fracmeasure/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fracmeasure/separation.hpp"

namespace fracmeasure {

namespace {

constexpr double kBracketWidth = 1e-13;

// Bisection for a strictly decreasing f with f(0) >= 0 >= f(hi).
DimensionResult bisect(const std::function<double(double)>& f, double hi) {
  DimensionResult r;
  const double f0 = f(0.0);
  if (f0 <= 1e-12) {
    r.degenerate = true;
    r.residual = f0;
    return r;
  }
  while (f(hi) > 0) hi = 2 * hi + 1;
  double lo = 0.0;
  while (hi - lo > kBracketWidth) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
    ++r.iterations;
  }
  r.lo = lo;
  r.hi = hi;
  r.s = lo + (hi - lo) / 2;
  r.residual = f(r.s);
  return r;
}

std::string describe_components(const std::vector<std::vector<int>>& comps) {
  std::ostringstream out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c) out << ' ';
    out << '{';
    for (std::size_t k = 0; k < comps[c].size(); ++k) out << (k ? "," : "") << comps[c][k];
    out << '}';
  }
  return out.str();
}

// Power iteration on an irreducible block shifted by the identity, which
// makes it primitive without moving the Perron vector.
PerronResult perron_irreducible(const Matrix& m) {
  const auto n = m.rows();
  const Matrix b = m + Matrix::Identity(n, n);
  Vector x = Vector::Constant(n, 1.0 / static_cast<double>(n));
  PerronResult r;
  double lo = 0, hi = 0;
  constexpr int kMaxIterations = 20000;
  for (int it = 0; it < kMaxIterations; ++it) {
    const Vector y = b * x;
    const Vector q = y.cwiseQuotient(x);
    lo = q.minCoeff();
    hi = q.maxCoeff();
    x = y / y.sum();
    r.iterations = it + 1;
    if (hi - lo <= 1e-15 * hi) break;
  }
  r.lo = lo - 1;
  r.hi = hi - 1;
  r.rho = (lo + hi) / 2 - 1;
  r.vector = x;
  if (hi - lo > 1e-12 * hi) {
    // Slow convergence; take the dominant eigenvalue directly.
    Eigen::EigenSolver<Matrix> es(m);
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < n; ++k)
      if (es.eigenvalues()(k).real() > es.eigenvalues()(best).real()) best = k;
    r.rho = std::clamp(es.eigenvalues()(best).real(), r.lo, r.hi);
    Vector v = es.eigenvectors().col(best).real().cwiseAbs();
    r.vector = v / v.sum();
  }
  return r;
}

}  // namespace

DimensionResult moran_dimension(const std::vector<double>& ratios, std::optional<int> ambient_dim) {
  if (ratios.empty()) throw std::domain_error("moran_dimension needs at least one ratio");
  double r_max = 0;
  for (double r : ratios) {
    if (!(r > 0 && r < 1)) throw std::domain_error("contraction ratio outside (0,1)");
    r_max = std::max(r_max, r);
  }
  auto f = [&](double s) {
    double sum = 0;
    for (double r : ratios) sum += std::pow(r, s);
    return sum - 1;
  };
  DimensionResult res = bisect(f, std::log(static_cast<double>(ratios.size())) / -std::log(r_max) + 1e-9);
  if (ambient_dim) res.exceeds_ambient = res.s > *ambient_dim + 1e-12;
  return res;
}

Matrix weighted_matrix(const GraphDirectedSystem& g, double s) {
  Matrix m = Matrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) m(e.source, e.target) += std::pow(e.map.ratio(), s);
  return m;
}

Matrix weighted_matrix(const SftSystem& sys, double s) {
  const int n = sys.alphabet_size();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double w = std::pow(sys.map(i).ratio(), s);
    for (int j = 0; j < n; ++j)
      if (sys.transitions().allows(i, j)) m(i, j) = w;
  }
  return m;
}

PerronResult perron(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::domain_error("perron needs a nonempty square matrix");
  if ((m.array() < 0).any()) throw std::domain_error("perron needs a nonnegative matrix");
  const auto n = m.rows();
  std::vector<std::vector<int>> adj(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) > 0) adj[i].push_back(static_cast<int>(j));
  const auto comps = strongly_connected_components(adj);

  PerronResult best;
  for (const auto& comp : comps) {
    PerronResult part;
    if (comp.size() == 1) {
      const double d = m(comp[0], comp[0]);
      part.rho = part.lo = part.hi = d;
      part.vector = Vector::Ones(1);
    } else {
      Matrix block(comp.size(), comp.size());
      for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = 0; b < comp.size(); ++b) block(a, b) = m(comp[a], comp[b]);
      part = perron_irreducible(block);
    }
    if (best.vector.size() == 0 || part.rho > best.rho) best = part;
  }
  if (comps.size() != 1) best.vector = Vector();
  return best;
}

double spectral_radius(const Matrix& m) { return perron(m).rho; }

DimensionResult gds_dimension(const GraphDirectedSystem& g) {
  const auto comps = strongly_connected_components(g.adjacency());
  if (comps.size() != 1) {
    throw PreconditionError("graph is not strongly connected; components " + describe_components(comps));
  }
  double r_max = 0;
  for (const auto& e : g.edges()) r_max = std::max(r_max, e.map.ratio());
  int max_degree = 1;
  for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.out_degree(v));
  auto f = [&](double s) { return spectral_radius(weighted_matrix(g, s)) - 1; };
  DimensionResult res = bisect(f, std::log(static_cast<double>(max_degree)) / -std::log(r_max) + 1e-9);
  res.exceeds_ambient = res.s > g.dim() + 1e-12;
  return res;
}

DimensionResult sft_dimension(const SftSystem& sys) {
  if (sys.transitions().is_full()) return moran_dimension(sys.ratios(), sys.dim());
  if (!is_irreducible(sys.transitions())) {
    throw PreconditionError("transition matrix is not irreducible; components " +
                            describe_components(strongly_connected_components(sys.transitions())));
  }
  double r_max = 0;
  for (double r : sys.ratios()) r_max = std::max(r_max, r);
  int max_degree = 1;
  for (int i = 0; i < sys.alphabet_size(); ++i) max_degree = std::max(max_degree, sys.transitions().out_degree(i));
  auto f = [&](double s) { return spectral_radius(weighted_matrix(sys, s)) - 1; };
  DimensionResult res = bisect(f, std::log(static_cast<double>(max_degree)) / -std::log(r_max) + 1e-9);
  res.exceeds_ambient = res.s > sys.dim() + 1e-12;
  return res;
}

Word connector_word(const TransitionMatrix& a, Symbol from, Symbol to) {
  // Distances to `to`, then a greedy walk through least symbols.
  std::vector<int> dist(a.size(), -1);
  std::queue<int> q;
  dist[to] = 0;
  q.push(to);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u = 0; u < a.size(); ++u) {
      if (a.allows(u, v) && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  // A word from `from` back to itself needs at least one step.
  int start_dist = dist[from];
  if (from == to) {
    start_dist = -1;
    for (int v = 0; v < a.size(); ++v)
      if (a.allows(from, v) && dist[v] >= 0 && (start_dist < 0 || dist[v] + 1 < start_dist)) start_dist = dist[v] + 1;
  }
  if (start_dist < 0) {
    throw PreconditionError("no admissible path from " + std::to_string(from) + " to " + std::to_string(to));
  }
  Word w{from};
  int remaining = start_dist;
  while (remaining > 0) {
    for (int v = 0; v < a.size(); ++v) {
      if (a.allows(w.back(), v) && dist[v] == remaining - 1) {
        w.push_back(v);
        break;
      }
    }
    --remaining;
  }
  return w;
}

ExhaustionFamily exhaustion_family(const SftSystem& sys, Symbol j, double s, int stages,
                                   const SeparationCertificate& sep) {
  const TransitionMatrix& a = sys.transitions();
  if (j < 0 || j >= a.size()) throw std::domain_error("root symbol outside the alphabet");
  if (stages < 0) throw std::domain_error("stage count must be nonnegative");
  if (!is_irreducible(a)) throw PreconditionError("exhaustion needs an irreducible transition matrix");
  if (!sep.strong() && !sep.open_cube_condition) {
    throw PreconditionError("exhaustion needs strong separation or disjoint first-level cube images");
  }

  std::vector<double> rs(a.size());
  for (int i = 0; i < a.size(); ++i) rs[i] = std::pow(sys.map(i).ratio(), s);
  const PerronResult pr = perron(weighted_matrix(sys, s));
  const Vector& v = pr.vector;

  std::vector<Word> connectors(a.size());
  ExhaustionFamily fam;
  fam.root = j;
  fam.stages = stages;
  fam.ratio_proxy = 1.0;
  double step_fraction = 1.0;
  for (int l = 0; l < a.size(); ++l) {
    if (l == j) continue;
    connectors[l] = connector_word(a, l, j);
    double r = 1.0;
    for (std::size_t k = 0; k + 1 < connectors[l].size(); ++k) r *= rs[connectors[l][k]];
    fam.ratio_proxy = std::min(fam.ratio_proxy, r);
    step_fraction = std::min(step_fraction, r * v(j) / v(l));
  }

  // A pending word carries its prefix weight r_{tau(w)}^s.
  struct Pending {
    Word word;
    double weight;
  };
  std::vector<Pending> pending;
  auto add = [&](Word w, double weight, std::vector<Pending>& out) {
    if (fam.words.size() + out.size() >= kMaxFamilyWords) {
      throw BudgetError("exhaustion family exceeds " + std::to_string(kMaxFamilyWords) + " words; use fewer stages");
    }
    if (w.back() == j) {
      fam.moran_sum += weight;
      fam.words.push_back(std::move(w));
    } else {
      out.push_back({std::move(w), weight});
    }
  };

  for (int k = 0; k < a.size(); ++k)
    if (a.allows(j, k)) add(Word{j, k}, rs[j], pending);
  const double initial_sum = fam.moran_sum;

  for (int stage = 1; stage < stages; ++stage) {
    std::vector<Pending> next;
    for (const Pending& p : pending) {
      const Word& c = connectors[p.word.back()];
      // tau(w) followed by c, plus every sibling branching off c.
      Word prefix(p.word.begin(), p.word.end() - 1);
      double weight = p.weight;
      for (std::size_t t = 0; t + 1 < c.size(); ++t) {
        prefix.push_back(c[t]);
        weight *= rs[c[t]];
        for (int x = 0; x < a.size(); ++x) {
          if (x == c[t + 1] || !a.allows(c[t], x)) continue;
          Word sibling = prefix;
          sibling.push_back(x);
          add(std::move(sibling), weight, next);
        }
      }
      prefix.push_back(c.back());
      add(std::move(prefix), weight, next);
    }
    pending = std::move(next);
  }
  fam.pending = pending.size();
  // Each refinement moves at least step_fraction of the pending mass into
  // completed words.
  fam.guarantee = 1.0 - (1.0 - initial_sum) * std::pow(1.0 - step_fraction, std::max(stages - 1, 0));
  return fam;
}

namespace {

struct TaggedBox {
  Box box;
  std::size_t tag;
};

bool boxes_interior_disjoint(std::vector<TaggedBox>& boxes) {
  constexpr double kTol = 1e-12;
  std::sort(boxes.begin(), boxes.end(), [](const auto& x, const auto& y) { return x.box.lo(0) < y.box.lo(0); });
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t k = i + 1; k < boxes.size() && boxes[k].box.lo(0) < boxes[i].box.hi(0) - kTol; ++k) {
      if (boxes[k].tag == boxes[i].tag) continue;
      const Vector extent = boxes[i].box.hi.cwiseMin(boxes[k].box.hi) - boxes[i].box.lo.cwiseMax(boxes[k].box.lo);
      if ((extent.array() > kTol).all()) return false;
    }
  }
  return true;
}

}  // namespace

bool family_cells_disjoint(const SftSystem& sys, const std::vector<Word>& words, int extra_depth) {
  constexpr std::size_t kMaxBoxes = 2'000'000;
  for (int d = 0; d <= extra_depth; ++d) {
    std::vector<TaggedBox> boxes;
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (auto& c : sample_attractor(sys, words[w], static_cast<int>(words[w].size()) + d)) {
        boxes.push_back({std::move(c.box), w});
      }
      if (boxes.size() > kMaxBoxes) return false;
    }
    if (boxes_interior_disjoint(boxes)) return true;
  }
  return false;
}

}  // namespace fracmeasure
