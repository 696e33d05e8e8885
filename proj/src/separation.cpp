#include "fracmeasure/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <unordered_map>

namespace fracmeasure {

std::string to_string(SeparationKind k) {
  switch (k) {
    case SeparationKind::strong:
      return "strong";
    case SeparationKind::failed:
      return "failed";
    case SeparationKind::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Node of a cylinder tree: the cell of an admissible word.
struct CylinderNode {
  Similarity map;
  Box box;
  Vector center;
  double radius = 0.0;
  Symbol last = 0;
  int length = 0;
};

class CylinderTree {
 public:
  CylinderTree(const SftSystem& sys, const std::vector<bool>& live) : sys_(sys), live_(live) {}

  int root(Symbol i) { return add(sys_.map(i), i, 1); }
  const CylinderNode& operator[](int k) const { return nodes_[k]; }

  std::vector<int> children(int k) {
    std::vector<int> out;
    for (Symbol j = 0; j < sys_.alphabet_size(); ++j) {
      if (live_[j] && sys_.transitions().allows(nodes_[k].last, j)) {
        out.push_back(add(compose(nodes_[k].map, sys_.map(j)), j, nodes_[k].length + 1));
      }
    }
    return out;
  }

 private:
  int add(Similarity map, Symbol last, int length) {
    CylinderNode n;
    n.box = unit_cube_image_box(map);
    n.center = map(Vector::Constant(map.dim(), 0.5));
    n.radius = map.ratio() * std::sqrt(static_cast<double>(map.dim())) / 2;
    n.map = std::move(map);
    n.last = last;
    n.length = length;
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  const SftSystem& sys_;
  const std::vector<bool>& live_;
  std::vector<CylinderNode> nodes_;
};

// Splits whichever side of a pair is coarser and not yet at full depth.
bool split_first(const CylinderNode& a, const CylinderNode& b, int depth) {
  if (a.length >= depth) return false;
  if (b.length >= depth) return true;
  return a.radius >= b.radius;
}

constexpr std::size_t kMaxPairVisits = 4'000'000;

// Minimum distance between depth-d cell boxes below the two roots, by
// best-first branch and bound. Stops early at distance 0.
double min_box_gap(CylinderTree& tree, int ra, int rb, int depth) {
  using Entry = std::pair<double, std::pair<int, int>>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.push({tree[ra].box.distance(tree[rb].box), {ra, rb}});
  double best = std::numeric_limits<double>::infinity();
  while (!queue.empty()) {
    const auto [dist, pair] = queue.top();
    queue.pop();
    if (dist >= best) break;
    const auto [a, b] = pair;
    if (tree[a].length >= depth && tree[b].length >= depth) {
      best = dist;
      if (best == 0) break;
      continue;
    }
    const bool first = split_first(tree[a], tree[b], depth);
    for (int c : tree.children(first ? a : b)) {
      const int x = first ? c : a, y = first ? b : c;
      const double d = tree[x].box.distance(tree[y].box);
      if (d < best) queue.push({d, {x, y}});
    }
  }
  return best;
}

enum class BallSearch { meet, apart, budget };

// Looks for two depth-d cells whose bounding balls meet. A descendant's ball
// has its center in the ancestor's ball and a smaller radius, which gives
// the pruning bound.
BallSearch find_meeting_balls(CylinderTree& tree, int ra, int rb, int depth) {
  std::vector<std::pair<int, int>> stack{{ra, rb}};
  std::size_t visits = 0;
  while (!stack.empty()) {
    if (++visits > kMaxPairVisits) return BallSearch::budget;
    const auto [a, b] = stack.back();
    stack.pop_back();
    const double gap = (tree[a].center - tree[b].center).norm() - tree[a].radius - tree[b].radius;
    if (tree[a].length >= depth && tree[b].length >= depth) {
      if (gap <= 0) return BallSearch::meet;
      continue;
    }
    if (gap > tree[a].radius + tree[b].radius) continue;
    const bool first = split_first(tree[a], tree[b], depth);
    for (int c : tree.children(first ? a : b)) stack.push_back(first ? std::make_pair(c, b) : std::make_pair(a, c));
  }
  return BallSearch::apart;
}

}  // namespace

SeparationCertificate check_strong_separation(const SftSystem& sys, int depth) {
  if (depth < 1) throw std::domain_error("separation depth must be >= 1");
  const auto live = live_symbols(sys.transitions());
  SeparationCertificate cert;
  cert.depth = depth;

  cert.open_cube_condition = true;
  for (Symbol a = 0; a < sys.alphabet_size(); ++a) {
    for (Symbol b = a + 1; b < sys.alphabet_size(); ++b) {
      const Box ba = unit_cube_image_box(sys.map(a));
      const Box bb = unit_cube_image_box(sys.map(b));
      const Vector extent = ba.hi.cwiseMin(bb.hi) - ba.lo.cwiseMax(bb.lo);
      if ((extent.array() > 1e-12).all()) cert.open_cube_condition = false;
    }
  }

  bool any_failed = false, all_strong = true;
  double min_gap = std::numeric_limits<double>::infinity();
  for (Symbol a = 0; a < sys.alphabet_size(); ++a) {
    if (!live[a]) continue;
    for (Symbol b = a + 1; b < sys.alphabet_size(); ++b) {
      if (!live[b]) continue;
      CylinderTree tree(sys, live);
      const int ra = tree.root(a), rb = tree.root(b);
      PairSeparation p{a, b, SeparationKind::inconclusive, min_box_gap(tree, ra, rb, depth)};
      if (p.gap > 0) {
        p.kind = SeparationKind::strong;
      } else if (find_meeting_balls(tree, ra, rb, depth) == BallSearch::meet) {
        p.kind = SeparationKind::failed;
      }
      any_failed |= p.kind == SeparationKind::failed;
      all_strong &= p.kind == SeparationKind::strong;
      min_gap = std::min(min_gap, p.gap);
      cert.pairs.push_back(p);
    }
  }
  if (cert.pairs.empty()) {
    // A single live symbol is trivially separated; there is no gap to report.
    cert.kind = SeparationKind::inconclusive;
    cert.gap = 0;
    return cert;
  }
  cert.kind = all_strong ? SeparationKind::strong : any_failed ? SeparationKind::failed : SeparationKind::inconclusive;
  cert.gap = all_strong ? min_gap : 0.0;
  return cert;
}

double delta0(const SeparationCertificate& cert) {
  if (!cert.strong()) throw PreconditionError("delta0 needs a strong separation certificate");
  // O is the open (gap/3)-neighbourhood of F; half the distance from F to
  // its complement.
  return cert.gap / 6;
}

double identity_deviation(const Similarity& si, const Similarity& sj) {
  const int n = si.dim();
  const Matrix inv_lin = si.orthogonal().transpose() / si.ratio();
  const Matrix lin = inv_lin * sj.linear() - Matrix::Identity(n, n);
  const Vector shift = inv_lin * (sj.translation() - si.translation());
  double best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vector x(n);
    for (int k = 0; k < n; ++k) x(k) = (mask >> k) & 1u;
    best = std::max(best, (lin * x + shift).norm());
  }
  return best;
}

namespace {

// Words are stored as parent links to keep large searches small.
struct MapEntry {
  std::size_t parent;
  Symbol last;
  Similarity map;
  double log_ratio;
};

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

Word word_of(const std::vector<MapEntry>& maps, std::size_t k) {
  Word w;
  for (; k != kNoParent; k = maps[k].parent) w.push_back(maps[k].last);
  std::reverse(w.begin(), w.end());
  return w;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Quantized identity of a map, with the last symbol when it constrains
// extensions.
std::vector<long long> map_key(const Similarity& m, Symbol last, bool full) {
  std::vector<long long> key;
  key.push_back(full ? -1 : last);
  key.push_back(std::llround(std::log(m.ratio()) * 1e9));
  for (Eigen::Index i = 0; i < m.orthogonal().size(); ++i) key.push_back(std::llround(m.orthogonal()(i) * 1e9));
  for (Eigen::Index i = 0; i < m.translation().size(); ++i) key.push_back(std::llround(m.translation()(i) * 1e12));
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<long long>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (long long x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

WspSearchResult wsp_witness_search(const SftSystem& sys, int max_len, double eps, std::size_t max_maps) {
  if (max_len < 1) throw std::domain_error("wsp search needs max_len >= 1");
  if (!(eps > 0)) throw std::domain_error("wsp search needs eps > 0");
  const TransitionMatrix& a = sys.transitions();
  const bool full = a.is_full();
  WspSearchResult result;

  // Breadth-first enumeration; the first word reaching a map is shortlex
  // least because words of one length are generated in lexicographic order.
  std::vector<MapEntry> maps;
  std::unordered_map<std::vector<long long>, std::size_t, KeyHash> seen;
  std::vector<std::size_t> frontier;
  for (Symbol i = 0; i < a.size(); ++i) {
    auto key = map_key(sys.map(i), i, full);
    if (seen.emplace(key, maps.size()).second) {
      frontier.push_back(maps.size());
      maps.push_back({kNoParent, i, sys.map(i), std::log(sys.map(i).ratio())});
    }
  }
  result.searched_length = 1;
  for (int len = 2; len <= max_len && !result.budget_exceeded; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (Symbol x = 0; x < a.size(); ++x) {
        if (!a.allows(maps[idx].last, x)) continue;
        Similarity m = compose(maps[idx].map, sys.map(x));
        auto key = map_key(m, x, full);
        if (!seen.emplace(key, maps.size()).second) continue;
        if (maps.size() >= max_maps) {
          result.budget_exceeded = true;
          break;
        }
        next.push_back(maps.size());
        const double lr = std::log(m.ratio());
        maps.push_back({idx, x, std::move(m), lr});
      }
      if (result.budget_exceeded) break;
    }
    frontier = std::move(next);
    if (!result.budget_exceeded) result.searched_length = len;
  }
  result.distinct_maps = maps.size();

  // Ratio classes. At the corner x = 0 the deviation is at least
  // |t_j - t_i| / r_i, and along an axis at least |r_j/r_i - 1| / 2.
  std::map<long long, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < maps.size(); ++k) classes[std::llround(maps[k].log_ratio * 1e9)].push_back(k);
  std::vector<std::vector<std::size_t>> by_class;
  std::vector<double> class_log;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t x, std::size_t y) { return maps[x].map.translation()(0) < maps[y].map.translation()(0); });
    class_log.push_back(maps[members.front()].log_ratio);
    by_class.push_back(std::move(members));
  }

  std::optional<std::pair<Word, Word>> best;
  double best_dev = 0;
  std::size_t best_i = 0, best_j = 0;
  for (std::size_t ci = 0; ci < by_class.size(); ++ci) {
    for (std::size_t cj = 0; cj < by_class.size(); ++cj) {
      if (std::abs(std::exp(class_log[cj] - class_log[ci]) - 1) > 2 * eps) continue;
      const auto& target = by_class[cj];
      for (std::size_t i : by_class[ci]) {
        const double ti = maps[i].map.translation()(0);
        const double window = eps * maps[i].map.ratio();
        auto it = std::lower_bound(target.begin(), target.end(), ti - window, [&](std::size_t k, double v) {
          return maps[k].map.translation()(0) < v;
        });
        for (; it != target.end() && maps[*it].map.translation()(0) <= ti + window; ++it) {
          const std::size_t j = *it;
          if (j == i) continue;
          ++result.compared_pairs;
          const double dev = identity_deviation(maps[i].map, maps[j].map);
          if (dev > eps || dev < 1e-9) continue;
          Word wi = word_of(maps, i), wj = word_of(maps, j);
          const bool better = !best || shortlex_less(wi, best->first) ||
                              (wi == best->first && shortlex_less(wj, best->second));
          if (better) {
            best = {std::move(wi), std::move(wj)};
            best_dev = dev;
            best_i = i;
            best_j = j;
          }
        }
      }
    }
  }
  if (best) {
    const auto& si = maps[best_i].map;
    const auto& sj = maps[best_j].map;
    WspWitness w;
    w.i = best->first;
    w.j = best->second;
    w.deviation = best_dev;
    w.ratio_mismatch = std::abs(sj.ratio() / si.ratio() - 1);
    w.rotation_mismatch = (si.orthogonal().transpose() * sj.orthogonal() - Matrix::Identity(si.dim(), si.dim())).norm();
    w.translation_mismatch = (si.orthogonal().transpose() * (sj.translation() - si.translation())).norm() / si.ratio();
    result.witness = std::move(w);
  }
  return result;
}

ProductCounterexample build_product_counterexample(int n, double s) {
  if (n < 2) throw std::domain_error("construction needs n >= 2");
  if (!(s > 1 && s <= n)) throw PreconditionError("construction needs 1 < s <= n");
  ProductCounterexample out;
  out.n = n;
  out.s = s;
  out.t = (s - 1) / (n - 1);
  out.r = std::pow(2.0, -1.0 / out.t);
  const double r = out.r;
  const Matrix id1 = Matrix::Identity(1, 1);
  out.e_maps = {Similarity(r, id1, Vector::Constant(1, 0.0)), Similarity(r, id1, Vector::Constant(1, 1 - r))};

  // Evenly spaced copies covering [0,1], plus one copy at an irrational
  // offset so that overlaps accumulate at the identity.
  const int k = static_cast<int>(std::ceil(1 / r - 1e-12));
  for (int i = 0; i < k; ++i) {
    const double t = k == 1 ? 0.0 : i * (1 - r) / (k - 1);
    out.first_factor.emplace_back(r, id1, Vector::Constant(1, t));
  }
  const double theta = (std::sqrt(5.0) - 1) / 2;
  out.first_factor.emplace_back(r, id1, Vector::Constant(1, theta * (1 - r)));

  out.product_size = out.first_factor.size() * static_cast<std::size_t>(std::pow(2.0, n - 1));
  if (out.product_size > kMaxProductMaps) return out;
  const Matrix idn = Matrix::Identity(n, n);
  for (const auto& f : out.first_factor) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      Vector t(n);
      t(0) = f.translation()(0);
      for (int c = 1; c < n; ++c) t(c) = ((mask >> (c - 1)) & 1u) ? 1 - r : 0.0;
      out.product_maps.emplace_back(r, idn, t);
    }
  }
  return out;
}

}  // namespace fracmeasure
