#include "fracmeasure/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace fracmeasure {

std::string to_string(const Word& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ')';
  return out.str();
}

TransitionMatrix::TransitionMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw ParseError("transition matrix must be square, got " + std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()));
  }
  if (entries_.rows() == 0) throw ParseError("transition matrix must have at least one symbol");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const int v = entries_(i, j);
      if (v != 0 && v != 1) {
        throw ParseError("transition matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be 0 or 1, got " + std::to_string(v));
      }
    }
  }
}

TransitionMatrix TransitionMatrix::full(int size) {
  if (size < 1) throw ParseError("alphabet size must be positive");
  return TransitionMatrix(IntMatrix::Ones(size, size));
}

bool TransitionMatrix::is_full() const { return (entries_.array() == 1).all(); }

int TransitionMatrix::count_ones() const { return entries_.sum(); }

int TransitionMatrix::out_degree(Symbol i) const { return entries_.row(i).sum(); }

Word shift(const Word& w) {
  if (w.empty()) throw std::domain_error("shift of the empty word");
  return Word(w.begin() + 1, w.end());
}

double sequence_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::domain_error("sequence_distance needs words of equal length");
  std::size_t n = 0;
  while (n < a.size() && a[n] == b[n]) ++n;
  if (n == a.size()) return 0.0;
  return std::ldexp(1.0, -static_cast<int>(n));
}

namespace {

void check_symbols(const Word& w, int size) {
  for (Symbol x : w) {
    if (x < 0 || x >= size) {
      throw std::domain_error("symbol " + std::to_string(x) + " outside alphabet of size " + std::to_string(size));
    }
  }
}

std::vector<std::vector<int>> adjacency_of(const TransitionMatrix& a) {
  std::vector<std::vector<int>> adj(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.allows(i, j)) adj[i].push_back(j);
  return adj;
}

}  // namespace

bool is_admissible(const Word& w, const TransitionMatrix& a) {
  check_symbols(w, a.size());
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!a.allows(w[i], w[i + 1])) return false;
  return true;
}

std::vector<Word> admissible_words(const TransitionMatrix& a, int k) {
  if (k < 1) throw std::domain_error("admissible_words needs k >= 1");
  for (int i = 0; i < a.size(); ++i) {
    if (a.out_degree(i) == 0) {
      throw PreconditionError("row " + std::to_string(i) +
                              " of the transition matrix is zero; its words do not extend");
    }
  }
  std::vector<Word> out;
  Word current;
  current.reserve(k);
  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int j = 0; j < a.size(); ++j) {
      if (current.empty() || a.allows(current.back(), j)) {
        current.push_back(j);
        extend();
        current.pop_back();
      }
    }
  };
  extend();
  return out;
}

std::uint64_t count_admissible(const TransitionMatrix& a, int k) {
  if (k < 1) throw std::domain_error("count_admissible needs k >= 1");
  std::vector<std::uint64_t> ending(a.size(), 1);
  for (int step = 1; step < k; ++step) {
    std::vector<std::uint64_t> next(a.size(), 0);
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < a.size(); ++j)
        if (a.allows(i, j)) next[j] += ending[i];
    ending = std::move(next);
  }
  return std::accumulate(ending.begin(), ending.end(), std::uint64_t{0});
}

std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
  // Tarjan, iterative.
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return comps;
}

std::vector<std::vector<int>> strongly_connected_components(const TransitionMatrix& a) {
  return strongly_connected_components(adjacency_of(a));
}

bool is_irreducible(const TransitionMatrix& a) {
  const auto comps = strongly_connected_components(a);
  if (comps.size() != 1) return false;
  // A single vertex without a loop has no cycle: (A^n)_{00} = 0 for all n.
  return a.size() > 1 || a.allows(0, 0);
}

int period(const TransitionMatrix& a) {
  if (!is_irreducible(a)) throw PreconditionError("period is defined for irreducible matrices only");
  std::vector<int> level(a.size(), -1);
  std::queue<int> q;
  level[0] = 0;
  q.push(0);
  int g = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v = 0; v < a.size(); ++v) {
      if (!a.allows(u, v)) continue;
      if (level[v] == -1) {
        level[v] = level[u] + 1;
        q.push(v);
      } else {
        g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
      }
    }
  }
  return g;
}

bool is_aperiodic(const TransitionMatrix& a) { return is_irreducible(a) && period(a) == 1; }

std::vector<bool> live_symbols(const TransitionMatrix& a) {
  std::vector<bool> live(a.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < a.size(); ++i) {
      if (!live[i]) continue;
      bool has_live_successor = false;
      for (int j = 0; j < a.size() && !has_live_successor; ++j) has_live_successor = a.allows(i, j) && live[j];
      if (!has_live_successor) {
        live[i] = false;
        changed = true;
      }
    }
  }
  return live;
}

Word KBlockRecoding::encode(const Word& original) const {
  const int window = block_length() - 1;
  if (static_cast<int>(original.size()) < window) throw std::domain_error("word shorter than the block window");
  Word out;
  for (std::size_t start = 0; start + window <= original.size(); ++start) {
    const Word block(original.begin() + start, original.begin() + start + window);
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), block);
    if (it == blocks.end() || *it != block) {
      throw std::domain_error("block " + to_string(block) + " is not a symbol of the recoded alphabet");
    }
    out.push_back(static_cast<Symbol>(it - blocks.begin()));
  }
  return out;
}

Word KBlockRecoding::decode(const Word& recoded) const {
  if (recoded.empty()) return {};
  check_symbols(recoded, static_cast<int>(blocks.size()));
  Word out = blocks[recoded.front()];
  for (std::size_t i = 1; i < recoded.size(); ++i) {
    const Word& prev = blocks[recoded[i - 1]];
    const Word& cur = blocks[recoded[i]];
    if (!std::equal(prev.begin() + 1, prev.end(), cur.begin())) {
      throw std::domain_error("recoded word " + to_string(recoded) + " has non-overlapping blocks");
    }
    out.push_back(cur.back());
  }
  return out;
}

KBlockRecoding recode_k_block(const KBlockSpec& spec) {
  const int k = spec.block_length;
  if (k < 2) throw std::domain_error("k-block recoding needs k >= 2");
  if (spec.alphabet_size < 1) throw std::domain_error("alphabet size must be positive");
  std::set<Word> forbidden;
  for (const Word& w : spec.forbidden) {
    if (static_cast<int>(w.size()) != k) {
      throw std::domain_error("forbidden word " + to_string(w) + " does not have length " + std::to_string(k));
    }
    check_symbols(w, spec.alphabet_size);
    forbidden.insert(w);
  }

  // Enumerate all (k-1)-words lexicographically, keep those with an allowed
  // one-symbol extension.
  KBlockRecoding result;
  Word block(k - 1, 0);
  while (true) {
    Word ext = block;
    ext.push_back(0);
    for (int a = 0; a < spec.alphabet_size; ++a) {
      ext.back() = a;
      if (!forbidden.count(ext)) {
        result.blocks.push_back(block);
        break;
      }
    }
    int pos = k - 2;
    while (pos >= 0 && block[pos] == spec.alphabet_size - 1) block[pos--] = 0;
    if (pos < 0) break;
    ++block[pos];
  }
  if (result.blocks.empty()) throw PreconditionError("subshift empty: every block of length k is forbidden");

  const int m = static_cast<int>(result.blocks.size());
  IntMatrix entries = IntMatrix::Zero(m, m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      const Word& bu = result.blocks[u];
      const Word& bv = result.blocks[v];
      if (!std::equal(bu.begin() + 1, bu.end(), bv.begin())) continue;
      Word joined = bu;
      joined.push_back(bv.back());
      if (!forbidden.count(joined)) entries(u, v) = 1;
    }
  }
  result.matrix = TransitionMatrix(std::move(entries));
  return result;
}

}  // namespace fracmeasure
