#ifndef FRACMEASURE_TESTS_SUPPORT_HPP
#define FRACMEASURE_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>

#include <fracmeasure/fracmeasure.hpp>

namespace fracmeasure::test {

inline TransitionMatrix tm(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return TransitionMatrix(std::move(m));
}

inline TransitionMatrix random_matrix(std::mt19937_64& rng, int size, double density) {
  std::bernoulli_distribution coin(density);
  IntMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = coin(rng) ? 1 : 0;
  return TransitionMatrix(std::move(m));
}

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline Similarity line(double r, double t) { return Similarity::scaling(r, vec({t})); }

// Brute-force word count: all M^k words, filtered pairwise.
inline std::uint64_t brute_count(const TransitionMatrix& a, int k) {
  const int m = a.size();
  std::uint64_t total = 0, limit = 1;
  for (int i = 0; i < k; ++i) limit *= static_cast<std::uint64_t>(m);
  for (std::uint64_t code = 0; code < limit; ++code) {
    Word w(k);
    std::uint64_t c = code;
    for (int i = k - 1; i >= 0; --i) {
      w[i] = static_cast<int>(c % m);
      c /= m;
    }
    total += is_admissible(w, a);
  }
  return total;
}

// Random contracting system on [0,1]^n: ratios in [0.15, 0.5], orthogonal
// part identity or a reflection, translations keeping the cube inside itself.
inline SftSystem random_system(std::mt19937_64& rng, int n, int m, bool full) {
  std::uniform_real_distribution<double> ratio(0.15, 0.5), unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<Similarity> maps;
  for (int i = 0; i < m; ++i) {
    const double r = ratio(rng);
    Matrix o = Matrix::Identity(n, n);
    Vector t(n);
    for (int k = 0; k < n; ++k) {
      const bool flip = coin(rng);
      o(k, k) = flip ? -1 : 1;
      const double base = unit(rng) * (1 - r);
      t(k) = flip ? base + r : base;
    }
    maps.emplace_back(r, o, t);
  }
  TransitionMatrix a = TransitionMatrix::full(m);
  if (!full) {
    for (int tries = 0; tries < 100; ++tries) {
      a = random_matrix(rng, m, 0.6);
      if (is_irreducible(a)) break;
    }
    if (!is_irreducible(a)) a = TransitionMatrix::full(m);
  }
  return SftSystem(std::move(maps), a);
}

// Random graph-directed system on N vertices with the given edge count
// (>= N): every vertex gets one outgoing edge, the rest are placed freely.
inline GraphDirectedSystem random_gds(std::mt19937_64& rng, int vertices, int edge_count, int n = 1) {
  std::uniform_int_distribution<int> vertex(0, vertices - 1);
  std::uniform_real_distribution<double> ratio(0.1, 0.45), unit(0.0, 1.0);
  std::vector<GdsEdge> edges;
  for (int e = 0; e < edge_count; ++e) {
    const int source = e < vertices ? e : vertex(rng);
    const double r = ratio(rng);
    Vector t(n);
    for (int k = 0; k < n; ++k) t(k) = unit(rng) * (1 - r);
    edges.push_back({source, vertex(rng), Similarity::scaling(r, t)});
  }
  return GraphDirectedSystem(vertices, std::move(edges));
}

// Same, retried until strongly connected.
inline GraphDirectedSystem random_strong_gds(std::mt19937_64& rng, int vertices, int edge_count, int n = 1) {
  for (;;) {
    auto g = random_gds(rng, vertices, edge_count, n);
    if (g.strongly_connected()) return g;
  }
}

}  // namespace fracmeasure::test

#endif  // FRACMEASURE_TESTS_SUPPORT_HPP
