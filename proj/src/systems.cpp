#include "fracmeasure/systems.hpp"

#include <cmath>
#include <sstream>

#include "fracmeasure/dimension.hpp"

namespace fracmeasure {

GraphDirectedSystem::GraphDirectedSystem(int vertex_count, std::vector<GdsEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw ParseError("graph needs at least one vertex");
  if (edges_.empty()) throw ParseError("graph needs at least one edge");
  const int n = edges_.front().map.dim();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.source < 0 || edge.source >= vertex_count_ || edge.target < 0 || edge.target >= vertex_count_) {
      throw ParseError("edge " + std::to_string(e) + " refers to a vertex outside 0.." +
                       std::to_string(vertex_count_ - 1));
    }
    if (edge.map.dim() != n) throw ParseError("edge " + std::to_string(e) + " has a different dimension");
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (out_degree(v) == 0) throw ParseError("vertex " + std::to_string(v) + " has no outgoing edge");
  }
}

int GraphDirectedSystem::out_degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += e.source == v;
  return d;
}

std::vector<std::vector<int>> GraphDirectedSystem::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const auto& e : edges_) adj[e.source].push_back(e.target);
  return adj;
}

bool GraphDirectedSystem::strongly_connected() const {
  return strongly_connected_components(adjacency()).size() == 1;
}

GdsToSft gds_to_sft(const GraphDirectedSystem& g) {
  const int m = g.edge_count();
  IntMatrix a = IntMatrix::Zero(m, m);
  std::vector<Similarity> maps;
  maps.reserve(m);
  for (int e = 0; e < m; ++e) {
    maps.push_back(g.edge(e).map);
    for (int f = 0; f < m; ++f) a(e, f) = g.edge(e).target == g.edge(f).source ? 1 : 0;
  }
  GdsToSft out{SftSystem(std::move(maps), TransitionMatrix(std::move(a))), {}, {}};
  out.symbol_of_edge.resize(m);
  out.edge_of_symbol.resize(m);
  for (int e = 0; e < m; ++e) out.symbol_of_edge[e] = out.edge_of_symbol[e] = e;
  return out;
}

SftToGds sft_to_gds(const SftSystem& sys) {
  const TransitionMatrix& a = sys.transitions();
  for (int i = 0; i < a.size(); ++i) {
    if (a.out_degree(i) == 0) {
      throw PreconditionError("row " + std::to_string(i) + " of the transition matrix is zero");
    }
  }
  std::vector<GdsEdge> edges;
  std::vector<std::pair<int, int>> entries;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (!a.allows(i, j)) continue;
      edges.push_back({i, j, sys.map(i)});
      entries.emplace_back(i, j);
    }
  }
  return {GraphDirectedSystem(a.size(), std::move(edges)), std::move(entries)};
}

std::uint64_t count_paths(const GraphDirectedSystem& g, int k) {
  if (k < 1) throw std::domain_error("count_paths needs k >= 1");
  // ending[v] = number of paths of the current length ending at v.
  std::vector<std::uint64_t> ending(g.vertex_count(), 0);
  for (const auto& e : g.edges()) ++ending[e.target];
  for (int step = 1; step < k; ++step) {
    std::vector<std::uint64_t> next(g.vertex_count(), 0);
    for (const auto& e : g.edges()) next[e.target] += ending[e.source];
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto x : ending) total += x;
  return total;
}

namespace {

void finish(RoundTripReport& r) {
  std::ostringstream detail;
  const bool dims = std::abs(r.dimension_before - r.dimension_after) <= 1e-10;
  const bool counts = r.counts_before == r.counts_after;
  r.ok = dims && counts;
  detail.precision(15);
  detail << "dimension " << r.dimension_before << " -> " << r.dimension_after << (dims ? " ok" : " MISMATCH");
  detail << "; word counts " << (counts ? "ok" : "MISMATCH");
  r.detail = detail.str();
}

}  // namespace

RoundTripReport round_trip_check(const GraphDirectedSystem& g) {
  const GdsToSft there = gds_to_sft(g);
  const SftToGds back = sft_to_gds(there.system);
  RoundTripReport r;
  r.dimension_before = gds_dimension(g).s;
  r.dimension_after = gds_dimension(back.graph).s;
  for (int k = 1; k <= kRoundTripMaxLength; ++k) {
    // A path of k edges in g is an admissible k-word over the edge alphabet,
    // which is a path of k-1 edges in the graph built back from it.
    r.counts_before.push_back(count_paths(g, k));
    r.counts_after.push_back(k == 1 ? static_cast<std::uint64_t>(back.graph.vertex_count())
                                    : count_paths(back.graph, k - 1));
  }
  finish(r);
  return r;
}

RoundTripReport round_trip_check(const SftSystem& sys) {
  const SftToGds there = sft_to_gds(sys);
  const GdsToSft back = gds_to_sft(there.graph);
  RoundTripReport r;
  r.dimension_before = sft_dimension(sys).s;
  r.dimension_after = sft_dimension(back.system).s;
  for (int k = 1; k <= kRoundTripMaxLength; ++k) {
    // An admissible (k+1)-word of sys is a path of k edges in the graph,
    // which is an admissible k-word over the edge alphabet.
    r.counts_before.push_back(count_admissible(sys.transitions(), k + 1));
    r.counts_after.push_back(count_admissible(back.system.transitions(), k));
  }
  finish(r);
  return r;
}

}  // namespace fracmeasure
