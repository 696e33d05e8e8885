#ifndef FRACMEASURE_SYSTEMS_HPP
#define FRACMEASURE_SYSTEMS_HPP

#include <string>
#include <vector>

#include "fracmeasure/simgeom.hpp"

namespace fracmeasure {

/// Directed multigraph whose edges carry similarities. Edge identity is its
/// position in `edges`, so parallel edges stay distinct.
struct GdsEdge {
  int source = 0;
  int target = 0;
  Similarity map;
};

class GraphDirectedSystem {
 public:
  GraphDirectedSystem() = default;
  /// Throws ParseError on bad vertex indices, mixed dimensions or a vertex
  /// without outgoing edges.
  GraphDirectedSystem(int vertex_count, std::vector<GdsEdge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dim() const { return edges_.empty() ? 0 : edges_.front().map.dim(); }
  const std::vector<GdsEdge>& edges() const { return edges_; }
  const GdsEdge& edge(int e) const { return edges_.at(e); }
  int out_degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;
  bool strongly_connected() const;

 private:
  int vertex_count_ = 0;
  std::vector<GdsEdge> edges_;
};

/// Symbol e of the SFT is edge e of the graph.
struct GdsToSft {
  SftSystem system;
  std::vector<int> symbol_of_edge;
  std::vector<int> edge_of_symbol;
};

/// Edge e of the graph comes from the 1-entry (source, target) of A.
struct SftToGds {
  GraphDirectedSystem graph;
  std::vector<std::pair<int, int>> entry_of_edge;
};

GdsToSft gds_to_sft(const GraphDirectedSystem& g);

/// Throws PreconditionError naming the first zero row of A.
SftToGds sft_to_gds(const SftSystem& sys);

struct RoundTripReport {
  double dimension_before = 0.0;
  double dimension_after = 0.0;
  std::vector<std::uint64_t> counts_before;  // word counts for k = 1..kRoundTripMaxLength
  std::vector<std::uint64_t> counts_after;
  bool ok = false;
  std::string detail;
};

inline constexpr int kRoundTripMaxLength = 6;

/// gds -> sft -> gds. Words are counted as edge paths on both graphs.
RoundTripReport round_trip_check(const GraphDirectedSystem& g);
/// sft -> gds -> sft. Words are counted as admissible words on both sides.
RoundTripReport round_trip_check(const SftSystem& sys);

/// Number of edge paths of length k (k edges) in g.
std::uint64_t count_paths(const GraphDirectedSystem& g, int k);

}  // namespace fracmeasure

#endif  // FRACMEASURE_SYSTEMS_HPP
