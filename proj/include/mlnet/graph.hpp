#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mlnet {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;

enum class SelfLoopPolicy { skip, reject };

struct Edge {
  std::string source;
  std::string target;
  Weight weight = 0;

  bool operator==(const Edge&) const = default;
};

struct VertexStats {
  std::string vertex;
  std::uint64_t k_in = 0;
  std::uint64_t k_out = 0;
  Weight s_in = 0;
  Weight s_out = 0;
  double e_in = 0.0;   // s_in / k_in, 0 when k_in == 0
  double e_out = 0.0;  // s_out / k_out, 0 when k_out == 0
};

// Directed graph over string labels with positive integer edge weights.
// Repeated occurrences of an ordered pair accumulate into one edge; self-pairs
// are never stored (skipped and counted, or rejected, per policy).
class WeightedDigraph {
 public:
  using Adjacency = std::map<VertexId, Weight>;

  explicit WeightedDigraph(SelfLoopPolicy policy = SelfLoopPolicy::skip) : policy_(policy) {}

  VertexId add_vertex(std::string_view label);

  // Adds one occurrence of i -> j. Returns false when the pair was a skipped
  // self-pair.
  bool add_occurrence(std::string_view i, std::string_view j);

  // Adds `w` occurrences at once (w > 0).
  bool add_edge(std::string_view i, std::string_view j, Weight w);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  Weight total_weight() const noexcept { return total_weight_; }
  std::size_t skipped_self_loops() const noexcept { return skipped_self_loops_; }
  SelfLoopPolicy policy() const noexcept { return policy_; }
  bool empty() const noexcept { return labels_.empty(); }

  std::optional<VertexId> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Adjacency& out_edges(VertexId v) const { return out_[v]; }
  const Adjacency& in_edges(VertexId v) const { return in_[v]; }

  Weight weight(VertexId i, VertexId j) const;
  Weight weight(std::string_view i, std::string_view j) const;

  // Vertex ids ordered by label (byte-wise).
  std::vector<VertexId> sorted_vertices() const;
  // Edges ordered lexicographically by (source, target).
  std::vector<Edge> sorted_edges() const;

  VertexStats vertex_stats(std::string_view label) const;
  VertexStats vertex_stats(VertexId v) const;

  // Label-level equality; insertion order and skip counters are ignored.
  bool same_graph(const WeightedDigraph& other) const;

 private:
  SelfLoopPolicy policy_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Adjacency> out_;
  std::vector<Adjacency> in_;
  std::size_t edge_count_ = 0;
  Weight total_weight_ = 0;
  std::size_t skipped_self_loops_ = 0;
};

// Undirected view: pair weight is w_ij + w_ji. Neighbour lists sorted by id.
struct UndirectedProjection {
  std::vector<std::vector<std::pair<VertexId, Weight>>> adjacency;
  Weight max_weight = 0;

  std::size_t degree(VertexId v) const { return adjacency[v].size(); }
  Weight weight(VertexId i, VertexId j) const;
};

UndirectedProjection project_undirected(const WeightedDigraph& g);

// Maximal weakly connected components, largest first; ties broken by the
// smallest label. Labels inside a component are sorted.
std::vector<std::vector<std::string>> weakly_connected_components(const WeightedDigraph& g);

// Same partition as ids, in the same order.
std::vector<std::vector<VertexId>> weak_component_ids(const WeightedDigraph& g);

enum class PathMode { undirected_projection, directed };

// Unweighted BFS hop counts from `source`; -1 marks unreachable vertices.
std::vector<std::int32_t> bfs_hops(const WeightedDigraph& g, VertexId source, PathMode mode);

// All reachable ordered pairs (i != j) with their hop distance.
std::map<std::pair<std::string, std::string>, std::uint32_t> shortest_path_lengths(
    const WeightedDigraph& g, PathMode mode);

// Edge-list text: `source<TAB>target<TAB>weight`, sorted by (source, target).
void write_edge_list(std::ostream& os, const WeightedDigraph& g);

// Lines starting with '#' are passed to `on_comment` (without the '#') and
// otherwise ignored. Blank lines are skipped.
WeightedDigraph read_edge_list(std::istream& is,
                               const std::function<void(std::string_view)>& on_comment = {});

}  // namespace mlnet
