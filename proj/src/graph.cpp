#include "mlnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <fmt/format.h>

#include "mlnet/error.hpp"

namespace mlnet {

VertexId WeightedDigraph::add_vertex(std::string_view label) {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  const auto id = static_cast<VertexId>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

bool WeightedDigraph::add_occurrence(std::string_view i, std::string_view j) {
  return add_edge(i, j, 1);
}

bool WeightedDigraph::add_edge(std::string_view i, std::string_view j, Weight w) {
  if (w == 0) throw Error(errc::invalid_argument, "edge weight must be positive");
  if (i == j) {
    if (policy_ == SelfLoopPolicy::reject) {
      throw Error(errc::self_loop_rejected, fmt::format("self-pair '{}'", i));
    }
    add_vertex(i);
    skipped_self_loops_ += w;
    return false;
  }
  const VertexId a = add_vertex(i);
  const VertexId b = add_vertex(j);
  auto [it, inserted] = out_[a].try_emplace(b, 0);
  it->second += w;
  in_[b][a] += w;
  if (inserted) ++edge_count_;
  total_weight_ += w;
  return true;
}

std::optional<VertexId> WeightedDigraph::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

Weight WeightedDigraph::weight(VertexId i, VertexId j) const {
  const auto& adj = out_[i];
  auto it = adj.find(j);
  return it == adj.end() ? 0 : it->second;
}

Weight WeightedDigraph::weight(std::string_view i, std::string_view j) const {
  auto a = find(i);
  auto b = find(j);
  if (!a || !b) return 0;
  return weight(*a, *b);
}

std::vector<VertexId> WeightedDigraph::sorted_vertices() const {
  std::vector<VertexId> ids(labels_.size());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  std::sort(ids.begin(), ids.end(),
            [&](VertexId a, VertexId b) { return labels_[a] < labels_[b]; });
  return ids;
}

std::vector<Edge> WeightedDigraph::sorted_edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (VertexId s : sorted_vertices()) {
    std::vector<std::pair<const std::string*, Weight>> targets;
    targets.reserve(out_[s].size());
    for (const auto& [t, w] : out_[s]) targets.emplace_back(&labels_[t], w);
    std::sort(targets.begin(), targets.end(),
              [](const auto& x, const auto& y) { return *x.first < *y.first; });
    for (const auto& [t, w] : targets) edges.push_back({labels_[s], *t, w});
  }
  return edges;
}

VertexStats WeightedDigraph::vertex_stats(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(errc::vertex_not_found, fmt::format("'{}'", label));
  return vertex_stats(*v);
}

VertexStats WeightedDigraph::vertex_stats(VertexId v) const {
  VertexStats st;
  st.vertex = labels_[v];
  st.k_out = out_[v].size();
  st.k_in = in_[v].size();
  for (const auto& [_, w] : out_[v]) st.s_out += w;
  for (const auto& [_, w] : in_[v]) st.s_in += w;
  st.e_out = st.k_out ? static_cast<double>(st.s_out) / static_cast<double>(st.k_out) : 0.0;
  st.e_in = st.k_in ? static_cast<double>(st.s_in) / static_cast<double>(st.k_in) : 0.0;
  return st;
}

bool WeightedDigraph::same_graph(const WeightedDigraph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
  for (const auto& l : labels_) {
    if (!other.contains(l)) return false;
  }
  return sorted_edges() == other.sorted_edges();
}

Weight UndirectedProjection::weight(VertexId i, VertexId j) const {
  const auto& adj = adjacency[i];
  auto it = std::lower_bound(adj.begin(), adj.end(), j,
                             [](const auto& p, VertexId x) { return p.first < x; });
  return (it != adj.end() && it->first == j) ? it->second : 0;
}

UndirectedProjection project_undirected(const WeightedDigraph& g) {
  UndirectedProjection p;
  const auto n = static_cast<VertexId>(g.vertex_count());
  p.adjacency.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    // Merge of two id-sorted maps.
    const auto& out = g.out_edges(v);
    const auto& in = g.in_edges(v);
    auto& adj = p.adjacency[v];
    adj.reserve(out.size() + in.size());
    auto o = out.begin();
    auto i = in.begin();
    while (o != out.end() || i != in.end()) {
      if (i == in.end() || (o != out.end() && o->first < i->first)) {
        adj.emplace_back(o->first, o->second);
        ++o;
      } else if (o == out.end() || i->first < o->first) {
        adj.emplace_back(i->first, i->second);
        ++i;
      } else {
        adj.emplace_back(o->first, o->second + i->second);
        ++o;
        ++i;
      }
    }
    for (const auto& [_, w] : adj) p.max_weight = std::max(p.max_weight, w);
  }
  return p;
}

std::vector<std::vector<VertexId>> weak_component_ids(const WeightedDigraph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<std::int64_t> comp(n, -1);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const auto c = static_cast<std::int64_t>(comps.size());
    comps.emplace_back();
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      auto visit = [&](VertexId u) {
        if (comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
      };
      for (const auto& [u, _] : g.out_edges(v)) visit(u);
      for (const auto& [u, _] : g.in_edges(v)) visit(u);
    }
  }
  const auto& labels = g.labels();
  for (auto& c : comps) {
    std::sort(c.begin(), c.end(), [&](VertexId a, VertexId b) { return labels[a] < labels[b]; });
  }
  std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return labels[a.front()] < labels[b.front()];
  });
  return comps;
}

std::vector<std::vector<std::string>> weakly_connected_components(const WeightedDigraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : weak_component_ids(g)) {
    auto& names = out.emplace_back();
    names.reserve(c.size());
    for (VertexId v : c) names.push_back(g.label(v));
  }
  return out;
}

std::vector<std::int32_t> bfs_hops(const WeightedDigraph& g, VertexId source, PathMode mode) {
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    auto visit = [&](VertexId u) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    };
    for (const auto& [u, _] : g.out_edges(v)) visit(u);
    if (mode == PathMode::undirected_projection) {
      for (const auto& [u, _] : g.in_edges(v)) visit(u);
    }
  }
  return dist;
}

std::map<std::pair<std::string, std::string>, std::uint32_t> shortest_path_lengths(
    const WeightedDigraph& g, PathMode mode) {
  std::map<std::pair<std::string, std::string>, std::uint32_t> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId s = 0; s < n; ++s) {
    const auto dist = bfs_hops(g, s, mode);
    for (VertexId t = 0; t < n; ++t) {
      if (t != s && dist[t] > 0) {
        out.emplace(std::pair{g.label(s), g.label(t)}, static_cast<std::uint32_t>(dist[t]));
      }
    }
  }
  return out;
}

}  // namespace mlnet
