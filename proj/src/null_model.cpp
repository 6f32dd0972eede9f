#include <cmath>
#include <unordered_set>

#include "mlnet/motifs.hpp"
#include "mlnet/rng.hpp"

namespace mlnet {

namespace {

constexpr std::uint64_t key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> randomize_edges(const Topology& t,
                                                           double swaps_per_edge,
                                                           std::uint64_t seed) {
  auto edges = t.edges;
  const std::size_t k = edges.size();
  if (k < 2 || swaps_per_edge <= 0.0) return edges;

  std::unordered_set<std::uint64_t> present;
  present.reserve(k * 2);
  for (const auto& [a, b] : edges) present.insert(key(a, b));

  Rng rng(seed);
  const auto attempts =
      static_cast<std::uint64_t>(std::ceil(swaps_per_edge * static_cast<double>(k)));
  for (std::uint64_t n = 0; n < attempts; ++n) {
    const auto i = uniform_below(rng, k);
    auto j = uniform_below(rng, k - 1);
    if (j >= i) ++j;
    const auto [a, b] = edges[i];
    const auto [c, d] = edges[j];
    if (a == c || b == d) continue;  // swap would be the identity
    if (a == d || c == b) continue;  // self-loop
    if (present.count(key(a, d)) || present.count(key(c, b))) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    edges[i] = {a, d};
    edges[j] = {c, b};
  }
  return edges;
}

WeightedDigraph randomize_degree_preserving(const WeightedDigraph& g, double swaps_per_edge,
                                            std::uint64_t seed) {
  const auto t = Topology::from_graph(g);
  WeightedDigraph out;
  for (const auto& l : g.labels()) out.add_vertex(l);
  for (const auto& [a, b] : randomize_edges(t, swaps_per_edge, seed)) {
    out.add_occurrence(g.label(a), g.label(b));
  }
  return out;
}

}  // namespace mlnet
