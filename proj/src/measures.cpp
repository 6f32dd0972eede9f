#include "mlnet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "parallel.hpp"

namespace mlnet {

namespace {

// Compressed adjacency restricted to what a BFS needs.
struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<VertexId> targets;
};

Csr build_csr(const WeightedDigraph& g, PathMode mode) {
  Csr csr;
  const auto n = static_cast<VertexId>(g.vertex_count());
  csr.offsets.assign(n + 1, 0);
  if (mode == PathMode::undirected_projection) {
    const auto proj = project_undirected(g);
    for (VertexId v = 0; v < n; ++v) {
      csr.offsets[v + 1] = csr.offsets[v] + proj.adjacency[v].size();
      for (const auto& [u, _] : proj.adjacency[v]) csr.targets.push_back(u);
    }
  } else {
    for (VertexId v = 0; v < n; ++v) {
      csr.offsets[v + 1] = csr.offsets[v] + g.out_edges(v).size();
      for (const auto& [u, _] : g.out_edges(v)) csr.targets.push_back(u);
    }
  }
  return csr;
}

}  // namespace

double average_path_length(const WeightedDigraph& g, PathMode mode) {
  const auto comps = weak_component_ids(g);
  if (comps.empty() || comps.front().size() < 2) {
    throw Error(errc::undefined, "largest component has fewer than two vertices");
  }
  const auto& lcc = comps.front();
  const auto csr = build_csr(g, mode);
  const unsigned threads = detail::default_threads();
  std::vector<std::uint64_t> dist_sum(threads, 0);
  std::vector<std::uint64_t> pair_count(threads, 0);

  detail::parallel_chunks(lcc.size(), threads, [&](unsigned w, std::size_t b, std::size_t e) {
    std::vector<std::int32_t> dist(g.vertex_count(), -1);
    std::vector<VertexId> touched;
    std::deque<VertexId> queue;
    for (std::size_t idx = b; idx < e; ++idx) {
      const VertexId s = lcc[idx];
      dist[s] = 0;
      touched.push_back(s);
      queue.push_back(s);
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (std::size_t k = csr.offsets[v]; k < csr.offsets[v + 1]; ++k) {
          const VertexId u = csr.targets[k];
          if (dist[u] < 0) {
            dist[u] = dist[v] + 1;
            dist_sum[w] += static_cast<std::uint64_t>(dist[u]);
            ++pair_count[w];
            touched.push_back(u);
            queue.push_back(u);
          }
        }
      }
      for (VertexId t : touched) dist[t] = -1;
      touched.clear();
    }
  });

  const auto total = std::accumulate(dist_sum.begin(), dist_sum.end(), std::uint64_t{0});
  const auto pairs = std::accumulate(pair_count.begin(), pair_count.end(), std::uint64_t{0});
  if (pairs == 0) throw Error(errc::undefined, "no reachable vertex pairs");
  return static_cast<double>(total) / static_cast<double>(pairs);
}

std::vector<double> weighted_clustering_all(const WeightedDigraph& g) {
  const auto proj = project_undirected(g);
  const auto n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  if (proj.max_weight == 0) return out;
  const double maxw = static_cast<double>(proj.max_weight);

  std::vector<double> mark(n, 0.0);  // normalised w_ij for neighbours of i
  for (VertexId i = 0; i < n; ++i) {
    const auto& adj = proj.adjacency[i];
    const std::size_t k = adj.size();
    if (k < 2) continue;
    for (const auto& [j, w] : adj) mark[j] = static_cast<double>(w) / maxw;
    double sum = 0.0;
    for (const auto& [j, wij] : adj) {
      const double hij = static_cast<double>(wij) / maxw;
      for (const auto& [m, wjm] : proj.adjacency[j]) {
        if (m == i || mark[m] == 0.0) continue;
        sum += std::cbrt(hij * mark[m] * (static_cast<double>(wjm) / maxw));
      }
    }
    for (const auto& [j, _] : adj) mark[j] = 0.0;
    out[i] = sum / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return out;
}

double weighted_clustering(const WeightedDigraph& g, std::string_view vertex) {
  auto v = g.find(vertex);
  if (!v) throw Error(errc::vertex_not_found, fmt::format("'{}'", vertex));
  return weighted_clustering_all(g)[*v];
}

double average_clustering(const WeightedDigraph& g) {
  if (g.empty()) throw Error(errc::undefined, "clustering of an empty graph");
  const auto c = weighted_clustering_all(g);
  double sum = 0.0;
  for (double x : c) sum += x;
  return sum / static_cast<double>(c.size());
}

double transitivity(const WeightedDigraph& g) {
  const auto proj = project_undirected(g);
  const auto n = g.vertex_count();
  std::vector<char> mark(n, 0);
  std::uint64_t closed = 0;   // = 3 * triangles
  std::uint64_t triples = 0;
  for (VertexId i = 0; i < n; ++i) {
    const auto& adj = proj.adjacency[i];
    const std::uint64_t k = adj.size();
    triples += k * (k - (k > 0 ? 1 : 0)) / 2;
    for (const auto& [j, _] : adj) mark[j] = 1;
    std::uint64_t links = 0;
    for (const auto& [j, _] : adj) {
      for (const auto& [m, __] : proj.adjacency[j]) {
        if (m != i && mark[m]) ++links;
      }
    }
    closed += links / 2;
    for (const auto& [j, _] : adj) mark[j] = 0;
  }
  return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::degree_in: return "degree-in";
    case Quantity::degree_out: return "degree-out";
    case Quantity::strength_in: return "strength-in";
    case Quantity::strength_out: return "strength-out";
    case Quantity::selectivity_in: return "selectivity-in";
    case Quantity::selectivity_out: return "selectivity-out";
  }
  return "?";
}

std::vector<double> vertex_quantity(const WeightedDigraph& g, Quantity q) {
  std::vector<double> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto st = g.vertex_stats(v);
    switch (q) {
      case Quantity::degree_in: out[v] = static_cast<double>(st.k_in); break;
      case Quantity::degree_out: out[v] = static_cast<double>(st.k_out); break;
      case Quantity::strength_in: out[v] = static_cast<double>(st.s_in); break;
      case Quantity::strength_out: out[v] = static_cast<double>(st.s_out); break;
      case Quantity::selectivity_in: out[v] = st.e_in; break;
      case Quantity::selectivity_out: out[v] = st.e_out; break;
    }
  }
  return out;
}

RankDistribution rank_distribution(const WeightedDigraph& g, Quantity q) {
  const auto values = vertex_quantity(g, q);
  std::vector<VertexId> ids(values.size());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return g.label(a) < g.label(b);
  });
  RankDistribution rd;
  rd.quantity = q;
  rd.entries.reserve(ids.size());
  for (std::size_t r = 0; r < ids.size(); ++r) {
    rd.entries.push_back({r + 1, values[ids[r]], g.label(ids[r])});
  }
  return rd;
}

LayerSummary summarize(const Layer& layer, const SummaryOptions& opts) {
  const auto& g = layer.graph;
  LayerSummary s;
  s.coord = layer.coord;
  s.N = g.vertex_count();
  s.K = g.edge_count();
  if (g.empty()) {
    for (const char* f : {"L", "C", "T", "omega", "gamma"}) s.absent[f] = "empty layer";
    return s;
  }
  s.omega = weak_component_ids(g).size();
  try {
    s.L = average_path_length(g, opts.path_mode);
  } catch (const Error& e) {
    s.absent["L"] = e.what();
  }
  s.C = average_clustering(g);
  s.T = transitivity(g);
  for (Quantity q : {Quantity::degree_in, Quantity::degree_out, Quantity::strength_in,
                     Quantity::strength_out}) {
    const auto vals = vertex_quantity(g, q);
    std::vector<std::uint64_t> ints;
    ints.reserve(vals.size());
    for (double v : vals) {
      if (v > 0) ints.push_back(static_cast<std::uint64_t>(v));
    }
    s.gamma_fits[q] = fit_power_law(ints, opts.power_law);
  }
  return s;
}

}  // namespace mlnet
