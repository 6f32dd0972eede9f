#include <algorithm>

#include "mlnet/motifs.hpp"

namespace mlnet {

namespace {

constexpr std::array<TriadClass, kTriadClasses> kClasses{{
    {6, "out-star", "C->A C->B"},
    {12, "chain", "B->C C->A"},
    {14, "mutual + out", "B<->C C->A"},
    {36, "in-star", "B->A C->A"},
    {38, "feed-forward loop", "B->A C->A C->B"},
    {46, "mutual + common sink", "B->A B<->C C->A"},
    {74, "mutual + in", "A->C B<->C"},
    {78, "two mutuals", "A<->C B<->C"},
    {98, "3-cycle", "A->C B->A C->B"},
    {102, "mutual + cycle", "A<->C B->A C->B"},
    {108, "mutual + common source", "A<->C B->A B->C"},
    {110, "two mutuals + one", "A<->C B->A B<->C"},
    {238, "complete", "A<->B A<->C B<->C"},
}};

constexpr int matrix_id(const bool (&m)[3][3]) {
  int id = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (m[i][j]) id |= 1 << (8 - (3 * i + j));
    }
  }
  return id;
}

constexpr std::array<int, 64> build_code_table() {
  std::array<int, 64> table{};
  constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (unsigned code = 0; code < 64; ++code) {
    bool m[3][3] = {};
    m[0][1] = code & 1u;
    m[1][0] = code & 2u;
    m[0][2] = code & 4u;
    m[2][0] = code & 8u;
    m[1][2] = code & 16u;
    m[2][1] = code & 32u;
    const int links = (m[0][1] || m[1][0]) + (m[0][2] || m[2][0]) + (m[1][2] || m[2][1]);
    if (links < 2) {
      table[code] = -1;
      continue;
    }
    int best = 1 << 10;
    for (const auto& p : perms) {
      bool q[3][3] = {};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) q[p[i]][p[j]] = m[i][j];
      }
      best = std::min(best, matrix_id(q));
    }
    table[code] = -1;
    for (std::size_t k = 0; k < kClasses.size(); ++k) {
      if (kClasses[k].id == best) table[code] = static_cast<int>(k);
    }
  }
  return table;
}

constexpr std::array<int, 64> kCodeTable = build_code_table();

// Undirected neighbour list with direction flags: bit 0 = v->u, bit 1 = u->v.
struct FlaggedAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::pair<VertexId, unsigned char>> entries;
};

FlaggedAdjacency build_adjacency(const Topology& t) {
  std::vector<std::vector<std::pair<VertexId, unsigned char>>> tmp(t.vertex_count);
  for (const auto& [a, b] : t.edges) {
    tmp[a].emplace_back(b, 1);
    tmp[b].emplace_back(a, 2);
  }
  FlaggedAdjacency adj;
  adj.offsets.assign(t.vertex_count + 1, 0);
  for (std::size_t v = 0; v < t.vertex_count; ++v) {
    auto& list = tmp[v];
    std::sort(list.begin(), list.end());
    std::size_t w = 0;
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (w > 0 && list[w - 1].first == list[r].first) {
        list[w - 1].second |= list[r].second;
      } else {
        list[w++] = list[r];
      }
    }
    list.resize(w);
    adj.offsets[v + 1] = adj.offsets[v] + w;
    adj.entries.insert(adj.entries.end(), list.begin(), list.end());
  }
  return adj;
}

}  // namespace

const std::array<TriadClass, kTriadClasses>& triad_classes() { return kClasses; }

int classify_triad_code(unsigned code) noexcept { return code < 64 ? kCodeTable[code] : -1; }

Topology Topology::from_graph(const WeightedDigraph& g) {
  Topology t;
  t.vertex_count = g.vertex_count();
  t.edges.reserve(g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& [u, _] : g.out_edges(v)) t.edges.emplace_back(v, u);
  }
  return t;
}

// Each weakly connected triple is visited exactly once: for every linked pair
// v < u, walk the merged neighbourhood S = N(v) ∪ N(u) \ {v, u} and accept w
// when u < w, or when v < w < u and w is not adjacent to v.
TriadCounts triad_census(const Topology& t) {
  TriadCounts counts{};
  const auto adj = build_adjacency(t);
  const auto n = static_cast<VertexId>(t.vertex_count);
  for (VertexId v = 0; v < n; ++v) {
    const auto vb = adj.entries.begin() + static_cast<std::ptrdiff_t>(adj.offsets[v]);
    const auto ve = adj.entries.begin() + static_cast<std::ptrdiff_t>(adj.offsets[v + 1]);
    for (auto vu = vb; vu != ve; ++vu) {
      const VertexId u = vu->first;
      if (u <= v) continue;
      const unsigned f_vu = vu->second;
      const auto ub = adj.entries.begin() + static_cast<std::ptrdiff_t>(adj.offsets[u]);
      const auto ue = adj.entries.begin() + static_cast<std::ptrdiff_t>(adj.offsets[u + 1]);
      auto i = vb;
      auto j = ub;
      while (i != ve || j != ue) {
        VertexId w;
        unsigned f_vw = 0, f_uw = 0;
        if (j == ue || (i != ve && i->first < j->first)) {
          w = i->first;
          f_vw = i->second;
          ++i;
        } else if (i == ve || j->first < i->first) {
          w = j->first;
          f_uw = j->second;
          ++j;
        } else {
          w = i->first;
          f_vw = i->second;
          f_uw = j->second;
          ++i;
          ++j;
        }
        if (w == v || w == u) continue;
        if (!(u < w || (v < w && w < u && f_vw == 0))) continue;
        // Triple (a, b, c) = (v, u, w).
        const unsigned code = f_vu | (f_vw << 2) | (f_uw << 4);
        const int cls = kCodeTable[code];
        if (cls >= 0) ++counts[static_cast<std::size_t>(cls)];
      }
    }
  }
  return counts;
}

TriadCounts triad_census(const WeightedDigraph& g) { return triad_census(Topology::from_graph(g)); }

}  // namespace mlnet
