#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mlnet/graph.hpp"
#include "mlnet/layers.hpp"
#include "mlnet/stats.hpp"

namespace mlnet {

inline constexpr std::size_t kTriadClasses = 13;

// The 13 connected directed triads, ordered by their adjacency-matrix id
// (mfinder/FANMOD convention: row-major 3x3 matrix read as a 9-bit number,
// minimised over vertex relabelings). Diagrams use vertices A, B, C:
//
//   #1  id 6    out-star              C->A C->B
//   #2  id 12   chain                 B->C C->A
//   #3  id 14   mutual + out          B<->C C->A
//   #4  id 36   in-star               B->A C->A
//   #5  id 38   feed-forward loop     B->A C->A C->B
//   #6  id 46   mutual + common sink  B->A B<->C C->A
//   #7  id 74   mutual + in           A->C B<->C
//   #8  id 78   two mutuals           A<->C B<->C
//   #9  id 98   3-cycle               A->C B->A C->B
//   #10 id 102  mutual + cycle        A<->C B->A C->B
//   #11 id 108  mutual + common source A<->C B->A B->C
//   #12 id 110  two mutuals + one     A<->C B->A B<->C
//   #13 id 238  complete              A<->B A<->C B<->C
struct TriadClass {
  int id;
  std::string_view name;
  std::string_view diagram;
};

const std::array<TriadClass, kTriadClasses>& triad_classes();

// Adjacency code of an ordered vertex triple (a, b, c): bit 0 a->b, 1 b->a,
// 2 a->c, 3 c->a, 4 b->c, 5 c->b. Returns the class index 0..12, or -1 when
// the triple is not weakly connected.
int classify_triad_code(unsigned code) noexcept;

using TriadCounts = std::array<std::uint64_t, kTriadClasses>;

// Binary digraph over dense ids, the working form for census and null model.
struct Topology {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  static Topology from_graph(const WeightedDigraph& g);
};

TriadCounts triad_census(const Topology& t);
TriadCounts triad_census(const WeightedDigraph& g);

// Directed edge-swap chain: ceil(swaps_per_edge * K) attempts, each picking two
// distinct edges (a->b, c->d) and rewiring to (a->d, c->b) unless that creates
// a self-loop or a duplicate. In/out degrees are preserved exactly.
std::vector<std::pair<VertexId, VertexId>> randomize_edges(const Topology& t,
                                                           double swaps_per_edge,
                                                           std::uint64_t seed);

// Same move on a labelled graph; weights are dropped (all edges weight 1).
WeightedDigraph randomize_degree_preserving(const WeightedDigraph& g, double swaps_per_edge,
                                            std::uint64_t seed);

struct NullModelOptions {
  std::size_t samples = 1000;
  double swaps_per_edge = 3.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct TriadProfile {
  TriadCounts counts{};
  std::array<double, kTriadClasses> random_mean{};
  std::array<double, kTriadClasses> random_sd{};
  std::array<double, kTriadClasses> z{};
  std::array<double, kTriadClasses> tsp{};
  std::vector<std::size_t> degenerate;  // classes with sd = 0 but count != mean
  bool tsp_defined = false;             // false when every z is 0
  std::size_t null_sample_size = 0;
  double swaps_per_edge = 0.0;
  std::uint64_t seed = 0;

  std::array<double, kTriadClasses> concentrations() const;
};

// Z_i = (N_orig - mean N_rand) / sd N_rand over degree-preserving samples,
// TSP = Z / |Z|. Sample seeds are derived from opts.seed, so the profile is
// reproducible regardless of thread count.
TriadProfile significance_profile(const WeightedDigraph& g, const NullModelOptions& opts);

struct ProfileCorrelations {
  std::vector<AspectCoord> layers;  // presentation order
  // Upper-triangle pairs (i < j) in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::optional<Correlation>> frequency;
  std::vector<std::optional<Correlation>> tsp;
};

ProfileCorrelations profile_correlations(const std::map<AspectCoord, TriadProfile>& profiles);

}  // namespace mlnet
