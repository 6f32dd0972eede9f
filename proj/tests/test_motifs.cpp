#include <doctest.h>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/motifs.hpp"
#include "oracles.hpp"

using namespace mlnet;

namespace {

Topology topo(int n, const std::vector<oracle::Arc>& arcs) {
  Topology t;
  t.vertex_count = static_cast<std::size_t>(n);
  for (auto [a, b] : arcs) t.edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  return t;
}

WeightedDigraph graph(int n, const std::vector<oracle::Arc>& arcs) {
  WeightedDigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(fmt::format("v{:02d}", i));
  for (auto [a, b] : arcs) g.add_occurrence(fmt::format("v{:02d}", a), fmt::format("v{:02d}", b));
  return g;
}

}  // namespace

TEST_CASE("class table: ascending ids and diagrams consistent with ids") {
  const auto& cls = triad_classes();
  for (std::size_t i = 0; i < kTriadClasses; ++i) {
    CHECK(cls[i].id == oracle::kTriadIds[i]);
    CHECK(oracle::diagram_id(std::string(cls[i].diagram)) == cls[i].id);
  }
}

TEST_CASE("every adjacency code maps to the class of its canonical id") {
  for (unsigned code = 0; code < 64; ++code) {
    bool m[3][3] = {};
    m[0][1] = code & 1u;
    m[1][0] = code & 2u;
    m[0][2] = code & 4u;
    m[2][0] = code & 8u;
    m[1][2] = code & 16u;
    m[2][1] = code & 32u;
    const int links = (m[0][1] || m[1][0]) + (m[0][2] || m[2][0]) + (m[1][2] || m[2][1]);
    const int cls = classify_triad_code(code);
    if (links < 2) {
      CHECK(cls == -1);
    } else {
      REQUIRE(cls >= 0);
      CHECK(triad_classes()[static_cast<std::size_t>(cls)].id == oracle::triad_id(m));
    }
  }
}

TEST_CASE("single triads land in their class") {
  // Feed-forward loop: a->b, a->c, b->c.
  auto c = triad_census(topo(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(c[4] == 1);
  // 3-cycle.
  c = triad_census(topo(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(c[8] == 1);
  // Complete.
  c = triad_census(topo(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}));
  CHECK(c[12] == 1);
  // Disconnected pair plus isolated vertex: nothing.
  c = triad_census(topo(3, {{0, 1}}));
  for (auto v : c) CHECK(v == 0);
}

TEST_CASE("census matches brute force on random digraphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 20;
    const auto arcs = oracle::random_digraph(n, 0.05 + 0.01 * (trial % 25), rng);
    CHECK(triad_census(topo(n, arcs)) == oracle::brute_force_census(n, arcs));
  }
}

TEST_CASE("edge swaps preserve degree sequences without loops or duplicates") {
  std::mt19937_64 rng(5);
  const int n = 20;
  const auto arcs = oracle::random_digraph(n, 0.2, rng);
  const auto t = topo(n, arcs);
  std::vector<int> in(n), out(n);
  for (auto [a, b] : arcs) {
    ++out[a];
    ++in[b];
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = randomize_edges(t, 3.0, seed);
    std::vector<int> rin(n), rout(n);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [a, b] : r) {
      CHECK(a != b);
      CHECK(seen.insert({a, b}).second);
      ++rout[a];
      ++rin[b];
    }
    CHECK(rin == in);
    CHECK(rout == out);
  }
  CHECK(randomize_edges(t, 3.0, 9) == randomize_edges(t, 3.0, 9));
  CHECK(randomize_edges(t, 3.0, 9) != t.edges);
}

TEST_CASE("labelled randomisation keeps isolated vertices") {
  WeightedDigraph g;
  g.add_edge("a", "b", 5);
  g.add_edge("c", "d", 2);
  g.add_vertex("lonely");
  const auto r = randomize_degree_preserving(g, 10.0, 1);
  CHECK(r.vertex_count() == 5);
  CHECK(r.edge_count() == 2);
  CHECK(r.total_weight() == 2);
}

TEST_CASE("significance profile: TSP has unit norm and is reproducible") {
  std::mt19937_64 rng(77);
  const auto g = graph(18, oracle::random_digraph(18, 0.18, rng));
  NullModelOptions opts;
  opts.samples = 60;
  opts.seed = 3;
  opts.threads = 1;
  const auto p = significance_profile(g, opts);
  REQUIRE(p.tsp_defined);
  double norm = 0.0;
  for (double v : p.tsp) norm += v * v;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.null_sample_size == 60);

  opts.threads = 3;
  const auto q = significance_profile(g, opts);
  CHECK(q.z == p.z);
  CHECK(q.counts == p.counts);

  opts.samples = 1;
  CHECK_THROWS_AS(significance_profile(g, opts), Error);
}

TEST_CASE("a graph the null model cannot move has no defined TSP") {
  // Directed star: every swap would be the identity.
  WeightedDigraph g;
  for (int i = 0; i < 5; ++i) g.add_occurrence("hub", fmt::format("leaf{}", i));
  NullModelOptions opts;
  opts.samples = 10;
  const auto p = significance_profile(g, opts);
  CHECK_FALSE(p.tsp_defined);
  for (double z : p.z) CHECK(z == 0.0);
  CHECK(p.degenerate.empty());
}

TEST_CASE("profile correlations: 5 layers give 10 pairs in presentation order") {
  std::mt19937_64 rng(8);
  std::map<AspectCoord, TriadProfile> profiles;
  const AspectCoord coords[] = {
      {Construction::cooccurrence, Subsystem::grapheme, "en"},
      {Construction::syntax, Subsystem::word, "en"},
      {Construction::cooccurrence, Subsystem::syllable, "en"},
      {Construction::shuffle, Subsystem::word, "en"},
      {Construction::cooccurrence, Subsystem::word, "en"},
  };
  NullModelOptions opts;
  opts.samples = 20;
  for (const auto& c : coords) profiles[c] = significance_profile(graph(15, oracle::random_digraph(15, 0.2, rng)), opts);
  const auto pc = profile_correlations(profiles);
  REQUIRE(pc.pairs.size() == 10);
  std::vector<std::string> names;
  for (auto [a, b] : pc.pairs) names.push_back(pc.layers[a].kind_name() + "-" + pc.layers[b].kind_name());
  CHECK(names == std::vector<std::string>{"CO-SHU", "CO-SIN", "CO-SYL", "CO-GR", "SHU-SIN", "SHU-SYL",
                                          "SHU-GR", "SIN-SYL", "SIN-GR", "SYL-GR"});
  std::map<AspectCoord, TriadProfile> one{*profiles.begin()};
  CHECK_THROWS_AS(profile_correlations(one), Error);
}
