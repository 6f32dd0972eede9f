#include <doctest.h>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/measures.hpp"
#include "oracles.hpp"

using namespace mlnet;

namespace {

std::string vname(int i) { return fmt::format("v{:02d}", i); }

WeightedDigraph from_arcs(int n, const std::vector<oracle::Arc>& arcs, Weight w = 1) {
  WeightedDigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vname(i));
  for (auto [a, b] : arcs) g.add_edge(vname(a), vname(b), w);
  return g;
}

WeightedDigraph triangle() {
  WeightedDigraph g;
  g.add_occurrence("a", "b");
  g.add_occurrence("b", "c");
  g.add_occurrence("c", "a");
  return g;
}

}  // namespace

TEST_CASE("uniform triangle: N=3 K=3 L=1 C=1 T=1 omega=1") {
  const Layer l{{}, triangle(), {}};
  const auto s = summarize(l);
  CHECK(s.N == 3);
  CHECK(s.K == 3);
  CHECK(*s.L == doctest::Approx(1.0));
  CHECK(*s.C == doctest::Approx(1.0));
  CHECK(*s.T == doctest::Approx(1.0));
  CHECK(*s.omega == 1);
}

TEST_CASE("path graph has no triangles") {
  WeightedDigraph g;
  g.add_occurrence("a", "b");
  g.add_occurrence("b", "c");
  CHECK(transitivity(g) == 0.0);
  CHECK(average_clustering(g) == 0.0);
  CHECK(average_path_length(g) == doctest::Approx(4.0 / 3.0));
  // Directed: a->b, a->c, b->c are the reachable pairs.
  CHECK(average_path_length(g, PathMode::directed) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("weighted clustering uses normalised geometric means") {
  // Triangle a-b-c with weights 1, 1, 8 plus a pendant d on a.
  WeightedDigraph g;
  g.add_edge("a", "b", 1);
  g.add_edge("b", "c", 1);
  g.add_edge("c", "a", 8);
  g.add_edge("a", "d", 8);
  // a: neighbours b, c, d; only the pair (b, c) closes. Normalised by max 8:
  // (1/8 * 8/8 * 1/8)^(1/3) = 1/4, counted twice over ordered pairs, k=3.
  CHECK(weighted_clustering(g, "a") == doctest::Approx(2.0 * 0.25 / 6.0));
  CHECK(weighted_clustering(g, "d") == 0.0);
  CHECK_THROWS_AS(weighted_clustering(g, "nope"), Error);
}

TEST_CASE("clustering, transitivity and path length match the oracles on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 15;
    const auto arcs = oracle::random_oriented(n, 0.25 + 0.02 * (trial % 10), rng);
    const auto g = from_arcs(n, arcs);
    CHECK(average_clustering(g) == doctest::Approx(oracle::binary_average_clustering(n, arcs)).epsilon(1e-12));
    CHECK(transitivity(g) == doctest::Approx(oracle::binary_transitivity(n, arcs)).epsilon(1e-12));

    const auto comps = weak_component_ids(g);
    if (comps.front().size() < 2) continue;
    std::vector<int> comp(comps.front().begin(), comps.front().end());
    CHECK(average_path_length(g) == doctest::Approx(oracle::floyd_average_path(n, arcs, comp)).epsilon(1e-12));
  }
}

TEST_CASE("single-sentence co-occurrence chain: N=8 K=7 omega=1 T=0") {
  WeightedDigraph g;
  const char* w[] = {"cray", "computer", "has", "applied", "to", "trade", "on", "nasdaq"};
  for (int i = 0; i + 1 < 8; ++i) g.add_occurrence(w[i], w[i + 1]);
  const auto s = summarize(Layer{{}, g, {}});
  CHECK(s.N == 8);
  CHECK(s.K == 7);
  CHECK(*s.omega == 1);
  CHECK(*s.T == 0.0);
}

TEST_CASE("rank distributions are non-increasing with label tie-break") {
  WeightedDigraph g;
  g.add_edge("b", "a", 5);
  g.add_edge("c", "a", 1);
  g.add_edge("a", "c", 2);
  g.add_vertex("z");
  const auto r = rank_distribution(g, Quantity::strength_in);
  REQUIRE(r.entries.size() == 4);
  CHECK(r.entries[0].vertex == "a");
  CHECK(r.entries[0].value == 6.0);
  CHECK(r.entries[0].rank == 1);
  CHECK(r.entries[1].vertex == "c");
  CHECK(r.entries[2].vertex == "b");  // b and z tie at 0, label order
  CHECK(r.entries[3].vertex == "z");
  for (std::size_t i = 1; i < r.entries.size(); ++i) CHECK(r.entries[i].value <= r.entries[i - 1].value);

  const auto sel = vertex_quantity(g, Quantity::selectivity_in);
  CHECK(sel[*g.find("a")] == doctest::Approx(3.0));
  CHECK(sel[*g.find("z")] == 0.0);
}

TEST_CASE("small layers mark power-law fits unreliable") {
  const auto s = summarize(Layer{{}, triangle(), {}});
  for (const auto& [q, fit] : s.gamma_fits) CHECK_FALSE(fit.reliable);
}

TEST_CASE("empty and single-vertex layers report absent measures") {
  WeightedDigraph one;
  one.add_vertex("x");
  const auto s = summarize(Layer{{}, one, {}});
  CHECK(s.N == 1);
  CHECK_FALSE(s.L);
  CHECK(s.absent.count("L"));
}
