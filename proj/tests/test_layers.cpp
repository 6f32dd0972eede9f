#include <doctest.h>

#include <sstream>

#include "mlnet/error.hpp"
#include "mlnet/layers.hpp"

using namespace mlnet;

namespace {

const std::string kData = MLNET_DATA_DIR;

std::vector<Edge> edges(std::initializer_list<Edge> e) {
  std::vector<Edge> v(e);
  std::sort(v.begin(), v.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return v;
}

Corpus sentence_tree() { return load_conll(kData + "/sentence/sentence.conll", "en"); }

}  // namespace

TEST_CASE("example sentence: co-occurrence chain") {
  const auto l = build_cooccurrence(load_plaintext(kData + "/sentence/sentence.txt", "en"));
  CHECK(l.coord.to_string() == "co-occurrence/word/en");
  CHECK(l.graph.sorted_edges() == edges({{"cray", "computer", 1},
                                         {"computer", "has", 1},
                                         {"has", "applied", 1},
                                         {"applied", "to", 1},
                                         {"to", "trade", 1},
                                         {"trade", "on", 1},
                                         {"on", "nasdaq", 1}}));
  CHECK(l.graph.vertex_count() == 8);
}

TEST_CASE("example sentence: head-to-dependent syntax edges") {
  const auto l = build_syntax(sentence_tree());
  CHECK(l.graph.sorted_edges() == edges({{"computer", "cray", 1},
                                         {"applied", "computer", 1},
                                         {"applied", "has", 1},
                                         {"trade", "to", 1},
                                         {"applied", "trade", 1},
                                         {"trade", "on", 1},
                                         {"on", "nasdaq", 1}}));
  CHECK(l.graph.vertex_count() == 8);

  const auto flipped = build_syntax(sentence_tree(), SyntaxDirection::dependent_to_head);
  CHECK(flipped.graph.weight("cray", "computer") == 1);
  CHECK(flipped.graph.weight("computer", "cray") == 0);
}

TEST_CASE("example sentence: syllable chains within words") {
  const auto c = load_plaintext(kData + "/sentence/sentence.txt", "en");
  const auto lex = load_syllable_lexicon(kData + "/sentence/lexicon.tsv");
  CHECK(lex.entries.size() == 8);
  const auto ann = annotate_syllables(c, lex.entries);
  CHECK(ann.omitted.empty());
  const auto l = build_syllable_layer(ann.corpus, ann.omitted.size());
  CHECK(l.graph.sorted_edges() ==
        edges({{"com", "pu", 1}, {"pu", "ter", 1}, {"ap", "plied", 1}, {"nas", "daq", 1}}));
  // Monosyllables are isolated vertices.
  CHECK(l.graph.vertex_count() == 12);
  CHECK(l.graph.contains("cray"));
  CHECK(*l.provenance.omitted == 0);
}

TEST_CASE("example sentence: grapheme chains within words") {
  const auto c = load_plaintext(kData + "/sentence/sentence.txt", "en");
  const auto l = build_grapheme_layer(c);
  CHECK(l.graph.sorted_edges() ==
        edges({{"a", "d", 1}, {"a", "p", 1}, {"a", "q", 1}, {"a", "s", 2}, {"a", "y", 1},
               {"c", "o", 1}, {"c", "r", 1}, {"d", "a", 1}, {"d", "e", 1}, {"e", "d", 1},
               {"e", "r", 1}, {"h", "a", 1}, {"i", "e", 1}, {"l", "i", 1}, {"m", "p", 1},
               {"n", "a", 1}, {"o", "m", 1}, {"o", "n", 1}, {"p", "l", 1}, {"p", "u", 1},
               {"r", "a", 2}, {"s", "d", 1}, {"t", "e", 1}, {"t", "o", 1}, {"t", "r", 1},
               {"u", "t", 1}}));
  // "pp" in "applied" is a self-pair.
  CHECK(l.provenance.skipped_self_loops == 1);
  CHECK(l.graph.vertex_count() == 17);
}

TEST_CASE("no links across sentence boundaries") {
  std::istringstream in("a b\nc d\n");
  const auto l = build_cooccurrence(parse_plaintext(in, "en"));
  CHECK(l.graph.edge_count() == 2);
  CHECK(l.graph.weight("b", "c") == 0);
}

TEST_CASE("syntax needs a treebank") {
  std::istringstream in("a b\n");
  try {
    build_syntax(parse_plaintext(in, "en"));
    FAIL("expected NotATreebank");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_treebank);
  }
}

TEST_CASE("shuffled layer preserves vocabulary and records its seed") {
  std::istringstream in("a b c d\ne f g\n");
  const auto c = parse_plaintext(in, "en");
  const auto co = build_cooccurrence(c);
  const auto shu = build_shuffled(c, 99);
  CHECK(shu.coord.construction == Construction::shuffle);
  CHECK(*shu.provenance.seed == 99);
  auto a = co.graph.labels(), b = shu.graph.labels();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(shu.graph.same_graph(build_shuffled(c, 99).graph));
}

TEST_CASE("assemble aligns multiplex vertex sets or rejects them") {
  Layer a{{Construction::cooccurrence, Subsystem::word, "en"}, WeightedDigraph(), {}};
  a.graph.add_occurrence("x", "y");
  Layer b{{Construction::syntax, Subsystem::word, "en"}, WeightedDigraph(), {}};
  b.graph.add_occurrence("y", "z");
  Layer s{{Construction::cooccurrence, Subsystem::syllable, "en"}, WeightedDigraph(), {}};
  s.graph.add_occurrence("p", "q");

  const auto net = assemble({a, b, s});
  CHECK(net.layer(a.coord).graph.contains("z"));
  CHECK(net.layer(b.coord).graph.contains("x"));
  CHECK_FALSE(net.layer(s.coord).graph.contains("x"));
  CHECK(net.warnings().size() == 2);
  CHECK(net.coupling(a.coord, b.coord) == Coupling::multiplex);
  CHECK(net.coupling(a.coord, s.coord) == Coupling::uncoupled);
  CHECK(net.vertex_presence().at("y").size() == 2);

  try {
    assemble({a, b}, AlignPolicy::strict);
    FAIL("expected MultiplexViolation");
  } catch (const Error& e) {
    CHECK(e.code() == errc::multiplex_violation);
  }
  try {
    assemble({a, a});
    FAIL("expected DuplicateLayer");
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_layer);
  }
}

TEST_CASE("layer file round trip keeps coord, provenance and isolated vertices") {
  Layer l{{Construction::shuffle, Subsystem::word, "hr"}, WeightedDigraph(), {}};
  l.graph.add_edge("čovjek", "pas", 3);
  l.graph.add_vertex("sam");
  l.provenance = {"hr.conll", 42, std::nullopt, 5};
  std::stringstream ss;
  write_layer(ss, l);
  const auto back = read_layer(ss);
  CHECK(back.coord == l.coord);
  CHECK(back.graph.same_graph(l.graph));
  CHECK(back.graph.contains("sam"));
  CHECK(back.provenance.source == "hr.conll");
  CHECK(*back.provenance.seed == 42);
  CHECK(back.provenance.skipped_self_loops == 5);

  std::stringstream bare("a\tb\t1\n");
  CHECK_THROWS_AS(read_layer(bare), Error);
}

TEST_CASE("aspect coordinates parse and order for presentation") {
  const auto c = AspectCoord::parse("syntax/word/en");
  CHECK(c.short_name() == "SIN-en");
  CHECK(AspectCoord::parse("co-occurrence/grapheme/hr").short_name() == "GR-hr");
  CHECK(AspectCoord::parse("shuffle/word/en").short_name() == "SHU-en");
  CHECK(AspectCoord::parse("co-occurrence/syllable/en").short_name() == "SYL-en");
  CHECK_THROWS_AS(AspectCoord::parse("nonsense"), Error);
  std::vector<AspectCoord> v = {AspectCoord::parse("co-occurrence/grapheme/en"), c,
                                AspectCoord::parse("shuffle/word/en"),
                                AspectCoord::parse("co-occurrence/word/en")};
  std::sort(v.begin(), v.end(), presentation_less);
  CHECK(v[0].short_name() == "CO-en");
  CHECK(v[1].short_name() == "SHU-en");
  CHECK(v[2].short_name() == "SIN-en");
  CHECK(v[3].short_name() == "GR-en");
}
