#include <doctest.h>

#include <functional>
#include <sstream>

#include "mlnet/corpus.hpp"
#include "mlnet/error.hpp"
#include "mlnet/text.hpp"

using namespace mlnet;

namespace {

std::vector<std::string> surfaces(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s) out.push_back(t.surface);
  return out;
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return errc::undefined;
}

}  // namespace

TEST_CASE("utf-8 lowercasing covers Croatian and Cyrillic") {
  CHECK(text::to_lower("ČOVJEK Džep ŠUMA Ž") == "čovjek džep šuma ž");
  CHECK(text::to_lower("ПРИВЕТ") == "привет");
  CHECK(text::to_lower("ABC") == "abc");
}

TEST_CASE("edge punctuation is stripped, inner hyphens kept") {
  CHECK(normalize_token("NASDAQ.", {}) == "nasdaq");
  CHECK(normalize_token("\"well-known,\"", {}) == "well-known");
  CHECK(normalize_token("don't", {}) == "don't");
  CHECK(normalize_token("...", {}) == "");
  CHECK(normalize_token("«Riječ»", {}) == "riječ");
  CHECK(normalize_token("NASDAQ.", {true, true}) == "NASDAQ.");
}

TEST_CASE("graphemes honour multigraphs") {
  CHECK(text::graphemes("ljubav", {"lj", "nj", "dž"}) ==
        std::vector<std::string>{"lj", "u", "b", "a", "v"});
  CHECK(text::graphemes("džep", {"lj", "nj", "dž"}) == std::vector<std::string>{"dž", "e", "p"});
  CHECK(text::graphemes("džep") == std::vector<std::string>{"d", "ž", "e", "p"});
}

TEST_CASE("plaintext: one sentence per line") {
  std::istringstream in("Cray Computer has applied to trade on NASDAQ.\n\n  A b , c !\n");
  const auto c = parse_plaintext(in, "en");
  REQUIRE(c.sentences.size() == 2);
  CHECK(surfaces(c.sentences[0]) ==
        std::vector<std::string>{"cray", "computer", "has", "applied", "to", "trade", "on", "nasdaq"});
  CHECK(surfaces(c.sentences[1]) == std::vector<std::string>{"a", "b", "c"});
  CHECK(c.sentences[1][2].index == 3);
  CHECK_FALSE(c.has_heads());
  CHECK(c.token_count() == 11);
}

TEST_CASE("plaintext: empty input is an EmptyCorpus") {
  std::istringstream in("\n . \n");
  CHECK(code_of([&] { parse_plaintext(in, "en"); }) == errc::empty_corpus);
}

TEST_CASE("conll: dropped punctuation re-attaches dependents upward") {
  // "x" depends on the comma, which depends on "a"; the comma is dropped.
  std::istringstream in(
      "# sent 1\n"
      "1\ta\t_\t_\t_\t_\t0\t_\t_\t_\n"
      "2\t,\t_\t_\t_\t_\t1\t_\t_\t_\n"
      "3\tx\t_\t_\t_\t_\t2\t_\t_\t_\n"
      "4\t.\t_\t_\t_\t_\t1\t_\t_\t_\n"
      "\n");
  const auto c = parse_conll(in, "en");
  REQUIRE(c.sentences.size() == 1);
  const auto& s = c.sentences[0];
  REQUIRE(s.size() == 2);
  CHECK(s[0].surface == "a");
  CHECK(*s[0].head == 0);
  CHECK(s[1].surface == "x");
  CHECK(s[1].index == 2);
  CHECK(*s[1].head == 1);
  CHECK(c.has_heads());
}

TEST_CASE("conll: malformed trees are reported with a line number") {
  const char* cases[] = {
      "1\ta\t_\t_\t_\t_\t0\n3\tb\t_\t_\t_\t_\t1\n",   // ID gap
      "1\ta\t_\t_\t_\t_\t0\n2\tb\t_\t_\t_\t_\t9\n",   // HEAD out of range
      "1\ta\t_\t_\t_\t_\t1\n",                       // self head
      "x\ta\t_\t_\t_\t_\t0\n",                       // non-integer ID
      "1\ta\t_\t_\t_\t_\tq\n",                       // non-integer HEAD
      "1\ta\t_\t_\t_\t_\t2\n2\tb\t_\t_\t_\t_\t1\n",   // cycle
  };
  for (const char* text : cases) {
    std::istringstream in(text);
    try {
      parse_conll(in, "en");
      FAIL("expected MalformedTreebank for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == errc::malformed_treebank);
      CHECK(std::string(e.what()).find("line ") != std::string::npos);
    }
  }
}

TEST_CASE("conll: missing HEAD column means no tree") {
  std::istringstream in("1\ta\n2\tb\n\n");
  const auto c = parse_conll(in, "en");
  CHECK_FALSE(c.has_heads());
}

TEST_CASE("conll round trip") {
  std::istringstream in("1\tA\t_\t_\t_\t_\t2\t_\t_\t_\n2\tb\t_\t_\t_\t_\t0\t_\t_\t_\n\n");
  const auto c = parse_conll(in, "en");
  std::stringstream out;
  write_conll(out, c);
  const auto back = parse_conll(out, "en");
  CHECK(back == c);
}

TEST_CASE("shuffle keeps sentence multisets and is seed-deterministic") {
  std::istringstream in("a b c d e f\ng h\ni\nj k l m n o p q r s t\n");
  const auto c = parse_plaintext(in, "en");
  const auto s1 = shuffle_corpus(c, 7);
  const auto s2 = shuffle_corpus(c, 7);
  CHECK(s1 == s2);
  REQUIRE(s1.sentences.size() == c.sentences.size());
  bool moved = false;
  for (std::size_t i = 0; i < c.sentences.size(); ++i) {
    auto a = surfaces(c.sentences[i]);
    auto b = surfaces(s1.sentences[i]);
    moved |= a != b;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    for (std::size_t k = 0; k < s1.sentences[i].size(); ++k) {
      CHECK(s1.sentences[i][k].index == k + 1);
      CHECK_FALSE(s1.sentences[i][k].head);
    }
  }
  CHECK(moved);
  CHECK(shuffle_corpus(c, 8) != s1);
}
