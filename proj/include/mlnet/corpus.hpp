#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mlnet {

struct Token {
  std::string surface;
  std::uint32_t index = 0;             // 1-based position in the sentence
  std::optional<std::uint32_t> head;   // 0 = root
  std::optional<std::vector<std::string>> syllables;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct Corpus {
  std::vector<Sentence> sentences;
  std::string language;

  std::size_t token_count() const;
  bool has_heads() const;  // every token carries a head annotation
  std::map<std::string, std::size_t> word_frequencies() const;

  bool operator==(const Corpus&) const = default;
};

struct TokenizerOptions {
  bool keep_punctuation = false;
  bool keep_case = false;
};

// Lowercases and strips edge punctuation according to `opts`. Returns an
// empty string for tokens that should be dropped.
std::string normalize_token(std::string_view raw, const TokenizerOptions& opts);

Corpus parse_plaintext(std::istream& is, std::string language, const TokenizerOptions& opts = {});
Corpus load_plaintext(const std::filesystem::path& path, std::string language,
                      const TokenizerOptions& opts = {});

struct ConllOptions {
  std::size_t form_column = 2;  // 1-based
  std::size_t head_column = 7;  // 1-based
  TokenizerOptions tokenizer;
};

// CoNLL-X style. Tokens dropped by normalisation are removed from the tree
// and their dependents re-attached to the nearest surviving ancestor.
Corpus parse_conll(std::istream& is, std::string language, const ConllOptions& opts = {});
Corpus load_conll(const std::filesystem::path& path, std::string language,
                  const ConllOptions& opts = {});

void write_plaintext(std::ostream& os, const Corpus& c);
void write_conll(std::ostream& os, const Corpus& c);

// Permutes the tokens of every sentence independently (Fisher-Yates, one RNG
// stream per sentence derived from (seed, sentence ordinal)). Head and
// syllable annotations are dropped.
Corpus shuffle_corpus(const Corpus& c, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Syllabification

struct SyllabifierConfig {
  std::set<std::string> vowels;
  std::set<std::string> permitted_onsets;  // the empty onset is implicit
  std::vector<std::string> multigraphs;    // multi-letter graphemes, e.g. "lj"

  // Throws config_error when vowels and onsets overlap.
  void validate() const;
};

// Format: a `vowels: a e i o u` line, an optional `graphemes: lj nj dž` line,
// then one permitted onset cluster per line. '#' starts a comment.
SyllabifierConfig parse_syllabifier_config(std::istream& is);
SyllabifierConfig load_syllabifier_config(const std::filesystem::path& path);

std::vector<std::string> syllabify_maximal_onset(std::string_view word,
                                                 const SyllabifierConfig& cfg);

using SyllableLexicon = std::map<std::string, std::vector<std::string>>;

struct LexiconLoad {
  SyllableLexicon entries;
  std::vector<std::string> warnings;
};

// `word<TAB>syl-syl-syl` per line. Words and syllables pass through the same
// normalisation as corpus tokens so lookups line up.
LexiconLoad parse_syllable_lexicon(std::istream& is, const TokenizerOptions& opts = {});
LexiconLoad load_syllable_lexicon(const std::filesystem::path& path,
                                  const TokenizerOptions& opts = {});

using SyllableSource = std::variant<SyllableLexicon, SyllabifierConfig>;

struct AnnotatedCorpus {
  Corpus corpus;
  std::set<std::string> omitted;
};

AnnotatedCorpus annotate_syllables(const Corpus& c, const SyllableSource& source);

}  // namespace mlnet
