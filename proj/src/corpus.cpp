#include "mlnet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/rng.hpp"
#include "mlnet/text.hpp"

namespace mlnet {

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

bool Corpus::has_heads() const {
  for (const auto& s : sentences) {
    for (const auto& t : s) {
      if (!t.head) return false;
    }
  }
  return !sentences.empty();
}

std::map<std::string, std::size_t> Corpus::word_frequencies() const {
  std::map<std::string, std::size_t> freq;
  for (const auto& s : sentences) {
    for (const auto& t : s) ++freq[t.surface];
  }
  return freq;
}

std::string normalize_token(std::string_view raw, const TokenizerOptions& opts) {
  std::string tok = opts.keep_punctuation ? std::string(raw) : text::strip_edge_punctuation(raw);
  if (!opts.keep_case) tok = text::to_lower(tok);
  return tok;
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, fmt::format("cannot read '{}'", path.string()));
  return in;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::optional<std::uint32_t> parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

struct RawToken {
  std::string form;
  std::optional<std::uint32_t> head;
};

// Drops tokens whose normalised form is empty; dependents of a dropped token
// climb to the nearest surviving ancestor (or the root).
Sentence finish_tree_sentence(const std::vector<RawToken>& raw, const TokenizerOptions& opts) {
  const std::size_t n = raw.size();
  std::vector<std::string> forms(n);
  std::vector<std::uint32_t> new_index(n + 1, 0);
  std::uint32_t next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    forms[i] = normalize_token(raw[i].form, opts);
    if (!forms[i].empty()) new_index[i + 1] = next++;
  }
  Sentence out;
  for (std::size_t i = 0; i < n; ++i) {
    if (forms[i].empty()) continue;
    Token t;
    t.surface = forms[i];
    t.index = new_index[i + 1];
    std::optional<std::uint32_t> h = raw[i].head;
    std::size_t guard = 0;
    while (h && *h != 0 && new_index[*h] == 0 && guard++ <= n) h = raw[*h - 1].head;
    if (h) t.head = (*h == 0) ? 0 : new_index[*h];
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Corpus parse_plaintext(std::istream& is, std::string language, const TokenizerOptions& opts) {
  Corpus c;
  c.language = std::move(language);
  std::string line;
  while (std::getline(is, line)) {
    strip_cr(line);
    Sentence s;
    for (const auto& raw : text::split_whitespace(line)) {
      auto tok = normalize_token(raw, opts);
      if (tok.empty()) continue;
      Token t;
      t.surface = std::move(tok);
      t.index = static_cast<std::uint32_t>(s.size() + 1);
      s.push_back(std::move(t));
    }
    if (!s.empty()) c.sentences.push_back(std::move(s));
  }
  if (c.sentences.empty()) throw Error(errc::empty_corpus, "no sentences in plaintext input");
  return c;
}

Corpus load_plaintext(const std::filesystem::path& path, std::string language,
                      const TokenizerOptions& opts) {
  auto in = open_input(path);
  try {
    return parse_plaintext(in, std::move(language), opts);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

Corpus parse_conll(std::istream& is, std::string language, const ConllOptions& opts) {
  if (opts.form_column == 0 || opts.head_column == 0) {
    throw Error(errc::invalid_argument, "CoNLL column indices are 1-based");
  }
  Corpus c;
  c.language = std::move(language);
  std::vector<RawToken> raw;
  std::vector<std::size_t> raw_lines;

  auto flush = [&]() {
    if (raw.empty()) return;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const auto& h = raw[i].head;
      if (!h) continue;
      if (*h > raw.size()) {
        throw Error(errc::malformed_treebank,
                    fmt::format("line {}: HEAD {} out of range for a {}-token sentence",
                                raw_lines[i], *h, raw.size()));
      }
      if (*h == i + 1) {
        throw Error(errc::malformed_treebank,
                    fmt::format("line {}: token {} is its own head", raw_lines[i], i + 1));
      }
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto h = raw[i].head;
      std::size_t steps = 0;
      while (h && *h != 0 && steps++ <= raw.size()) h = raw[*h - 1].head;
      if (steps > raw.size()) {
        throw Error(errc::malformed_treebank,
                    fmt::format("line {}: HEAD chain of token {} forms a cycle", raw_lines[i], i + 1));
      }
    }
    auto s = finish_tree_sentence(raw, opts.tokenizer);
    if (!s.empty()) c.sentences.push_back(std::move(s));
    raw.clear();
    raw_lines.clear();
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    const auto cols = split_tabs(line);
    if (cols.size() < opts.form_column) {
      throw Error(errc::malformed_treebank,
                  fmt::format("line {}: expected at least {} columns", lineno, opts.form_column));
    }
    const auto id = parse_uint(cols[0]);
    if (!id) {
      throw Error(errc::malformed_treebank,
                  fmt::format("line {}: ID '{}' is not an integer", lineno, cols[0]));
    }
    if (*id != raw.size() + 1) {
      throw Error(errc::malformed_treebank,
                  fmt::format("line {}: ID {} out of sequence (expected {})", lineno, *id,
                              raw.size() + 1));
    }
    RawToken t;
    t.form = std::string(cols[opts.form_column - 1]);
    if (t.form.empty()) {
      throw Error(errc::malformed_treebank, fmt::format("line {}: empty FORM", lineno));
    }
    if (cols.size() >= opts.head_column && cols[opts.head_column - 1] != "_") {
      const auto h = parse_uint(cols[opts.head_column - 1]);
      if (!h) {
        throw Error(errc::malformed_treebank,
                    fmt::format("line {}: HEAD '{}' is not an integer", lineno,
                                cols[opts.head_column - 1]));
      }
      t.head = *h;
    }
    raw.push_back(std::move(t));
    raw_lines.push_back(lineno);
  }
  flush();
  if (c.sentences.empty()) throw Error(errc::empty_corpus, "no sentences in treebank input");
  return c;
}

Corpus load_conll(const std::filesystem::path& path, std::string language,
                  const ConllOptions& opts) {
  auto in = open_input(path);
  try {
    return parse_conll(in, std::move(language), opts);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

void write_plaintext(std::ostream& os, const Corpus& c) {
  for (const auto& s : c.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ' ';
      os << s[i].surface;
    }
    os << '\n';
  }
}

void write_conll(std::ostream& os, const Corpus& c) {
  for (const auto& s : c.sentences) {
    for (const auto& t : s) {
      os << t.index << '\t' << t.surface << "\t_\t_\t_\t_\t";
      if (t.head) {
        os << *t.head;
      } else {
        os << '_';
      }
      os << "\t_\t_\t_\n";
    }
    os << '\n';
  }
}

Corpus shuffle_corpus(const Corpus& c, std::uint64_t seed) {
  Corpus out;
  out.language = c.language;
  out.sentences.reserve(c.sentences.size());
  for (std::size_t si = 0; si < c.sentences.size(); ++si) {
    std::vector<std::string> words;
    words.reserve(c.sentences[si].size());
    for (const auto& t : c.sentences[si]) words.push_back(t.surface);
    Rng rng(derive_seed(seed, si));
    for (std::size_t i = words.size(); i > 1; --i) {
      const auto j = uniform_below(rng, i);
      std::swap(words[i - 1], words[j]);
    }
    Sentence s;
    s.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      Token t;
      t.surface = std::move(words[i]);
      t.index = static_cast<std::uint32_t>(i + 1);
      s.push_back(std::move(t));
    }
    out.sentences.push_back(std::move(s));
  }
  return out;
}

}  // namespace mlnet
