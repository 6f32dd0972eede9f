#include <fstream>
#include <istream>
#include <unordered_map>

#include <fmt/format.h>

#include "mlnet/corpus.hpp"
#include "mlnet/error.hpp"
#include "mlnet/text.hpp"

namespace mlnet {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> multigraph_units(const SyllabifierConfig& cfg) {
  std::vector<std::string> units = cfg.multigraphs;
  for (const auto& v : cfg.vowels) {
    if (text::decode_utf8(v).size() > 1) units.push_back(v);
  }
  return units;
}

}  // namespace

void SyllabifierConfig::validate() const {
  if (vowels.empty()) throw Error(errc::config_error, "syllabifier config declares no vowels");
  for (const auto& o : permitted_onsets) {
    if (vowels.count(o)) {
      throw Error(errc::config_error, fmt::format("'{}' is listed as both vowel and onset", o));
    }
  }
}

SyllabifierConfig parse_syllabifier_config(std::istream& is) {
  SyllabifierConfig cfg;
  bool saw_vowels = false;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("vowels:", 0) == 0) {
      for (auto& v : text::split_whitespace(t.substr(7))) cfg.vowels.insert(text::to_lower(v));
      saw_vowels = true;
    } else if (t.rfind("graphemes:", 0) == 0) {
      for (auto& g : text::split_whitespace(t.substr(10))) {
        cfg.multigraphs.push_back(text::to_lower(g));
      }
    } else {
      cfg.permitted_onsets.insert(text::to_lower(t));
    }
  }
  if (!saw_vowels) throw Error(errc::config_error, "syllabifier config lacks a 'vowels:' line");
  cfg.validate();
  return cfg;
}

SyllabifierConfig load_syllabifier_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, fmt::format("cannot read '{}'", path.string()));
  return parse_syllabifier_config(in);
}

std::vector<std::string> syllabify_maximal_onset(std::string_view word,
                                                 const SyllabifierConfig& cfg) {
  if (word.empty()) throw Error(errc::unsyllabifiable, "empty word");
  const auto gs = text::graphemes(word, multigraph_units(cfg));
  const std::size_t n = gs.size();

  // Nuclei: maximal runs of vowel graphemes, as [begin, end) ranges.
  std::vector<std::pair<std::size_t, std::size_t>> nuclei;
  for (std::size_t i = 0; i < n;) {
    if (!cfg.vowels.count(gs[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && cfg.vowels.count(gs[j])) ++j;
    nuclei.emplace_back(i, j);
    i = j;
  }
  if (nuclei.empty()) throw Error(errc::unsyllabifiable, fmt::format("'{}' has no vowel", word));

  // Start of every syllable after the first.
  std::vector<std::size_t> starts;
  for (std::size_t k = 0; k + 1 < nuclei.size(); ++k) {
    const std::size_t cbeg = nuclei[k].second;
    const std::size_t cend = nuclei[k + 1].first;
    std::size_t onset_len = 0;
    std::string suffix;
    for (std::size_t len = 1; len <= cend - cbeg; ++len) {
      suffix = gs[cend - len] + suffix;
      if (cfg.permitted_onsets.count(suffix)) onset_len = len;
    }
    if (onset_len == 0) {
      throw Error(errc::unsyllabifiable,
                  fmt::format("'{}': no permitted onset in cluster between nuclei", word));
    }
    starts.push_back(cend - onset_len);
  }

  std::vector<std::string> out;
  std::size_t begin = 0;
  starts.push_back(n);
  for (std::size_t s : starts) {
    std::string syl;
    for (std::size_t i = begin; i < s; ++i) syl += gs[i];
    out.push_back(std::move(syl));
    begin = s;
  }
  return out;
}

LexiconLoad parse_syllable_lexicon(std::istream& is, const TokenizerOptions& opts) {
  LexiconLoad out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(errc::lexicon_parse_error, fmt::format("line {}: missing TAB", lineno));
    }
    const std::string word = normalize_token(trim(line.substr(0, tab)), opts);
    const std::string spec = trim(line.substr(tab + 1));
    if (word.empty() || spec.empty()) {
      throw Error(errc::lexicon_parse_error, fmt::format("line {}: empty field", lineno));
    }
    std::vector<std::string> syllables;
    std::string joined;
    std::size_t start = 0;
    while (true) {
      const auto dash = spec.find('-', start);
      std::string syl = spec.substr(start, dash == std::string::npos ? dash : dash - start);
      if (syl.empty()) {
        throw Error(errc::lexicon_parse_error, fmt::format("line {}: empty syllable", lineno));
      }
      if (!opts.keep_case) syl = text::to_lower(syl);
      joined += syl;
      syllables.push_back(std::move(syl));
      if (dash == std::string::npos) break;
      start = dash + 1;
    }
    if (joined != word) {
      out.warnings.push_back(fmt::format(
          "lexicon line {}: syllables '{}' do not spell '{}'; entry skipped", lineno, spec, word));
      continue;
    }
    if (out.entries.count(word)) {
      out.warnings.push_back(
          fmt::format("lexicon line {}: duplicate entry '{}', last one wins", lineno, word));
    }
    out.entries[word] = std::move(syllables);
  }
  return out;
}

LexiconLoad load_syllable_lexicon(const std::filesystem::path& path,
                                  const TokenizerOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, fmt::format("cannot read '{}'", path.string()));
  try {
    return parse_syllable_lexicon(in, opts);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

AnnotatedCorpus annotate_syllables(const Corpus& c, const SyllableSource& source) {
  AnnotatedCorpus out{c, {}};
  std::unordered_map<std::string, std::optional<std::vector<std::string>>> cache;

  auto resolve = [&](const std::string& word) -> const std::optional<std::vector<std::string>>& {
    if (auto it = cache.find(word); it != cache.end()) return it->second;
    std::optional<std::vector<std::string>> syl;
    if (const auto* lex = std::get_if<SyllableLexicon>(&source)) {
      if (auto it = lex->find(word); it != lex->end()) syl = it->second;
    } else {
      try {
        syl = syllabify_maximal_onset(word, std::get<SyllabifierConfig>(source));
      } catch (const Error& e) {
        if (e.code() != errc::unsyllabifiable) throw;
      }
    }
    return cache.emplace(word, std::move(syl)).first->second;
  };

  for (auto& s : out.corpus.sentences) {
    for (auto& t : s) {
      const auto& syl = resolve(t.surface);
      if (syl) {
        t.syllables = *syl;
      } else {
        t.syllables.reset();
        out.omitted.insert(t.surface);
      }
    }
  }
  return out;
}

}  // namespace mlnet
