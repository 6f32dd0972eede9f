#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/pipeline.hpp"
#include "mlnet/text.hpp"

namespace mlnet {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& v, std::size_t lineno, const std::string& key) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
    throw Error(errc::config_error, fmt::format("line {}: '{}' is not a valid {}", lineno, v, key));
  }
  return out;
}

double parse_double(const std::string& v, std::size_t lineno, const std::string& key) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw Error(errc::config_error, fmt::format("line {}: '{}' is not a valid {}", lineno, v, key));
}

bool parse_bool(const std::string& v, std::size_t lineno, const std::string& key) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error(errc::config_error, fmt::format("line {}: {} expects true/false, got '{}'", lineno, key, v));
}

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

RunConfig parse_run_config(std::istream& is, const fs::path& base_dir) {
  RunConfig cfg;
  std::map<std::string, LanguageInputs> langs;
  auto resolve = [&](const std::string& v) {
    fs::path p(v);
    return p.is_absolute() ? p : base_dir / p;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(errc::config_error, fmt::format("line {}: expected key = value", lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (const auto dot = key.find('.'); dot != std::string::npos) {
      const std::string tag = key.substr(0, dot);
      const std::string field = key.substr(dot + 1);
      if (tag.empty()) throw Error(errc::config_error, fmt::format("line {}: empty language tag", lineno));
      auto& in = langs[tag];
      in.tag = tag;
      if (field == "plaintext") {
        in.plaintext = resolve(value);
      } else if (field == "conll") {
        in.conll = resolve(value);
      } else if (field == "lexicon") {
        in.lexicon = resolve(value);
      } else if (field == "syllabifier") {
        in.syllabifier = resolve(value);
      } else if (field == "graphemes") {
        for (auto& g : text::split_whitespace(value)) in.graphemes.push_back(text::to_lower(g));
      } else {
        throw Error(errc::config_error, fmt::format("line {}: unknown language key '{}'", lineno, key));
      }
      continue;
    }

    if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, lineno, key);
    } else if (key == "samples") {
      cfg.samples = parse_number<std::size_t>(value, lineno, key);
    } else if (key == "swaps-per-edge") {
      cfg.swaps_per_edge = parse_double(value, lineno, key);
    } else if (key == "keep-punctuation") {
      cfg.tokenizer.keep_punctuation = parse_bool(value, lineno, key);
    } else if (key == "keep-case") {
      cfg.tokenizer.keep_case = parse_bool(value, lineno, key);
    } else if (key == "directed-paths") {
      cfg.directed_paths = parse_bool(value, lineno, key);
    } else if (key == "syntax-direction") {
      if (value == "head-to-dependent") {
        cfg.syntax_direction = SyntaxDirection::head_to_dependent;
      } else if (value == "dependent-to-head") {
        cfg.syntax_direction = SyntaxDirection::dependent_to_head;
      } else {
        throw Error(errc::config_error, fmt::format("line {}: unknown syntax-direction '{}'", lineno, value));
      }
    } else if (key == "conll-form-column") {
      cfg.conll_form_column = parse_number<std::size_t>(value, lineno, key);
    } else if (key == "conll-head-column") {
      cfg.conll_head_column = parse_number<std::size_t>(value, lineno, key);
    } else if (key == "power-law-min-tail") {
      cfg.power_law_min_tail = parse_number<std::size_t>(value, lineno, key);
    } else if (key == "threads") {
      cfg.threads = parse_number<unsigned>(value, lineno, key);
    } else if (key == "out") {
      cfg.out = resolve(value);
    } else {
      throw Error(errc::config_error, fmt::format("line {}: unknown key '{}'", lineno, key));
    }
  }
  for (auto& [_, in] : langs) cfg.languages.push_back(std::move(in));
  return cfg;
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::config_error, fmt::format("cannot read config '{}'", path.string()));
  try {
    return parse_run_config(in, path.parent_path());
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

void RunConfig::validate() const {
  if (!seed) throw Error(errc::config_error, "'seed' is required");
  if (samples < 2) throw Error(errc::config_error, fmt::format("samples must be >= 2 (got {})", samples));
  if (!(swaps_per_edge > 0.0)) throw Error(errc::config_error, "swaps-per-edge must be positive");
  if (conll_form_column == 0 || conll_head_column == 0) {
    throw Error(errc::config_error, "CoNLL column indices are 1-based");
  }
  if (languages.empty()) throw Error(errc::config_error, "no language inputs configured");
  for (const auto& l : languages) {
    if (l.plaintext.empty() && l.conll.empty()) {
      throw Error(errc::config_error,
                  fmt::format("language '{}' needs {}.plaintext or {}.conll", l.tag, l.tag, l.tag));
    }
    const std::pair<const char*, const fs::path*> paths[] = {{"plaintext", &l.plaintext},
                                                             {"conll", &l.conll},
                                                             {"lexicon", &l.lexicon},
                                                             {"syllabifier", &l.syllabifier}};
    for (const auto& [name, p] : paths) {
      if (!p->empty() && !fs::is_regular_file(*p)) {
        throw Error(errc::config_error,
                    fmt::format("{}.{}: file '{}' does not exist", l.tag, name, p->string()));
      }
    }
  }
}

std::string RunConfig::canonical() const {
  std::string s = fmt::format(
      "seed={};samples={};swaps={};keep-punct={};keep-case={};directed={};syntax={};"
      "form-col={};head-col={};min-tail={}",
      seed ? std::to_string(*seed) : "-", samples, swaps_per_edge, tokenizer.keep_punctuation,
      tokenizer.keep_case, directed_paths,
      syntax_direction == SyntaxDirection::head_to_dependent ? "h2d" : "d2h", conll_form_column,
      conll_head_column, power_law_min_tail);
  for (const auto& l : languages) {
    s += fmt::format(";{}:plaintext={},conll={},lexicon={},syllabifier={},graphemes=", l.tag,
                     l.plaintext.filename().string(), l.conll.filename().string(),
                     l.lexicon.filename().string(), l.syllabifier.filename().string());
    for (const auto& g : l.graphemes) s += g + " ";
  }
  return s;
}

std::string RunMeta::header() const {
  return fmt::format("mlnet {} seed={} config={}", MLNET_VERSION,
                     seed ? std::to_string(*seed) : "-", config_hash);
}

RunMeta RunMeta::for_config(const RunConfig& cfg) { return {cfg.seed, fnv1a_hex(cfg.canonical())}; }

}  // namespace mlnet
