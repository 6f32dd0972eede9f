#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlnet/corpus.hpp"
#include "mlnet/layers.hpp"
#include "mlnet/measures.hpp"
#include "mlnet/motifs.hpp"
#include "mlnet/overlap.hpp"

namespace mlnet {

namespace fs = std::filesystem;

struct LanguageInputs {
  std::string tag;
  fs::path plaintext;
  fs::path conll;
  fs::path lexicon;
  fs::path syllabifier;
  std::vector<std::string> graphemes;  // multi-letter graphemes for the GR layer
};

// Run configuration. The file format is `key = value` per line with '#'
// comments:
//
//   seed = 42                      (required)
//   samples = 1000
//   swaps-per-edge = 3
//   keep-punctuation = false
//   keep-case = false
//   directed-paths = false
//   syntax-direction = head-to-dependent | dependent-to-head
//   conll-form-column = 2
//   conll-head-column = 7
//   power-law-min-tail = 50
//   threads = 0
//   out = report
//   <lang>.plaintext | <lang>.conll | <lang>.lexicon | <lang>.syllabifier = <path>
//   <lang>.graphemes = lj nj dž
//
// Relative paths are resolved against the directory of the config file.
struct RunConfig {
  std::vector<LanguageInputs> languages;  // sorted by tag
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
  double swaps_per_edge = 3.0;
  TokenizerOptions tokenizer;
  bool directed_paths = false;
  SyntaxDirection syntax_direction = SyntaxDirection::head_to_dependent;
  std::size_t conll_form_column = 2;
  std::size_t conll_head_column = 7;
  std::size_t power_law_min_tail = 50;
  unsigned threads = 0;
  fs::path out = "report";

  // Throws errc::config_error naming the offending key or path.
  void validate() const;
  // Stable text of every setting that affects results (not `out`, not
  // `threads`); hashed into the header of every emitted file.
  std::string canonical() const;
};

RunConfig parse_run_config(std::istream& is, const fs::path& base_dir);
RunConfig load_run_config(const fs::path& path);

std::string fnv1a_hex(std::string_view data);

// Provenance line written at the top of every emitted file.
struct RunMeta {
  std::optional<std::uint64_t> seed;
  std::string config_hash;

  std::string header() const;  // "mlnet <version> seed=<seed|-> config=<hash>"
  static RunMeta for_config(const RunConfig& cfg);
};

struct BuildResult {
  std::vector<fs::path> layer_files;
  std::vector<std::string> notices;
};

// Writes <out>/layers/<SHORT>.layer for every derivable layer and
// <out>/build_log.txt.
BuildResult cmd_build(const RunConfig& cfg, std::ostream& log);

// Expands directories to their *.layer files (sorted). Throws
// errc::no_layers when nothing is found.
std::vector<fs::path> collect_layer_files(const std::vector<fs::path>& inputs);

// <out>/table1.csv (measures x layers), measures.csv (layers x measures),
// measures.json and ranks/<layer>_<quantity>.csv.
std::vector<LayerSummary> cmd_measure(const std::vector<fs::path>& layer_files, const fs::path& out,
                                      const SummaryOptions& opts, const RunMeta& meta,
                                      std::ostream& log);

// <out>/overlap_<lang>.csv, correlation_<lang>_<quantity>.csv and
// correlation_<lang>.json. An empty `language` means every language that
// has all three word-level layers.
std::map<std::string, std::vector<OverlapReport>> cmd_overlap(
    const std::vector<fs::path>& layer_files, const std::string& language, const fs::path& out,
    const RunMeta& meta, std::ostream& log);

// <out>/profile_<layer>.csv, tsp_matrix.csv, triad_correlations.csv and
// triad_correlations.json.
std::map<AspectCoord, TriadProfile> cmd_motifs(const std::vector<fs::path>& layer_files,
                                               const NullModelOptions& opts, const fs::path& out,
                                               const RunMeta& meta, std::ostream& log);

struct ReportResult {
  std::vector<fs::path> layer_files;
  // Per language: whether J(CO, SIN) > J(CO, SHU).
  std::map<std::string, bool> cooccurrence_closer_to_syntax;
};

// build -> measure -> overlap -> motifs under cfg.out.
ReportResult cmd_report(const RunConfig& cfg, std::ostream& log);

}  // namespace mlnet
