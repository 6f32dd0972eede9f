#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/pipeline.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kDataError = 2;

struct Args {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> swaps_per_edge;
  bool keep_punctuation = false;
  bool keep_case = false;
  bool directed_paths = false;
  std::string out;
  std::string language;
  std::vector<std::string> inputs;
};

mlnet::RunConfig effective_config(const Args& a, bool need_file) {
  mlnet::RunConfig cfg;
  if (!a.config.empty()) {
    cfg = mlnet::load_run_config(a.config);
  } else if (need_file) {
    throw mlnet::Error(mlnet::errc::config_error, "--config is required for this command");
  }
  if (a.seed) cfg.seed = a.seed;
  if (a.samples) cfg.samples = *a.samples;
  if (a.swaps_per_edge) cfg.swaps_per_edge = *a.swaps_per_edge;
  if (a.keep_punctuation) cfg.tokenizer.keep_punctuation = true;
  if (a.keep_case) cfg.tokenizer.keep_case = true;
  if (a.directed_paths) cfg.directed_paths = true;
  if (!a.out.empty()) cfg.out = a.out;
  return cfg;
}

std::vector<mlnet::fs::path> layer_inputs(const Args& a, const mlnet::RunConfig& cfg) {
  std::vector<mlnet::fs::path> in(a.inputs.begin(), a.inputs.end());
  if (in.empty()) in.push_back(cfg.out / "layers");
  return mlnet::collect_layer_files(in);
}

int run(const std::string& verb, const Args& a) {
  using namespace mlnet;
  if (verb == "build") {
    auto cfg = effective_config(a, true);
    cmd_build(cfg, std::cerr);
  } else if (verb == "report") {
    auto cfg = effective_config(a, true);
    cmd_report(cfg, std::cerr);
  } else if (verb == "measure") {
    auto cfg = effective_config(a, false);
    SummaryOptions opts;
    opts.path_mode = cfg.directed_paths ? PathMode::directed : PathMode::undirected_projection;
    opts.power_law.min_tail = cfg.power_law_min_tail;
    const auto files = layer_inputs(a, cfg);
    cmd_measure(files, cfg.out / "measures", opts, RunMeta::for_config(cfg), std::cerr);
  } else if (verb == "overlap") {
    auto cfg = effective_config(a, false);
    const auto files = layer_inputs(a, cfg);
    cmd_overlap(files, a.language, cfg.out / "overlap", RunMeta::for_config(cfg), std::cerr);
  } else if (verb == "motifs") {
    auto cfg = effective_config(a, false);
    if (!cfg.seed) throw Error(errc::config_error, "motifs needs --seed or a config with 'seed'");
    if (cfg.samples < 2) {
      throw Error(errc::config_error, fmt::format("samples must be >= 2 (got {})", cfg.samples));
    }
    NullModelOptions opts;
    opts.samples = cfg.samples;
    opts.swaps_per_edge = cfg.swaps_per_edge;
    opts.seed = *cfg.seed;
    opts.threads = cfg.threads;
    const auto files = layer_inputs(a, cfg);
    cmd_motifs(files, opts, cfg.out / "motifs", RunMeta::for_config(cfg), std::cerr);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilayer language network analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--config", a.config, "Run configuration file");
  app.add_option("--seed", a.seed, "Master random seed");
  app.add_option("--samples", a.samples, "Null-model samples per layer");
  app.add_option("--swaps-per-edge", a.swaps_per_edge, "Edge-swap attempts per edge");
  app.add_flag("--keep-punctuation", a.keep_punctuation, "Keep edge punctuation on tokens");
  app.add_flag("--keep-case", a.keep_case, "Do not lowercase tokens");
  app.add_flag("--directed-paths", a.directed_paths, "Directed hop counts for L");
  app.add_option("--out", a.out, "Output directory");

  std::string verb;
  auto add_verb = [&](const char* name, const char* help, bool takes_layers) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&verb, name] { verb = name; });
    if (takes_layers) sub->add_option("layers", a.inputs, "Layer files or directories");
    return sub;
  };
  add_verb("build", "Build layer files from the configured corpora", false);
  add_verb("measure", "Standard measures and rank distributions", true);
  add_verb("overlap", "Word-layer overlaps and correlation matrices", true)
      ->add_option("--language", a.language, "Language tag (default: all)");
  add_verb("motifs", "Triad significance profiles", true);
  add_verb("report", "Run build, measure, overlap and motifs", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    return run(verb, a);
  } catch (const mlnet::Error& e) {
    std::cerr << "mlnet: " << e.what() << '\n';
    return e.is_config_error() ? kConfigError : kDataError;
  } catch (const std::exception& e) {
    std::cerr << "mlnet: " << e.what() << '\n';
    return kDataError;
  }
}
