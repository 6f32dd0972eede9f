#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/pipeline.hpp"

using namespace mlnet;

namespace {

const fs::path kData = MLNET_DATA_DIR;

// Fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("mlnet_test_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  fs::path write(const std::string& file, const std::string& text) const {
    std::ofstream(dir / file) << text;
    return dir / file;
  }
};

std::string toy_config(std::size_t samples = 20) {
  const auto toy = (kData / "toy").string();
  return fmt::format(
      "seed = 42\nsamples = {}\n"
      "en.conll = {}/en.conll\nen.lexicon = {}/en.lexicon\n"
      "hr.conll = {}/hr.conll\nhr.syllabifier = {}/hr.syllabifier\nhr.graphemes = lj nj dž\n",
      samples, toy, toy, toy, toy);
}

int run_cli(const std::string& args) {
  const std::string cmd = fmt::format("\"{}\" {} >/dev/null 2>&1", MLNET_CLI, args);
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
  }
  return files;
}

RunConfig load(const Scratch& s, const std::string& text) {
  auto cfg = load_run_config(s.write("run.conf", text));
  cfg.out = s.dir / "out";
  cfg.threads = 1;
  return cfg;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mlnet::Error");
  return errc::undefined;
}

}  // namespace

TEST_CASE("config parsing and validation") {
  Scratch s("config");
  const auto cfg = load_run_config(s.write("a.conf", toy_config() + "keep-case = true\nthreads = 2\n"));
  REQUIRE(cfg.languages.size() == 2);
  CHECK(cfg.languages[0].tag == "en");
  CHECK(cfg.languages[1].graphemes == std::vector<std::string>{"lj", "nj", "dž"});
  CHECK(cfg.tokenizer.keep_case);
  CHECK(*cfg.seed == 42);

  // The hash ignores `out` and `threads`.
  auto other = cfg;
  other.out = "elsewhere";
  other.threads = 7;
  CHECK(RunMeta::for_config(other).config_hash == RunMeta::for_config(cfg).config_hash);
  other.samples = 21;
  CHECK(RunMeta::for_config(other).config_hash != RunMeta::for_config(cfg).config_hash);

  // Loading only parses; validation happens when a command needs the inputs.
  CHECK(code_of([&] { load_run_config(s.write("b.conf", "samples = 10\nen.conll = x\n")).validate(); }) == errc::config_error);
  CHECK(code_of([&] { load_run_config(s.write("c.conf", "seed = 1\nbogus = 2\n")); }) == errc::config_error);
  CHECK(code_of([&] { load_run_config(s.write("d.conf", "seed = 1\nen.conll = /no/such/file\n")).validate(); }) ==
        errc::config_error);
  CHECK(code_of([&] { load_run_config(s.write("e.conf", "seed = x\n")); }) == errc::config_error);
  CHECK(code_of([&] { load_run_config(s.dir / "missing.conf"); }) == errc::config_error);
}

TEST_CASE("cli exit codes") {
  Scratch s("cli");
  const auto good = s.write("good.conf", toy_config());
  const auto out = (s.dir / "out").string();
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("") == 1);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("build") == 1);
  CHECK(run_cli(fmt::format("build --config {}", (s.dir / "none.conf").string())) == 1);
  CHECK(run_cli(fmt::format("build --config {}", s.write("bad.conf", "seed = 1\n").string())) == 1);
  CHECK(run_cli(fmt::format("build --config {} --out {}", good.string(), out)) == 0);
  CHECK(fs::exists(s.dir / "out" / "layers" / "CO-en.layer"));
  CHECK(run_cli(fmt::format("motifs --seed 1 --samples 1 {}/layers", out)) == 1);
  CHECK(run_cli(fmt::format("motifs --samples 5 {}/layers", out)) == 1);
  CHECK(run_cli(fmt::format("measure --out {} {}/layers", out, out)) == 0);
  CHECK(run_cli(fmt::format("overlap --language en --out {} {}/layers", out, out)) == 0);

  fs::create_directories(s.dir / "empty");
  CHECK(run_cli(fmt::format("measure {}", (s.dir / "empty").string())) == 2);

  s.write("broken.conll", "1\tword\t_\t_\t_\t_\t5\t_\t_\t_\n\n");
  const auto broken = s.write("broken.conf", fmt::format("seed = 1\nen.conll = {}\n", (s.dir / "broken.conll").string()));
  CHECK(run_cli(fmt::format("build --config {} --out {}", broken.string(), out)) == 2);
}

TEST_CASE("report bundle is byte-identical across runs and output directories") {
  Scratch s("determinism");
  const auto path = s.write("run.conf", toy_config());
  auto a = load_run_config(path), b = a;
  a.out = s.dir / "a";
  b.out = s.dir / "b";
  a.threads = 1;
  b.threads = 2;
  std::ostringstream log;
  const auto ra = cmd_report(a, log);
  cmd_report(b, log);
  const auto ta = tree(a.out), tb = tree(b.out);
  CHECK(ta.size() == tb.size());
  CHECK(ta == tb);
  CHECK(ra.layer_files.size() == 10);
  CHECK(ra.cooccurrence_closer_to_syntax.size() == 2);

  const auto header = RunMeta::for_config(a).header();
  CHECK(header.rfind("mlnet ", 0) == 0);
  CHECK(header.find("seed=42") != std::string::npos);
  for (const auto& [name, body] : ta) {
    INFO(name);
    if (name.ends_with(".json")) {
      CHECK(body.find(fmt::format("\"header\": \"{}\"", header)) != std::string::npos);
    } else {
      CHECK(body.rfind("# " + header + "\n", 0) == 0);
    }
  }
}

TEST_CASE("plaintext-only languages give four layers and no syntax") {
  Scratch s("plaintext");
  const auto toy = (kData / "toy").string();
  auto cfg = load(s, fmt::format("seed = 3\nen.plaintext = {}/en.txt\nen.lexicon = {}/en.lexicon\n", toy, toy));
  std::ostringstream log;
  const auto r = cmd_build(cfg, log);
  CHECK(r.layer_files.size() == 4);
  CHECK_FALSE(fs::exists(cfg.out / "layers" / "SIN-en.layer"));
  bool noticed = false;
  for (const auto& n : r.notices) noticed |= n.find("syntax layer skipped") != std::string::npos;
  CHECK(noticed);

  // Overlap with SIN missing names the gap.
  try {
    cmd_overlap(r.layer_files, "en", cfg.out / "overlap", RunMeta::for_config(cfg), log);
    FAIL("expected NotComparable");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_comparable);
    CHECK(std::string(e.what()).find("syntax/word/en") != std::string::npos);
  }
}

TEST_CASE("without a syllable source the SYL layer is skipped") {
  Scratch s("nosyl");
  auto cfg = load(s, fmt::format("seed = 3\nen.conll = {}/toy/en.conll\n", kData.string()));
  std::ostringstream log;
  const auto r = cmd_build(cfg, log);
  CHECK(r.layer_files.size() == 4);
  CHECK_FALSE(fs::exists(cfg.out / "layers" / "SYL-en.layer"));
  CHECK(fs::exists(cfg.out / "layers" / "GR-en.layer"));
}

TEST_CASE("overlap of a layer with its own copy is total") {
  Scratch s("selfoverlap");
  auto cfg = load(s, fmt::format("seed = 3\nen.conll = {}/toy/en.conll\n", kData.string()));
  std::ostringstream log;
  cmd_build(cfg, log);
  // Copy CO into the SIN and SHU slots.
  auto co = load_layer(cfg.out / "layers" / "CO-en.layer");
  fs::create_directories(s.dir / "dup");
  for (auto c : {Construction::cooccurrence, Construction::syntax, Construction::shuffle}) {
    co.coord.construction = c;
    save_layer(s.dir / "dup" / (co.coord.short_name() + ".layer"), co);
  }
  const auto reports = cmd_overlap(collect_layer_files({s.dir / "dup"}), "en", s.dir / "ov",
                                   RunMeta::for_config(cfg), log);
  REQUIRE(reports.at("en").size() == 3);
  for (const auto& r : reports.at("en")) {
    CHECK(r.jaccard == 1.0);
    CHECK(r.weight_jaccard_W == 1.0);
    CHECK(*r.preserved_overlap_WO == 1.0);
  }
  const auto csv = slurp(s.dir / "ov" / "overlap_en.csv");
  CHECK(csv.find("100.") != std::string::npos);

  // The same layer twice is a duplicate.
  fs::copy_file(s.dir / "dup" / "CO-en.layer", s.dir / "dup2.layer");
  CHECK(code_of([&] {
          cmd_measure({s.dir / "dup" / "CO-en.layer", s.dir / "dup2.layer"}, s.dir / "m", {},
                      RunMeta::for_config(cfg), log);
        }) == errc::duplicate_layer);
}

TEST_CASE("motifs on a single layer skip the correlation table") {
  Scratch s("onelayer");
  auto cfg = load(s, fmt::format("seed = 3\nen.conll = {}/toy/en.conll\n", kData.string()));
  std::ostringstream log;
  cmd_build(cfg, log);
  NullModelOptions opts;
  opts.samples = 10;
  opts.seed = 3;
  opts.threads = 1;
  const auto profiles = cmd_motifs({cfg.out / "layers" / "CO-en.layer"}, opts, s.dir / "mo",
                                   RunMeta::for_config(cfg), log);
  CHECK(profiles.size() == 1);
  CHECK(fs::exists(s.dir / "mo" / "profile_CO-en.csv"));
  CHECK(log.str().find("skip") != std::string::npos);

  opts.samples = 1;
  CHECK(code_of([&] {
          cmd_motifs({cfg.out / "layers" / "CO-en.layer"}, opts, s.dir / "mo", RunMeta::for_config(cfg), log);
        }) == errc::invalid_argument);
}

TEST_CASE("collect_layer_files rejects empty and missing inputs") {
  Scratch s("collect");
  fs::create_directories(s.dir / "empty");
  CHECK(code_of([&] { collect_layer_files({s.dir / "empty"}); }) == errc::no_layers);
  CHECK(code_of([&] { collect_layer_files({s.dir / "nope"}); }) == errc::io_error);
}
