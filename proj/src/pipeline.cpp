#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "mlnet/error.hpp"
#include "mlnet/pipeline.hpp"
#include "mlnet/rng.hpp"

namespace mlnet {

namespace {

using json = nlohmann::ordered_json;

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw Error(errc::io_error, fmt::format("cannot write '{}'", p.string()));
  return os;
}

void close_out(std::ofstream& os, const fs::path& p) {
  os.close();
  if (!os) throw Error(errc::io_error, fmt::format("failed writing '{}'", p.string()));
}

std::string num(double v, int precision = 6) {
  if (!std::isfinite(v)) return "NA";
  return fmt::format("{:.{}f}", v, precision);
}

std::string num(const std::optional<double>& v, int precision = 6) {
  return v ? num(*v, precision) : "NA";
}

std::string pval(double v) {
  if (!std::isfinite(v)) return "NA";
  return fmt::format("{:.6e}", v);
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <class T>
json jopt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<Layer> load_layers(const std::vector<fs::path>& files) {
  std::vector<Layer> out;
  std::set<AspectCoord> seen;
  for (const auto& f : files) {
    auto l = load_layer(f);
    if (!seen.insert(l.coord).second) {
      throw Error(errc::duplicate_layer, fmt::format("layer {} appears twice ({})",
                                                     l.coord.to_string(), f.string()));
    }
    out.push_back(std::move(l));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Layer& a, const Layer& b) { return presentation_less(a.coord, b.coord); });
  return out;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

void write_json(const fs::path& p, const RunMeta& meta, json body) {
  json root;
  root["header"] = meta.header();
  for (auto& [k, v] : body.items()) root[k] = v;
  auto os = open_out(p);
  os << json_text(root);
  close_out(os, p);
}

}  // namespace

// ---------------------------------------------------------------------------
// build

BuildResult cmd_build(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto meta = RunMeta::for_config(cfg);
  BuildResult result;
  std::vector<Layer> layers;
  std::vector<std::string> lines;
  auto notice = [&](std::string s) {
    log << s << '\n';
    lines.push_back(s);
    result.notices.push_back(std::move(s));
  };

  for (const auto& in : cfg.languages) {
    const ConllOptions copts{cfg.conll_form_column, cfg.conll_head_column, cfg.tokenizer};
    const bool from_conll = !in.conll.empty();
    const auto source = (from_conll ? in.conll : in.plaintext).filename().string();
    const Corpus corpus = from_conll ? load_conll(in.conll, in.tag, copts)
                                     : load_plaintext(in.plaintext, in.tag, cfg.tokenizer);
    lines.push_back(fmt::format("[{}] corpus {}: {} sentences, {} tokens, {} types", in.tag, source,
                                corpus.sentences.size(), corpus.token_count(),
                                corpus.word_frequencies().size()));

    layers.push_back(build_cooccurrence(corpus, source));
    if (corpus.has_heads()) {
      layers.push_back(build_syntax(corpus, cfg.syntax_direction, source));
    } else {
      notice(fmt::format("[{}] notice: no dependency annotation, syntax layer skipped", in.tag));
    }
    layers.push_back(build_shuffled(corpus, *cfg.seed, source));

    std::vector<std::string> multigraphs = in.graphemes;
    std::optional<SyllableSource> syl;
    std::string syl_source;
    if (!in.lexicon.empty()) {
      auto lex = load_syllable_lexicon(in.lexicon, cfg.tokenizer);
      for (const auto& w : lex.warnings) notice(fmt::format("[{}] lexicon warning: {}", in.tag, w));
      syl = std::move(lex.entries);
      syl_source = in.lexicon.filename().string();
      if (!in.syllabifier.empty()) {
        notice(fmt::format("[{}] notice: lexicon given, syllabifier config ignored", in.tag));
      }
    } else if (!in.syllabifier.empty()) {
      auto sc = load_syllabifier_config(in.syllabifier);
      if (multigraphs.empty()) multigraphs = sc.multigraphs;
      syl = std::move(sc);
      syl_source = in.syllabifier.filename().string();
    }
    if (syl) {
      auto ann = annotate_syllables(corpus, *syl);
      layers.push_back(build_syllable_layer(ann.corpus, ann.omitted.size(), syl_source));
      lines.push_back(fmt::format("[{}] syllable layer: {} word types omitted", in.tag, ann.omitted.size()));
      for (const auto& w : ann.omitted) lines.push_back(fmt::format("[{}]   omitted: {}", in.tag, w));
    } else {
      notice(fmt::format("[{}] notice: no lexicon or syllabifier config, syllable layer skipped", in.tag));
    }
    layers.push_back(build_grapheme_layer(corpus, multigraphs, source));
  }

  auto net = assemble(std::move(layers));
  for (const auto& w : net.warnings()) notice(fmt::format("warning: {}", w));

  std::vector<const Layer*> ordered;
  for (const auto& [_, l] : net.layers()) ordered.push_back(&l);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Layer* a, const Layer* b) { return presentation_less(a->coord, b->coord); });

  const auto dir = cfg.out / "layers";
  fs::create_directories(dir);
  for (const Layer* l : ordered) {
    const auto p = dir / (l->coord.short_name() + ".layer");
    auto os = open_out(p);
    os << "# " << meta.header() << '\n';
    write_layer(os, *l);
    close_out(os, p);
    result.layer_files.push_back(p);
    lines.push_back(fmt::format("layer {}: N={} K={} skipped-self-loops={}", l->coord.short_name(),
                                l->graph.vertex_count(), l->graph.edge_count(),
                                l->provenance.skipped_self_loops));
  }

  const auto logp = cfg.out / "build_log.txt";
  auto os = open_out(logp);
  os << "# " << meta.header() << '\n';
  for (const auto& s : lines) os << s << '\n';
  close_out(os, logp);
  log << fmt::format("build: {} layers written to {}\n", result.layer_files.size(), dir.string());
  return result;
}

std::vector<fs::path> collect_layer_files(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file() && e.path().extension() == ".layer") found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::exists(in)) {
      out.push_back(in);
    } else {
      throw Error(errc::io_error, fmt::format("layer input '{}' does not exist", in.string()));
    }
  }
  if (out.empty()) throw Error(errc::no_layers, "no layer files found");
  return out;
}

// ---------------------------------------------------------------------------
// measure

namespace {

constexpr Quantity kFitted[] = {Quantity::degree_in, Quantity::degree_out, Quantity::strength_in,
                                Quantity::strength_out};

std::vector<std::string> measure_names() {
  std::vector<std::string> names = {"N", "K", "L", "C", "T", "omega"};
  for (auto q : kFitted) names.push_back(fmt::format("gamma_{}", to_string(q)));
  return names;
}

std::vector<std::string> measure_values(const LayerSummary& s) {
  std::vector<std::string> v = {std::to_string(s.N), std::to_string(s.K), num(s.L), num(s.C),
                                num(s.T), s.omega ? std::to_string(*s.omega) : "NA"};
  for (auto q : kFitted) {
    auto it = s.gamma_fits.find(q);
    v.push_back(it == s.gamma_fits.end() ? "NA" : num(it->second.gamma, 4));
  }
  return v;
}

}  // namespace

std::vector<LayerSummary> cmd_measure(const std::vector<fs::path>& layer_files, const fs::path& out,
                                      const SummaryOptions& opts, const RunMeta& meta,
                                      std::ostream& log) {
  const auto layers = load_layers(layer_files);
  std::vector<LayerSummary> sums;
  for (const auto& l : layers) sums.push_back(summarize(l, opts));
  const auto names = measure_names();
  const std::string path_note = fmt::format(
      "# L over the largest weakly connected component, {}",
      opts.path_mode == PathMode::directed ? "directed hops" : "undirected projection");

  {
    const auto p = out / "measures.csv";
    auto os = open_out(p);
    os << "# " << meta.header() << '\n' << path_note << '\n' << "layer";
    for (const auto& n : names) os << ',' << n;
    os << '\n';
    for (const auto& s : sums) {
      os << s.coord.short_name();
      for (const auto& v : measure_values(s)) os << ',' << v;
      os << '\n';
    }
    close_out(os, p);
  }
  {
    const auto p = out / "table1.csv";
    auto os = open_out(p);
    os << "# " << meta.header() << '\n' << path_note << '\n' << "measure";
    for (const auto& s : sums) os << ',' << s.coord.short_name();
    os << '\n';
    std::vector<std::vector<std::string>> cols;
    for (const auto& s : sums) cols.push_back(measure_values(s));
    for (std::size_t r = 0; r < names.size(); ++r) {
      os << names[r];
      for (const auto& c : cols) os << ',' << c[r];
      os << '\n';
    }
    close_out(os, p);
  }
  {
    json layers_j = json::object();
    for (const auto& s : sums) {
      json j;
      j["short_name"] = s.coord.short_name();
      j["N"] = s.N;
      j["K"] = s.K;
      j["L"] = jopt(s.L);
      j["C"] = jopt(s.C);
      j["T"] = jopt(s.T);
      j["omega"] = jopt(s.omega);
      json fits = json::object();
      for (auto q : kFitted) {
        auto it = s.gamma_fits.find(q);
        if (it == s.gamma_fits.end()) continue;
        const auto& f = it->second;
        fits[std::string(to_string(q))] = {{"gamma", jnum(f.gamma)},   {"xmin", f.xmin},
                                           {"ks_distance", jnum(f.ks_distance)},
                                           {"n_tail", f.n_tail},       {"n_total", f.n_total},
                                           {"reliable", f.reliable},   {"note", f.note}};
      }
      j["gamma_fits"] = fits;
      json absent = json::object();
      for (const auto& [k, v] : s.absent) absent[k] = v;
      j["absent"] = absent;
      layers_j[s.coord.to_string()] = j;
    }
    write_json(out / "measures.json", meta,
               {{"path_mode", opts.path_mode == PathMode::directed ? "directed" : "undirected_projection"},
                {"gamma_method", "discrete MLE, KS-selected xmin"},
                {"layers", layers_j}});
  }
  for (const auto& l : layers) {
    for (auto q : kAllQuantities) {
      const auto p = out / "ranks" / fmt::format("{}_{}.csv", l.coord.short_name(), to_string(q));
      auto os = open_out(p);
      os << "# " << meta.header() << '\n' << "rank,value\n";
      for (const auto& e : rank_distribution(l.graph, q).entries) {
        os << e.rank << ',' << num(e.value) << '\n';
      }
      close_out(os, p);
    }
  }
  log << fmt::format("measure: {} layers summarised into {}\n", sums.size(), out.string());
  return sums;
}

// ---------------------------------------------------------------------------
// overlap

namespace {

constexpr std::string_view kWVariant =
    "# W = sum(min)/sum(max) over the edge union, absent edges weigh 0 (weighted Jaccard); "
    "PW = sum over shared edges of min/max; WO = PW/|intersection|";

AspectCoord word_coord(Construction c, const std::string& lang) { return {c, Subsystem::word, lang}; }

}  // namespace

std::map<std::string, std::vector<OverlapReport>> cmd_overlap(
    const std::vector<fs::path>& layer_files, const std::string& language, const fs::path& out,
    const RunMeta& meta, std::ostream& log) {
  auto layers = load_layers(layer_files);
  std::map<AspectCoord, const Layer*> by;
  std::set<std::string> langs;
  for (const auto& l : layers) {
    by[l.coord] = &l;
    if (l.coord.subsystem == Subsystem::word) langs.insert(l.coord.language);
  }
  constexpr Construction kWord[] = {Construction::cooccurrence, Construction::syntax,
                                    Construction::shuffle};
  auto missing_for = [&](const std::string& lang) {
    std::vector<std::string> m;
    for (auto c : kWord) {
      if (!by.count(word_coord(c, lang))) m.push_back(word_coord(c, lang).to_string());
    }
    return m;
  };

  std::vector<std::string> targets;
  if (!language.empty()) {
    if (auto m = missing_for(language); !m.empty()) {
      throw Error(errc::not_comparable,
                  fmt::format("overlap for '{}' needs missing layer(s): {}", language, fmt::join(m, ", ")));
    }
    targets.push_back(language);
  } else {
    for (const auto& lang : langs) {
      if (auto m = missing_for(lang); m.empty()) {
        targets.push_back(lang);
      } else {
        log << fmt::format("overlap: notice: {} skipped, missing {}\n", lang, fmt::join(m, ", "));
      }
    }
    if (targets.empty()) {
      throw Error(errc::not_comparable, "no language has co-occurrence, syntax and shuffled layers");
    }
  }

  std::map<std::string, std::vector<OverlapReport>> result;
  for (const auto& lang : targets) {
    const Layer& co = *by.at(word_coord(Construction::cooccurrence, lang));
    const Layer& sin = *by.at(word_coord(Construction::syntax, lang));
    const Layer& shu = *by.at(word_coord(Construction::shuffle, lang));
    std::vector<OverlapReport> reps = {overlap_report(co, sin), overlap_report(co, shu),
                                       overlap_report(sin, shu)};
    {
      const auto p = out / fmt::format("overlap_{}.csv", lang);
      auto os = open_out(p);
      os << "# " << meta.header() << '\n' << kWVariant << '\n';
      os << "pair,J%,W%,WO%,intersection,PW\n";
      for (const auto& r : reps) {
        os << fmt::format("{}-{},{},{},{},{},{}\n", r.first.kind_name(), r.second.kind_name(),
                          num(100.0 * r.jaccard, 2), num(100.0 * r.weight_jaccard_W, 2),
                          r.preserved_overlap_WO ? num(100.0 * *r.preserved_overlap_WO, 2) : "NA",
                          r.intersection_size, num(r.preserved_ratio_PW));
      }
      close_out(os, p);
    }

    std::vector<Layer> copies = {co, shu, sin};
    auto net = assemble(std::move(copies));
    for (const auto& w : net.warnings()) log << "overlap: warning: " << w << '\n';
    const auto mats = correlation_matrix(net, lang);
    json bundle = json::object();
    for (const auto& m : mats) {
      const auto p = out / fmt::format("correlation_{}_{}.csv", lang, m.quantity);
      auto os = open_out(p);
      os << "# " << meta.header() << '\n' << "# Pearson r of " << m.quantity << '\n' << "axis";
      for (const auto& a : m.axes) os << ',' << a.label();
      os << '\n';
      json jm;
      json axes = json::array();
      for (const auto& a : m.axes) axes.push_back(a.label());
      json rj = json::array(), pj = json::array();
      for (std::size_t i = 0; i < m.axes.size(); ++i) {
        os << m.axes[i].label();
        json rrow = json::array(), prow = json::array();
        for (std::size_t k = 0; k < m.axes.size(); ++k) {
          const auto& c = m.cells[i][k];
          os << ',' << (c ? num(c->r) : "NA");
          rrow.push_back(c ? jnum(c->r) : json(nullptr));
          prow.push_back(c ? jnum(c->p_value) : json(nullptr));
        }
        os << '\n';
        rj.push_back(rrow);
        pj.push_back(prow);
      }
      close_out(os, p);
      jm["axes"] = axes;
      jm["r"] = rj;
      jm["p_value"] = pj;
      bundle[m.quantity] = jm;
    }
    write_json(out / fmt::format("correlation_{}.json", lang), meta,
               {{"language", lang}, {"matrices", bundle}});
    log << fmt::format("overlap: {} J(CO,SIN)={:.4f} J(CO,SHU)={:.4f}\n", lang, reps[0].jaccard,
                       reps[1].jaccard);
    result[lang] = std::move(reps);
  }
  return result;
}

// ---------------------------------------------------------------------------
// motifs

std::map<AspectCoord, TriadProfile> cmd_motifs(const std::vector<fs::path>& layer_files,
                                               const NullModelOptions& opts, const fs::path& out,
                                               const RunMeta& meta, std::ostream& log) {
  if (opts.samples < 2) {
    throw Error(errc::invalid_argument,
                fmt::format("samples must be >= 2 for a significance profile (got {})", opts.samples));
  }
  const auto layers = load_layers(layer_files);
  const auto& classes = triad_classes();
  const std::string null_line = fmt::format(
      "# null model: degree-preserving edge swaps, samples={} swaps-per-edge={} seed={}",
      opts.samples, opts.swaps_per_edge, opts.seed);

  std::map<AspectCoord, TriadProfile> profiles;
  std::vector<AspectCoord> order;
  for (const auto& l : layers) {
    // Independent stream per layer so adding layers does not change others.
    auto lo = opts;
    lo.seed = derive_seed(opts.seed, std::stoull(fnv1a_hex(l.coord.to_string()), nullptr, 16));
    auto p = significance_profile(l.graph, lo);
    const auto conc = p.concentrations();
    const auto path = out / fmt::format("profile_{}.csv", l.coord.short_name());
    auto os = open_out(path);
    os << "# " << meta.header() << '\n' << null_line << '\n';
    os << fmt::format("# layer {} stream-seed={} tsp-defined={}\n", l.coord.to_string(), lo.seed,
                      p.tsp_defined);
    for (auto d : p.degenerate) {
      os << fmt::format("# degenerate: triad {} has zero null variance, z set to 0\n", classes[d].id);
    }
    os << "triad,id,diagram,count,concentration,random_mean,random_sd,z,tsp\n";
    for (std::size_t i = 0; i < kTriadClasses; ++i) {
      os << fmt::format("{},{},{},{},{},{},{},{},{}\n", i + 1, classes[i].id, classes[i].diagram,
                        p.counts[i], num(conc[i]), num(p.random_mean[i]), num(p.random_sd[i]),
                        num(p.z[i]), num(p.tsp[i]));
    }
    close_out(os, path);
    order.push_back(l.coord);
    profiles.emplace(l.coord, std::move(p));
  }

  {
    const auto p = out / "tsp_matrix.csv";
    auto os = open_out(p);
    os << "# " << meta.header() << '\n' << null_line << '\n' << "triad,id";
    for (const auto& c : order) os << ',' << c.short_name();
    os << '\n';
    for (std::size_t i = 0; i < kTriadClasses; ++i) {
      os << i + 1 << ',' << classes[i].id;
      for (const auto& c : order) os << ',' << num(profiles.at(c).tsp[i]);
      os << '\n';
    }
    close_out(os, p);
  }

  std::map<std::string, std::map<AspectCoord, TriadProfile>> by_lang;
  for (const auto& [c, p] : profiles) by_lang[c.language].emplace(c, p);

  const auto cp = out / "triad_correlations.csv";
  auto os = open_out(cp);
  os << "# " << meta.header() << '\n' << null_line << '\n'
     << "# Pearson r over the 13 triad classes; frequency uses raw counts\n"
     << "language,pair,frequency_r,frequency_p,tsp_r,tsp_p\n";
  json j = json::object();
  for (const auto& [lang, ps] : by_lang) {
    if (ps.size() < 2) {
      log << fmt::format("motifs: notice: {} has one layer, correlations skipped\n", lang);
      continue;
    }
    const auto pc = profile_correlations(ps);
    json rows = json::array();
    for (std::size_t k = 0; k < pc.pairs.size(); ++k) {
      const auto [a, b] = pc.pairs[k];
      const auto name = fmt::format("{}-{}", pc.layers[a].kind_name(), pc.layers[b].kind_name());
      const auto& f = pc.frequency[k];
      const auto& t = pc.tsp[k];
      os << fmt::format("{},{},{},{},{},{}\n", lang, name, f ? num(f->r) : "NA",
                        f ? pval(f->p_value) : "NA", t ? num(t->r) : "NA", t ? pval(t->p_value) : "NA");
      rows.push_back({{"pair", name},
                      {"frequency_r", f ? jnum(f->r) : json(nullptr)},
                      {"frequency_p", f ? jnum(f->p_value) : json(nullptr)},
                      {"tsp_r", t ? jnum(t->r) : json(nullptr)},
                      {"tsp_p", t ? jnum(t->p_value) : json(nullptr)}});
    }
    j[lang] = rows;
  }
  close_out(os, cp);
  write_json(out / "triad_correlations.json", meta,
             {{"samples", opts.samples},
              {"swaps_per_edge", opts.swaps_per_edge},
              {"seed", opts.seed},
              {"languages", j}});
  log << fmt::format("motifs: {} profiles written to {}\n", profiles.size(), out.string());
  return profiles;
}

// ---------------------------------------------------------------------------
// report

ReportResult cmd_report(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto meta = RunMeta::for_config(cfg);
  ReportResult r;
  r.layer_files = cmd_build(cfg, log).layer_files;

  SummaryOptions sopts;
  sopts.path_mode = cfg.directed_paths ? PathMode::directed : PathMode::undirected_projection;
  sopts.power_law.min_tail = cfg.power_law_min_tail;
  cmd_measure(r.layer_files, cfg.out / "measures", sopts, meta, log);

  const auto ov = cmd_overlap(r.layer_files, {}, cfg.out / "overlap", meta, log);
  for (const auto& [lang, reps] : ov) {
    const bool closer = reps[0].jaccard > reps[1].jaccard;
    r.cooccurrence_closer_to_syntax[lang] = closer;
    log << fmt::format("report: [info] {} J(CO,SIN) > J(CO,SHU): {}\n", lang, closer ? "yes" : "no");
  }

  NullModelOptions nopts;
  nopts.samples = cfg.samples;
  nopts.swaps_per_edge = cfg.swaps_per_edge;
  nopts.seed = *cfg.seed;
  nopts.threads = cfg.threads;
  cmd_motifs(r.layer_files, nopts, cfg.out / "motifs", meta, log);
  return r;
}

}  // namespace mlnet
