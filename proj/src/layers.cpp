#include "mlnet/layers.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/text.hpp"

namespace mlnet {

std::string_view to_string(Construction c) noexcept {
  switch (c) {
    case Construction::cooccurrence: return "co-occurrence";
    case Construction::syntax: return "syntax";
    case Construction::shuffle: return "shuffle";
  }
  return "?";
}

std::string_view to_string(Subsystem s) noexcept {
  switch (s) {
    case Subsystem::word: return "word";
    case Subsystem::syllable: return "syllable";
    case Subsystem::grapheme: return "grapheme";
  }
  return "?";
}

std::string_view to_string(Coupling c) noexcept {
  return c == Coupling::multiplex ? "multiplex-1:1" : "uncoupled-N:M";
}

Construction parse_construction(std::string_view s) {
  if (s == "co-occurrence") return Construction::cooccurrence;
  if (s == "syntax") return Construction::syntax;
  if (s == "shuffle") return Construction::shuffle;
  throw Error(errc::malformed_file, fmt::format("unknown construction '{}'", s));
}

Subsystem parse_subsystem(std::string_view s) {
  if (s == "word") return Subsystem::word;
  if (s == "syllable") return Subsystem::syllable;
  if (s == "grapheme") return Subsystem::grapheme;
  throw Error(errc::malformed_file, fmt::format("unknown subsystem '{}'", s));
}

std::string AspectCoord::to_string() const {
  return fmt::format("{}/{}/{}", mlnet::to_string(construction), mlnet::to_string(subsystem),
                     language);
}

std::string AspectCoord::kind_name() const {
  switch (subsystem) {
    case Subsystem::word:
      switch (construction) {
        case Construction::cooccurrence: return "CO";
        case Construction::syntax: return "SIN";
        case Construction::shuffle: return "SHU";
      }
      break;
    case Subsystem::syllable:
      if (construction == Construction::cooccurrence) return "SYL";
      break;
    case Subsystem::grapheme:
      if (construction == Construction::cooccurrence) return "GR";
      break;
  }
  return fmt::format("{}.{}", mlnet::to_string(construction), mlnet::to_string(subsystem));
}

std::string AspectCoord::short_name() const { return kind_name() + "-" + language; }

AspectCoord AspectCoord::parse(std::string_view s) {
  const auto a = s.find('/');
  const auto b = a == std::string_view::npos ? a : s.find('/', a + 1);
  if (b == std::string_view::npos || b + 1 >= s.size()) {
    throw Error(errc::malformed_file,
                fmt::format("coord '{}' is not construction/subsystem/language", s));
  }
  AspectCoord c;
  c.construction = parse_construction(s.substr(0, a));
  c.subsystem = parse_subsystem(s.substr(a + 1, b - a - 1));
  c.language = std::string(s.substr(b + 1));
  return c;
}

int presentation_rank(const AspectCoord& c) noexcept {
  if (c.subsystem == Subsystem::word) {
    switch (c.construction) {
      case Construction::cooccurrence: return 0;
      case Construction::shuffle: return 1;
      case Construction::syntax: return 2;
    }
  }
  if (c.construction == Construction::cooccurrence) {
    return c.subsystem == Subsystem::syllable ? 3 : 4;
  }
  return 5 + static_cast<int>(c.subsystem) * 3 + static_cast<int>(c.construction);
}

bool presentation_less(const AspectCoord& a, const AspectCoord& b) noexcept {
  if (a.language != b.language) return a.language < b.language;
  return presentation_rank(a) < presentation_rank(b);
}

namespace {

std::string language_of(const Corpus& c) { return c.language; }

Layer make_layer(Construction con, Subsystem sub, const Corpus& c, std::string source) {
  Layer l;
  l.coord = {con, sub, language_of(c)};
  l.provenance.source = std::move(source);
  return l;
}

void add_sentence_chain(WeightedDigraph& g, const Sentence& s) {
  for (const auto& t : s) g.add_vertex(t.surface);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) g.add_occurrence(s[i].surface, s[i + 1].surface);
}

void add_chain(WeightedDigraph& g, const std::vector<std::string>& units) {
  for (const auto& u : units) g.add_vertex(u);
  for (std::size_t i = 0; i + 1 < units.size(); ++i) g.add_occurrence(units[i], units[i + 1]);
}

}  // namespace

Layer build_cooccurrence(const Corpus& c, std::string source) {
  auto l = make_layer(Construction::cooccurrence, Subsystem::word, c, std::move(source));
  for (const auto& s : c.sentences) add_sentence_chain(l.graph, s);
  l.provenance.skipped_self_loops = l.graph.skipped_self_loops();
  return l;
}

Layer build_syntax(const Corpus& c, SyntaxDirection dir, std::string source) {
  if (!c.has_heads()) {
    throw Error(errc::not_a_treebank, "syntax layer needs a head annotation on every token");
  }
  auto l = make_layer(Construction::syntax, Subsystem::word, c, std::move(source));
  for (const auto& s : c.sentences) {
    for (const auto& t : s) l.graph.add_vertex(t.surface);
    for (const auto& t : s) {
      if (*t.head == 0) continue;
      if (*t.head > s.size() || *t.head == t.index) {
        throw Error(errc::malformed_treebank,
                    fmt::format("token '{}' has invalid head {}", t.surface, *t.head));
      }
      const auto& head = s[*t.head - 1].surface;
      if (dir == SyntaxDirection::head_to_dependent) {
        l.graph.add_occurrence(head, t.surface);
      } else {
        l.graph.add_occurrence(t.surface, head);
      }
    }
  }
  l.provenance.skipped_self_loops = l.graph.skipped_self_loops();
  return l;
}

Layer build_shuffled(const Corpus& c, std::uint64_t seed, std::string source) {
  auto l = build_cooccurrence(shuffle_corpus(c, seed), std::move(source));
  l.coord.construction = Construction::shuffle;
  l.provenance.seed = seed;
  return l;
}

Layer build_syllable_layer(const Corpus& c, std::optional<std::size_t> omitted,
                           std::string source) {
  auto l = make_layer(Construction::cooccurrence, Subsystem::syllable, c, std::move(source));
  for (const auto& s : c.sentences) {
    for (const auto& t : s) {
      if (t.syllables) add_chain(l.graph, *t.syllables);
    }
  }
  l.provenance.omitted = omitted;
  l.provenance.skipped_self_loops = l.graph.skipped_self_loops();
  return l;
}

Layer build_grapheme_layer(const Corpus& c, const std::vector<std::string>& multigraphs,
                           std::string source) {
  auto l = make_layer(Construction::cooccurrence, Subsystem::grapheme, c, std::move(source));
  for (const auto& s : c.sentences) {
    for (const auto& t : s) add_chain(l.graph, text::graphemes(t.surface, multigraphs));
  }
  l.provenance.skipped_self_loops = l.graph.skipped_self_loops();
  return l;
}

bool is_multiplex_pair(const AspectCoord& a, const AspectCoord& b) noexcept {
  return a.subsystem == Subsystem::word && b.subsystem == Subsystem::word &&
         a.language == b.language;
}

const Layer& MultilayerNetwork::layer(const AspectCoord& c) const {
  if (const auto* l = find(c)) return *l;
  throw Error(errc::not_comparable, fmt::format("no layer {}", c.to_string()));
}

const Layer* MultilayerNetwork::find(const AspectCoord& c) const {
  auto it = layers_.find(c);
  return it == layers_.end() ? nullptr : &it->second;
}

Coupling MultilayerNetwork::coupling(const AspectCoord& a, const AspectCoord& b) const {
  if (a == b) return Coupling::multiplex;
  auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  auto it = coupling_.find(key);
  if (it == coupling_.end()) {
    throw Error(errc::not_comparable,
                fmt::format("no layer pair {} / {}", a.to_string(), b.to_string()));
  }
  return it->second;
}

std::set<std::string> MultilayerNetwork::languages() const {
  std::set<std::string> out;
  for (const auto& [c, _] : layers_) out.insert(c.language);
  return out;
}

MultilayerNetwork assemble(std::vector<Layer> layers, AlignPolicy policy) {
  MultilayerNetwork net;
  for (auto& l : layers) {
    const auto coord = l.coord;
    if (!net.layers_.emplace(coord, std::move(l)).second) {
      throw Error(errc::duplicate_layer, coord.to_string());
    }
  }

  // Multiplex condition for word layers, per language.
  std::map<std::string, std::vector<AspectCoord>> word_layers;
  for (const auto& [c, _] : net.layers_) {
    if (c.subsystem == Subsystem::word) word_layers[c.language].push_back(c);
  }
  for (const auto& [lang, coords] : word_layers) {
    std::set<std::string> universe;
    for (const auto& c : coords) {
      const auto& labels = net.layers_.at(c).graph.labels();
      universe.insert(labels.begin(), labels.end());
    }
    for (const auto& c : coords) {
      auto& g = net.layers_.at(c).graph;
      if (g.vertex_count() == universe.size()) continue;
      std::vector<std::string> missing;
      for (const auto& v : universe) {
        if (!g.contains(v)) missing.push_back(v);
      }
      if (policy == AlignPolicy::strict) {
        std::string sample;
        for (std::size_t i = 0; i < std::min<std::size_t>(missing.size(), 10); ++i) {
          sample += (i ? ", " : "") + missing[i];
        }
        throw Error(errc::multiplex_violation,
                    fmt::format("{} lacks {} vertices of the {} word-level vocabulary: {}{}",
                                c.to_string(), missing.size(), lang, sample,
                                missing.size() > 10 ? ", ..." : ""));
      }
      for (const auto& v : missing) g.add_vertex(v);
      net.warnings_.push_back(fmt::format("{}: added {} isolated vertices to align the multiplex",
                                          c.short_name(), missing.size()));
    }
  }

  for (const auto& [c, l] : net.layers_) {
    for (const auto& v : l.graph.labels()) net.presence_[v].insert(c);
  }
  for (auto a = net.layers_.begin(); a != net.layers_.end(); ++a) {
    for (auto b = std::next(a); b != net.layers_.end(); ++b) {
      net.coupling_[{a->first, b->first}] =
          is_multiplex_pair(a->first, b->first) ? Coupling::multiplex : Coupling::uncoupled;
    }
  }
  return net;
}

}  // namespace mlnet
