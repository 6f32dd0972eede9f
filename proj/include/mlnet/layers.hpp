#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlnet/corpus.hpp"
#include "mlnet/graph.hpp"

namespace mlnet {

enum class Construction { cooccurrence, syntax, shuffle };
enum class Subsystem { word, syllable, grapheme };

std::string_view to_string(Construction c) noexcept;
std::string_view to_string(Subsystem s) noexcept;
Construction parse_construction(std::string_view s);
Subsystem parse_subsystem(std::string_view s);

// Position of a layer along the three aspects (construction, subsystem,
// language).
struct AspectCoord {
  Construction construction = Construction::cooccurrence;
  Subsystem subsystem = Subsystem::word;
  std::string language;

  auto operator<=>(const AspectCoord&) const = default;

  // "co-occurrence/word/en"
  std::string to_string() const;
  // CO, SIN, SHU, SYL, GR with the language appended: "CO-en".
  std::string short_name() const;
  // Short name without the language: "CO".
  std::string kind_name() const;

  static AspectCoord parse(std::string_view s);
};

// Fixed presentation order: CO, SHU, SIN, SYL, GR, then anything else.
int presentation_rank(const AspectCoord& c) noexcept;
bool presentation_less(const AspectCoord& a, const AspectCoord& b) noexcept;

struct Provenance {
  std::string source;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> omitted;
  std::size_t skipped_self_loops = 0;
};

struct Layer {
  AspectCoord coord;
  WeightedDigraph graph;
  Provenance provenance;
};

enum class SyntaxDirection { head_to_dependent, dependent_to_head };

Layer build_cooccurrence(const Corpus& c, std::string source = {});
Layer build_syntax(const Corpus& c, SyntaxDirection dir = SyntaxDirection::head_to_dependent,
                   std::string source = {});
Layer build_shuffled(const Corpus& c, std::uint64_t seed, std::string source = {});
// Needs a corpus passed through annotate_syllables; `omitted` is recorded in
// the provenance.
Layer build_syllable_layer(const Corpus& c, std::optional<std::size_t> omitted = std::nullopt,
                           std::string source = {});
Layer build_grapheme_layer(const Corpus& c, const std::vector<std::string>& multigraphs = {},
                           std::string source = {});

enum class Coupling { multiplex, uncoupled };
std::string_view to_string(Coupling c) noexcept;

enum class AlignPolicy { union_align, strict };

class MultilayerNetwork;

// Same-language word layers are declared multiplex and must share a vertex
// set; under union_align missing vertices are added as isolated vertices (with
// a warning), under strict the mismatch raises multiplex_violation.
MultilayerNetwork assemble(std::vector<Layer> layers,
                           AlignPolicy policy = AlignPolicy::union_align);

// Layers, vertex-layer presence and the coupling of every layer pair.
class MultilayerNetwork {
 public:
  const std::map<AspectCoord, Layer>& layers() const noexcept { return layers_; }
  const Layer& layer(const AspectCoord& c) const;
  const Layer* find(const AspectCoord& c) const;

  const std::map<std::string, std::set<AspectCoord>>& vertex_presence() const noexcept {
    return presence_;
  }
  Coupling coupling(const AspectCoord& a, const AspectCoord& b) const;
  std::set<std::string> languages() const;
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend MultilayerNetwork assemble(std::vector<Layer> layers, AlignPolicy policy);

 private:
  std::map<AspectCoord, Layer> layers_;
  std::map<std::string, std::set<AspectCoord>> presence_;
  std::map<std::pair<AspectCoord, AspectCoord>, Coupling> coupling_;
  std::vector<std::string> warnings_;
};

bool is_multiplex_pair(const AspectCoord& a, const AspectCoord& b) noexcept;

// Layer file: `# coord: construction/subsystem/language`, provenance comment
// lines, `# isolated: <label>` for vertices without edges, then the edge list.
void write_layer(std::ostream& os, const Layer& layer);
Layer read_layer(std::istream& is);
void save_layer(const std::filesystem::path& path, const Layer& layer);
Layer load_layer(const std::filesystem::path& path);

}  // namespace mlnet
