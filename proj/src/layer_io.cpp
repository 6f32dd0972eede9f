#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/layers.hpp"

namespace mlnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(errc::malformed_file, fmt::format("bad {} '{}'", what, s));
  }
  return v;
}

}  // namespace

void write_layer(std::ostream& os, const Layer& layer) {
  os << "# coord: " << layer.coord.to_string() << '\n';
  if (!layer.provenance.source.empty()) os << "# source: " << layer.provenance.source << '\n';
  if (layer.provenance.seed) os << "# seed: " << *layer.provenance.seed << '\n';
  if (layer.provenance.omitted) os << "# omitted: " << *layer.provenance.omitted << '\n';
  os << "# skipped-self-loops: " << layer.provenance.skipped_self_loops << '\n';
  const auto& g = layer.graph;
  for (VertexId v : g.sorted_vertices()) {
    if (g.out_edges(v).empty() && g.in_edges(v).empty()) {
      os << "# isolated: " << g.label(v) << '\n';
    }
  }
  write_edge_list(os, g);
}

Layer read_layer(std::istream& is) {
  Layer layer;
  bool have_coord = false;
  std::vector<std::string> isolated;
  auto on_comment = [&](std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) return;
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "coord") {
      layer.coord = AspectCoord::parse(value);
      have_coord = true;
    } else if (key == "source") {
      layer.provenance.source = std::string(value);
    } else if (key == "seed") {
      layer.provenance.seed = parse_u64(value, "seed");
    } else if (key == "omitted") {
      layer.provenance.omitted = parse_u64(value, "omitted count");
    } else if (key == "skipped-self-loops") {
      layer.provenance.skipped_self_loops = parse_u64(value, "skip count");
    } else if (key == "isolated") {
      isolated.emplace_back(value);
    }
  };
  layer.graph = read_edge_list(is, on_comment);
  if (!have_coord) throw Error(errc::malformed_file, "layer file has no '# coord:' header");
  for (const auto& v : isolated) layer.graph.add_vertex(v);
  return layer;
}

void save_layer(const std::filesystem::path& path, const Layer& layer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, fmt::format("cannot write '{}'", path.string()));
  write_layer(out, layer);
}

Layer load_layer(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, fmt::format("cannot read '{}'", path.string()));
  try {
    return read_layer(in);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

}  // namespace mlnet
