#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "mlnet/error.hpp"
#include "mlnet/graph.hpp"

namespace mlnet {

void write_edge_list(std::ostream& os, const WeightedDigraph& g) {
  for (const auto& e : g.sorted_edges()) {
    os << e.source << '\t' << e.target << '\t' << e.weight << '\n';
  }
}

WeightedDigraph read_edge_list(std::istream& is,
                               const std::function<void(std::string_view)>& on_comment) {
  WeightedDigraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (on_comment) on_comment(std::string_view(line).substr(1));
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw Error(errc::malformed_file,
                  fmt::format("line {}: expected source<TAB>target<TAB>weight", lineno));
    }
    const std::string_view src(line.data(), t1);
    const std::string_view dst(line.data() + t1 + 1, t2 - t1 - 1);
    const std::string_view wtxt(line.data() + t2 + 1, line.size() - t2 - 1);
    Weight w = 0;
    auto [ptr, ec] = std::from_chars(wtxt.data(), wtxt.data() + wtxt.size(), w);
    if (ec != std::errc{} || ptr != wtxt.data() + wtxt.size() || w == 0) {
      throw Error(errc::malformed_file,
                  fmt::format("line {}: weight '{}' is not a positive integer", lineno, wtxt));
    }
    if (src.empty() || dst.empty()) {
      throw Error(errc::malformed_file, fmt::format("line {}: empty vertex label", lineno));
    }
    if (src == dst) {
      throw Error(errc::malformed_file, fmt::format("line {}: self-loop '{}'", lineno, src));
    }
    g.add_edge(src, dst, w);
  }
  return g;
}

}  // namespace mlnet
