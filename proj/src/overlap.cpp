#include "mlnet/overlap.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "mlnet/error.hpp"

namespace mlnet {

namespace {

void require_multiplex(const Layer& a, const Layer& b) {
  if (!is_multiplex_pair(a.coord, b.coord)) {
    throw Error(errc::not_comparable,
                fmt::format("{} and {} are not a multiplex pair", a.coord.to_string(),
                            b.coord.to_string()));
  }
}

// Walks the union of both edge sets once, handing (w_a, w_b) to `fn` with 0
// for a missing edge.
template <class Fn>
void for_each_union_edge(const Layer& a, const Layer& b, Fn&& fn) {
  const auto& ga = a.graph;
  const auto& gb = b.graph;
  for (VertexId s = 0; s < ga.vertex_count(); ++s) {
    const auto sb = gb.find(ga.label(s));
    for (const auto& [t, wa] : ga.out_edges(s)) {
      Weight wb = 0;
      if (sb) {
        if (auto tb = gb.find(ga.label(t))) wb = gb.weight(*sb, *tb);
      }
      fn(wa, wb);
    }
  }
  for (VertexId s = 0; s < gb.vertex_count(); ++s) {
    const auto sa = ga.find(gb.label(s));
    for (const auto& [t, wb] : gb.out_edges(s)) {
      bool in_a = false;
      if (sa) {
        if (auto ta = ga.find(gb.label(t))) in_a = ga.weight(*sa, *ta) > 0;
      }
      if (!in_a) fn(Weight{0}, wb);
    }
  }
}

}  // namespace

double jaccard_overlap(const Layer& a, const Layer& b) {
  require_multiplex(a, b);
  std::size_t inter = 0, uni = 0;
  for_each_union_edge(a, b, [&](Weight wa, Weight wb) {
    ++uni;
    if (wa && wb) ++inter;
  });
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double weight_overlap_W(const Layer& a, const Layer& b) {
  require_multiplex(a, b);
  Weight lo = 0, hi = 0;
  for_each_union_edge(a, b, [&](Weight wa, Weight wb) {
    lo += std::min(wa, wb);
    hi += std::max(wa, wb);
  });
  return hi == 0 ? 0.0 : static_cast<double>(lo) / static_cast<double>(hi);
}

std::size_t intersection_size(const Layer& a, const Layer& b) {
  require_multiplex(a, b);
  std::size_t inter = 0;
  for_each_union_edge(a, b, [&](Weight wa, Weight wb) {
    if (wa && wb) ++inter;
  });
  return inter;
}

namespace {

// Ratios are summed in a canonical edge order so the result is bitwise
// symmetric in (a, b).
std::vector<std::pair<std::pair<std::string, std::string>, double>> shared_ratios(const Layer& a,
                                                                                  const Layer& b) {
  std::vector<std::pair<std::pair<std::string, std::string>, double>> out;
  const auto& ga = a.graph;
  const auto& gb = b.graph;
  for (VertexId s = 0; s < ga.vertex_count(); ++s) {
    const auto sb = gb.find(ga.label(s));
    if (!sb) continue;
    for (const auto& [t, wa] : ga.out_edges(s)) {
      const auto tb = gb.find(ga.label(t));
      if (!tb) continue;
      const Weight wb = gb.weight(*sb, *tb);
      if (wb == 0) continue;
      out.push_back({{ga.label(s), ga.label(t)},
                     static_cast<double>(std::min(wa, wb)) / static_cast<double>(std::max(wa, wb))});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double preserved_weighted_ratio(const Layer& a, const Layer& b) {
  require_multiplex(a, b);
  double sum = 0.0;
  for (const auto& [_, r] : shared_ratios(a, b)) sum += r;
  return sum;
}

double preserved_weighted_overlap(const Layer& a, const Layer& b) {
  require_multiplex(a, b);
  const auto ratios = shared_ratios(a, b);
  if (ratios.empty()) throw Error(errc::undefined, "layers share no edges");
  double sum = 0.0;
  for (const auto& [_, r] : ratios) sum += r;
  return sum / static_cast<double>(ratios.size());
}

OverlapReport overlap_report(const Layer& a, const Layer& b) {
  OverlapReport r;
  r.first = a.coord;
  r.second = b.coord;
  r.jaccard = jaccard_overlap(a, b);
  r.weight_jaccard_W = weight_overlap_W(a, b);
  r.preserved_ratio_PW = preserved_weighted_ratio(a, b);
  r.intersection_size = intersection_size(a, b);
  if (r.intersection_size > 0) r.preserved_overlap_WO = preserved_weighted_overlap(a, b);
  return r;
}

std::string CorrelationAxis::label() const {
  return layer.kind_name() + (direction == Direction::in ? "-in" : "-out");
}

std::vector<CorrelationMatrix> correlation_matrix(const MultilayerNetwork& net,
                                                  const std::string& language) {
  const AspectCoord order[] = {{Construction::cooccurrence, Subsystem::word, language},
                               {Construction::shuffle, Subsystem::word, language},
                               {Construction::syntax, Subsystem::word, language}};
  std::vector<const Layer*> layers;
  std::vector<std::string> missing;
  for (const auto& c : order) {
    const auto* l = net.find(c);
    if (!l) {
      missing.push_back(c.short_name());
    } else {
      layers.push_back(l);
    }
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& m : missing) names += (names.empty() ? "" : ", ") + m;
    throw Error(errc::not_comparable, fmt::format("missing word-level layers: {}", names));
  }

  const auto& base = layers.front()->graph;
  for (const auto* l : layers) {
    bool aligned = l->graph.vertex_count() == base.vertex_count();
    for (VertexId v = 0; aligned && v < base.vertex_count(); ++v) {
      aligned = l->graph.contains(base.label(v));
    }
    if (!aligned) {
      throw Error(errc::multiplex_violation,
                  fmt::format("{} and {} have different vertex sets", layers.front()->coord.short_name(),
                              l->coord.short_name()));
    }
  }

  std::vector<std::string> vocabulary = base.labels();
  std::sort(vocabulary.begin(), vocabulary.end());

  struct Family {
    const char* name;
    Quantity in;
    Quantity out;
  };
  const Family families[] = {{"degree", Quantity::degree_in, Quantity::degree_out},
                             {"strength", Quantity::strength_in, Quantity::strength_out},
                             {"selectivity", Quantity::selectivity_in, Quantity::selectivity_out}};

  std::vector<CorrelationMatrix> out;
  for (const auto& fam : families) {
    CorrelationMatrix m;
    m.quantity = fam.name;
    std::vector<std::vector<double>> vectors;
    for (const auto* l : layers) {
      for (Direction d : {Direction::in, Direction::out}) {
        m.axes.push_back({l->coord, d});
        const auto per_vertex = vertex_quantity(l->graph, d == Direction::in ? fam.in : fam.out);
        std::vector<double> aligned;
        aligned.reserve(vocabulary.size());
        for (const auto& w : vocabulary) aligned.push_back(per_vertex[*l->graph.find(w)]);
        vectors.push_back(std::move(aligned));
      }
    }
    const std::size_t n = vectors.size();
    m.cells.assign(n, std::vector<std::optional<Correlation>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        auto c = pearson(vectors[i], vectors[j]);
        if (i == j && c) c = Correlation{1.0, 0.0};
        m.cells[i][j] = c;
        m.cells[j][i] = c;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace mlnet
