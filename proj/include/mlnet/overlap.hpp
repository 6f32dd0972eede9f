#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlnet/layers.hpp"
#include "mlnet/measures.hpp"
#include "mlnet/stats.hpp"

namespace mlnet {

// All overlap measures compare two word-level layers of one language (a
// multiplex pair) and throw errc::not_comparable otherwise. Edges are ordered
// pairs of vertex labels.

// |E_a ∩ E_b| / |E_a ∪ E_b|; 0 when both edge sets are empty.
double jaccard_overlap(const Layer& a, const Layer& b);

// Weighted Jaccard over the edge union, absent edges weighing 0:
// sum min(w_a, w_b) / sum max(w_a, w_b).
double weight_overlap_W(const Layer& a, const Layer& b);

// Sum over shared edges of min(w_a, w_b) / max(w_a, w_b).
double preserved_weighted_ratio(const Layer& a, const Layer& b);

// preserved_weighted_ratio / |E_a ∩ E_b|; errc::undefined on an empty
// intersection.
double preserved_weighted_overlap(const Layer& a, const Layer& b);

std::size_t intersection_size(const Layer& a, const Layer& b);

struct OverlapReport {
  AspectCoord first;
  AspectCoord second;
  double jaccard = 0.0;
  double weight_jaccard_W = 0.0;
  double preserved_ratio_PW = 0.0;
  std::optional<double> preserved_overlap_WO;
  std::size_t intersection_size = 0;
};

OverlapReport overlap_report(const Layer& a, const Layer& b);

enum class Direction { in, out };

struct CorrelationAxis {
  AspectCoord layer;
  Direction direction = Direction::in;
  std::string label() const;  // e.g. "CO-in"
};

// Pearson r with p-values between every pair of (layer, direction) vectors of
// one quantity family. Diagonal entries are exactly 1; undefined cells (a
// constant vector) are empty.
struct CorrelationMatrix {
  std::string quantity;  // degree, strength or selectivity
  std::vector<CorrelationAxis> axes;
  std::vector<std::vector<std::optional<Correlation>>> cells;
};

// Word-level layers of `language` in the order CO, SHU, SIN; each axis vector
// runs over the shared vocabulary in label order. Returns one matrix per
// quantity family (degree, strength, selectivity).
std::vector<CorrelationMatrix> correlation_matrix(const MultilayerNetwork& net,
                                                  const std::string& language);

}  // namespace mlnet
