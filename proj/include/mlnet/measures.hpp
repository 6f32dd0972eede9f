#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlnet/graph.hpp"
#include "mlnet/layers.hpp"

namespace mlnet {

// Mean hop distance over ordered reachable pairs of the largest weakly
// connected component. Throws errc::undefined when that component has fewer
// than two vertices.
double average_path_length(const WeightedDigraph& g,
                           PathMode mode = PathMode::undirected_projection);

// Weighted clustering on the undirected projection with weights normalised
// by the network maximum: c_i = sum_{j,k} (w_ij w_ik w_jk)^(1/3) / (k_i (k_i - 1)),
// 0 when k_i < 2.
double weighted_clustering(const WeightedDigraph& g, std::string_view vertex);
std::vector<double> weighted_clustering_all(const WeightedDigraph& g);
double average_clustering(const WeightedDigraph& g);

// 3 * triangles / connected triples on the undirected projection; 0 when the
// graph has no triples.
double transitivity(const WeightedDigraph& g);

// ---------------------------------------------------------------------------
// Power-law fitting

// Hurwitz zeta sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

struct PowerLawOptions {
  std::size_t min_tail = 50;              // fewer tail values => unreliable
  std::optional<std::uint64_t> xmin;      // fixed lower cutoff; scan when absent
  double gamma_lo = 1.01;
  double gamma_hi = 10.0;
};

struct PowerLawFit {
  double gamma = 0.0;        // NaN when no estimate exists
  double xmin = 0.0;
  double ks_distance = 0.0;
  std::size_t n_tail = 0;
  std::size_t n_total = 0;
  bool reliable = false;
  std::string note;          // reason when unreliable
};

// Discrete maximum-likelihood exponent of P(x) ~ x^-gamma for x >= xmin,
// with xmin chosen to minimise the Kolmogorov-Smirnov distance between the
// tail and the fitted model. Zero values are ignored.
PowerLawFit fit_power_law(std::span<const std::uint64_t> values, const PowerLawOptions& opts = {});

// Least-squares slope of log frequency against log value. Biased; kept for
// comparison with the likelihood estimate.
double fit_power_law_loglog(std::span<const std::uint64_t> values);

// ---------------------------------------------------------------------------
// Per-vertex distributions

enum class Quantity { degree_in, degree_out, strength_in, strength_out, selectivity_in, selectivity_out };

std::string_view to_string(Quantity q) noexcept;
inline constexpr Quantity kAllQuantities[] = {
    Quantity::degree_in,   Quantity::degree_out,     Quantity::strength_in,
    Quantity::strength_out, Quantity::selectivity_in, Quantity::selectivity_out};

// Indexed by vertex id.
std::vector<double> vertex_quantity(const WeightedDigraph& g, Quantity q);

struct RankEntry {
  std::size_t rank = 0;  // 1-based
  double value = 0.0;
  std::string vertex;
};

struct RankDistribution {
  Quantity quantity = Quantity::degree_in;
  std::vector<RankEntry> entries;  // value descending, ties by label
};

RankDistribution rank_distribution(const WeightedDigraph& g, Quantity q);

// ---------------------------------------------------------------------------

struct SummaryOptions {
  PathMode path_mode = PathMode::undirected_projection;
  PowerLawOptions power_law;
};

struct LayerSummary {
  AspectCoord coord;
  std::size_t N = 0;
  std::size_t K = 0;
  std::optional<double> L;
  std::optional<double> C;
  std::optional<double> T;
  std::optional<std::size_t> omega;
  std::map<Quantity, PowerLawFit> gamma_fits;  // degree/strength in/out
  std::map<std::string, std::string> absent;   // field -> reason
};

LayerSummary summarize(const Layer& layer, const SummaryOptions& opts = {});

}  // namespace mlnet
