#include <algorithm>
#include <cmath>
#include <numeric>

#include "mlnet/error.hpp"
#include "mlnet/motifs.hpp"
#include "mlnet/rng.hpp"
#include "parallel.hpp"

namespace mlnet {

std::array<double, kTriadClasses> TriadProfile::concentrations() const {
  std::array<double, kTriadClasses> out{};
  const auto total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) return out;
  for (std::size_t i = 0; i < kTriadClasses; ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return out;
}

TriadProfile significance_profile(const WeightedDigraph& g, const NullModelOptions& opts) {
  if (opts.samples < 2) {
    throw Error(errc::invalid_argument, "significance profile needs at least 2 null samples");
  }
  TriadProfile p;
  p.null_sample_size = opts.samples;
  p.swaps_per_edge = opts.swaps_per_edge;
  p.seed = opts.seed;

  const auto topo = Topology::from_graph(g);
  p.counts = triad_census(topo);

  std::vector<TriadCounts> samples(opts.samples);
  const unsigned threads = opts.threads ? opts.threads : detail::default_threads();
  detail::parallel_chunks(opts.samples, threads, [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) {
      Topology r{topo.vertex_count, randomize_edges(topo, opts.swaps_per_edge, derive_seed(opts.seed, s))};
      samples[s] = triad_census(r);
    }
  });

  std::vector<double> column(opts.samples);
  for (std::size_t i = 0; i < kTriadClasses; ++i) {
    for (std::size_t s = 0; s < opts.samples; ++s) column[s] = static_cast<double>(samples[s][i]);
    const auto ms = mean_sd(column);
    p.random_mean[i] = ms.mean;
    p.random_sd[i] = ms.sd;
    const double orig = static_cast<double>(p.counts[i]);
    if (ms.sd > 0.0) {
      p.z[i] = (orig - ms.mean) / ms.sd;
    } else {
      p.z[i] = 0.0;
      if (orig != ms.mean) p.degenerate.push_back(i);
    }
  }

  double norm = 0.0;
  for (double z : p.z) norm += z * z;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    p.tsp_defined = true;
    for (std::size_t i = 0; i < kTriadClasses; ++i) p.tsp[i] = p.z[i] / norm;
  }
  return p;
}

ProfileCorrelations profile_correlations(const std::map<AspectCoord, TriadProfile>& profiles) {
  if (profiles.size() < 2) {
    throw Error(errc::invalid_argument, "profile correlations need at least two profiles");
  }
  ProfileCorrelations out;
  for (const auto& [c, _] : profiles) out.layers.push_back(c);
  std::stable_sort(out.layers.begin(), out.layers.end(), presentation_less);

  for (std::size_t i = 0; i < out.layers.size(); ++i) {
    for (std::size_t j = i + 1; j < out.layers.size(); ++j) {
      const auto& a = profiles.at(out.layers[i]);
      const auto& b = profiles.at(out.layers[j]);
      std::array<double, kTriadClasses> ca{}, cb{};
      for (std::size_t k = 0; k < kTriadClasses; ++k) {
        ca[k] = static_cast<double>(a.counts[k]);
        cb[k] = static_cast<double>(b.counts[k]);
      }
      out.pairs.emplace_back(i, j);
      out.frequency.push_back(pearson(ca, cb));
      out.tsp.push_back(a.tsp_defined && b.tsp_defined ? pearson(a.tsp, b.tsp) : std::nullopt);
    }
  }
  return out;
}

}  // namespace mlnet
