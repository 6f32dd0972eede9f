#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <boost/math/tools/minima.hpp>

#include "mlnet/error.hpp"
#include "mlnet/measures.hpp"

namespace mlnet {

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw Error(errc::invalid_argument, "hurwitz_zeta needs s > 1, q > 0");
  // Euler-Maclaurin: direct sum of the first terms, integral tail and
  // Bernoulli corrections at a = q + M.
  constexpr int M = 10;
  static constexpr double kBernoulliOverFactorial[] = {
      1.0 / 6.0 / 2.0,                   // B2 / 2!
      -1.0 / 30.0 / 24.0,                // B4 / 4!
      1.0 / 42.0 / 720.0,                // B6 / 6!
      -1.0 / 30.0 / 40320.0,             // B8 / 8!
      5.0 / 66.0 / 3628800.0,            // B10 / 10!
      -691.0 / 2730.0 / 479001600.0,     // B12 / 12!
      7.0 / 6.0 / 87178291200.0,         // B14 / 14!
  };
  double sum = 0.0;
  for (int k = 0; k < M; ++k) sum += std::pow(q + k, -s);
  const double a = q + M;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double factor = s * std::pow(a, -s - 1.0);
  const double inv_a2 = 1.0 / (a * a);
  for (int j = 1; j <= 7; ++j) {
    sum += kBernoulliOverFactorial[j - 1] * factor;
    factor *= (s + 2 * j - 1) * (s + 2 * j) * inv_a2;
  }
  return sum;
}

namespace {

struct TailFit {
  double gamma;
  double ks;
};

// `tail` sorted ascending, all >= xmin, at least two distinct values.
TailFit fit_tail(std::span<const std::uint64_t> tail, std::uint64_t xmin, double sum_log,
                 const PowerLawOptions& opts) {
  const double n = static_cast<double>(tail.size());
  const double xm = static_cast<double>(xmin);
  auto nll = [&](double g) { return n * std::log(hurwitz_zeta(g, xm)) + g * sum_log; };
  const auto [gamma, _] = boost::math::tools::brent_find_minima(nll, opts.gamma_lo, opts.gamma_hi, 48);

  const double z0 = hurwitz_zeta(gamma, xm);
  double ks = 0.0;
  std::size_t i = 0;
  while (i < tail.size()) {
    const std::uint64_t x = tail[i];
    std::size_t j = i;
    while (j < tail.size() && tail[j] == x) ++j;
    const double emp = static_cast<double>(j) / n;
    const double model = 1.0 - hurwitz_zeta(gamma, static_cast<double>(x) + 1.0) / z0;
    ks = std::max(ks, std::abs(emp - model));
    i = j;
  }
  return {gamma, ks};
}

}  // namespace

PowerLawFit fit_power_law(std::span<const std::uint64_t> values, const PowerLawOptions& opts) {
  std::vector<std::uint64_t> x;
  x.reserve(values.size());
  for (auto v : values) {
    if (v > 0) x.push_back(v);
  }
  std::sort(x.begin(), x.end());

  PowerLawFit fit;
  fit.n_total = x.size();
  fit.gamma = std::numeric_limits<double>::quiet_NaN();
  if (x.empty()) {
    fit.note = "no positive values";
    return fit;
  }

  // suffix_log[i] = sum of log x[k] for k >= i
  std::vector<double> suffix_log(x.size() + 1, 0.0);
  for (std::size_t i = x.size(); i-- > 0;) {
    suffix_log[i] = suffix_log[i + 1] + std::log(static_cast<double>(x[i]));
  }

  auto try_xmin = [&](std::size_t start) -> std::optional<TailFit> {
    std::span<const std::uint64_t> tail(x.data() + start, x.size() - start);
    if (tail.front() == tail.back()) return std::nullopt;
    return fit_tail(tail, x[start], suffix_log[start], opts);
  };

  std::optional<std::size_t> best_start;
  std::optional<TailFit> best;
  if (opts.xmin) {
    const auto it = std::lower_bound(x.begin(), x.end(), *opts.xmin);
    if (it != x.end()) {
      best_start = static_cast<std::size_t>(it - x.begin());
      best = try_xmin(*best_start);
    }
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0 && x[i] == x[i - 1]) continue;
      if (x.size() - i < std::max<std::size_t>(opts.min_tail, 2)) break;
      auto f = try_xmin(i);
      if (f && (!best || f->ks < best->ks)) {
        best = f;
        best_start = i;
      }
    }
    if (!best) {
      // Not enough data for any admissible cutoff: fit the whole sample.
      best_start = 0;
      best = try_xmin(0);
    }
  }

  if (!best_start) {
    fit.note = "no values at or above the requested xmin";
    return fit;
  }
  fit.xmin = static_cast<double>(x[*best_start]);
  fit.n_tail = x.size() - *best_start;
  if (!best) {
    fit.note = "tail has a single distinct value; exponent unbounded";
    return fit;
  }
  fit.gamma = best->gamma;
  fit.ks_distance = best->ks;
  if (fit.n_tail < opts.min_tail) {
    fit.note = "fewer than " + std::to_string(opts.min_tail) + " values in the fitted tail";
  } else if (fit.gamma <= opts.gamma_lo + 1e-6 || fit.gamma >= opts.gamma_hi - 1e-6) {
    fit.note = "estimate at the search boundary";
  } else {
    fit.reliable = true;
  }
  return fit;
}

double fit_power_law_loglog(std::span<const std::uint64_t> values) {
  std::map<std::uint64_t, std::size_t> hist;
  std::size_t n = 0;
  for (auto v : values) {
    if (v > 0) {
      ++hist[v];
      ++n;
    }
  }
  if (hist.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(hist.size());
  for (const auto& [k, c] : hist) {
    const double lx = std::log(static_cast<double>(k));
    const double ly = std::log(static_cast<double>(c) / static_cast<double>(n));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return -slope;
}

}  // namespace mlnet
