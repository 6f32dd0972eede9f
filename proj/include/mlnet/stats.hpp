#pragma once

#include <optional>
#include <span>

namespace mlnet {

struct Correlation {
  double r = 0.0;
  double p_value = 1.0;  // two-sided, Student t with n - 2 degrees of freedom
};

// Pearson correlation by the two-pass (centred) formula. Empty when the
// lengths differ, n < 2, or either vector is constant.
std::optional<Correlation> pearson(std::span<const double> x, std::span<const double> y);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1)
};

// Two-pass mean and sample standard deviation; sd = 0 when n < 2.
MeanSd mean_sd(std::span<const double> x);

}  // namespace mlnet
