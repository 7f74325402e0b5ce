#ifndef SCANFILTER_CORRELATION_HPP
#define SCANFILTER_CORRELATION_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "scanfilter/instrumentation.hpp"

namespace scanfilter {

// Variance floor below which a correlation coefficient is undefined.
// Constant histograms (stationary robot facing uniform structure) hit this
// legitimately; callers must handle the empty optional.
inline constexpr double kVarianceEpsilon = 1e-12;

// Pearson correlation coefficient, single pass over the sums
// sum(x), sum(y), sum(xy), sum(x^2), sum(y^2):
//
//   P = (n*sum(xy) - sum(x)*sum(y)) /
//       sqrt([n*sum(x^2) - sum(x)^2] * [n*sum(y^2) - sum(y)^2])
//
// Result clamped to [-1, 1] to keep rounding out of threshold comparisons.
// Returns nullopt when either side has population variance below
// kVarianceEpsilon.
inline std::optional<double> pearson(std::span<const double> x,
                                     std::span<const double> y) {
  const std::size_t n = x.size();
  assert(n == y.size() && n >= 2);

  double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
  }
  // 5 additions + 3 multiplications per element.
  cost::counters().correlation_element_ops += 8 * n;

  const double dn = static_cast<double>(n);
  const double var_x = (sxx - sx * sx / dn) / dn;
  const double var_y = (syy - sy * sy / dn) / dn;
  if (var_x < kVarianceEpsilon || var_y < kVarianceEpsilon)
    return std::nullopt;

  const double numerator = dn * sxy - sx * sy;
  const double denominator =
      std::sqrt((dn * sxx - sx * sx) * (dn * syy - sy * sy));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

// Fractional (mean-of-ties) ranks, 1-based.
inline std::vector<double> fractional_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j share the mean of ranks i+1..j+1
    const double mean_rank = static_cast<double>(i + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

// Spearman = Pearson between the rank variables. nullopt when either rank
// vector is constant (all values tied).
inline std::optional<double> spearman(std::span<const double> x,
                                      std::span<const double> y) {
  assert(x.size() == y.size() && x.size() >= 2);
  const std::vector<double> rx = fractional_ranks(x);
  const std::vector<double> ry = fractional_ranks(y);
  return pearson(rx, ry);
}

// Kendall tau-a: (concordant - discordant) / C(n,2), ties counting as
// neither. Direct O(n^2) enumeration; this kernel exists as a reference,
// not the production path.
inline double kendall(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  assert(n == y.size() && n >= 2);

  long long concordant = 0;
  long long discordant = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      const double prod = dx * dy;
      if (prod > 0.0)
        ++concordant;
      else if (prod < 0.0)
        ++discordant;
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

}  // namespace scanfilter

#endif  // SCANFILTER_CORRELATION_HPP
