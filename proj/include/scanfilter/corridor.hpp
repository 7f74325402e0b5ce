#ifndef SCANFILTER_CORRIDOR_HPP
#define SCANFILTER_CORRIDOR_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "scanfilter/error.hpp"
#include "scanfilter/instrumentation.hpp"
#include "scanfilter/scan.hpp"

namespace scanfilter {

struct CorridorConfig {
  double range_error_delta = 0.03;  // per-beam range noise bound, meters
  double score_threshold = 0.5;     // |score| at or above which a corridor is declared
  int min_pairs = 20;               // minimum compared pairs for a meaningful score
};

struct CorridorReport {
  double score = 0.0;      // normalized quarter-signed sum, in [-1, 1]
  double abs_score = 0.0;
  std::size_t pairs_compared = 0;
  bool is_corridor = false;
};

// Smallest beam offset whose range difference on a flat wall exceeds twice
// the sensor error: alpha = arccos(r / (r + 2*delta)), stride =
// ceil(alpha / angle_increment), at least 1. Monotone non-increasing in r.
inline int next_point_stride(double range, double angle_increment,
                             double delta) {
  assert(range > 0.0 && angle_increment > 0.0 && delta > 0.0);
  const double alpha = std::acos(range / (range + 2.0 * delta));
  const int stride = static_cast<int>(std::ceil(alpha / angle_increment));
  return std::max(1, stride);
}

// Range thresholds r_s = 2*delta*cos(s*inc)/(1 - cos(s*inc)) for
// s = 1, 2, ...: the stride for a range r is the smallest s with r >= r_s.
// This inverts the same cosine inequality as next_point_stride (cos is
// monotone while positive), without a per-point acos. The table ends with
// a 0 entry once cos(s*inc) <= 0, where any positive range qualifies.
inline std::vector<double> stride_breakpoints(double angle_increment,
                                              double delta) {
  assert(angle_increment > 0.0 && delta > 0.0);
  std::vector<double> breakpoints;
  for (int s = 1;; ++s) {
    const double c = std::cos(static_cast<double>(s) * angle_increment);
    if (c <= 0.0) {
      breakpoints.push_back(0.0);
      break;
    }
    breakpoints.push_back(2.0 * delta * c / (1.0 - c));
  }
  return breakpoints;
}

inline std::size_t stride_from_breakpoints(
    const std::vector<double>& breakpoints, double range) {
  if (range >= breakpoints.front()) return 1;
  const auto it = std::lower_bound(
      breakpoints.begin(), breakpoints.end(), range,
      [](double breakpoint, double r) { return breakpoint > r; });
  return static_cast<std::size_t>(it - breakpoints.begin()) + 1;
}

// Featureless-corridor detector. Ranges along straight walls change
// monotonically, so the sign of the range difference between a point and a
// point one stride ahead is constant inside each quarter of the view and
// alternates between quarters. Quarters are anchored at the sensor-frame
// axes (-pi/2, 0, +pi/2, +-pi after wrapping): for a robot moving along or
// across a corridor these boundaries coincide with the extrema of the wall
// range profile, which is what makes the per-quarter sign consistent.
//
// A detector instance caches the stride lookup table for the stream's beam
// geometry; like the filter it is single-stream, not for concurrent use.
class CorridorDetector {
public:
  explicit CorridorDetector(const CorridorConfig& config) : config_(config) {
    if (config.range_error_delta <= 0.0)
      throw Error(Errc::BAD_PARAMS, "range_error_delta must be > 0");
    if (config.score_threshold <= 0.0 || config.score_threshold > 1.0)
      throw Error(Errc::BAD_PARAMS, "score_threshold must be in (0, 1]");
    if (config.min_pairs < 1)
      throw Error(Errc::BAD_PARAMS, "min_pairs must be >= 1");
  }

  const CorridorConfig& config() const { return config_; }

  // Throws TOO_FEW_POINTS when fewer than min_pairs pairs survive the
  // stride/validity/quarter checks.
  CorridorReport score(const LaserScan& scan) const {
    const std::size_t n = scan.ranges.size();
    if (n == 0 || scan.angle_increment <= 0.0 ||
        !std::isfinite(scan.angle_min) || !std::isfinite(scan.angle_increment))
      throw Error(Errc::BAD_GEOMETRY,
                  "corridor scoring needs a non-empty scan with finite "
                  "angles and positive angle_increment");
    rebuild_tables(scan);

    auto& touches = cost::counters().point_touches;
    std::int64_t signed_sum = 0;
    std::size_t pairs = 0;

    for (std::size_t i = 0; i < n; ++i) {
      ++touches;
      if (!scan.range_valid(i)) continue;
      const double r = scan.ranges[i];
      const std::size_t j = i + stride_for(r);
      if (j >= n) continue;
      if (quadrant_[i] != quadrant_[j]) continue;
      if (!scan.range_valid(j)) continue;

      const double diff = r - scan.ranges[j];
      int sgn = (diff > 0.0) - (diff < 0.0);
      if (quadrant_[i] == 1 || quadrant_[i] == 3) sgn = -sgn;
      signed_sum += sgn;
      ++pairs;
    }

    if (pairs < static_cast<std::size_t>(config_.min_pairs))
      throw Error(Errc::TOO_FEW_POINTS,
                  "only " + std::to_string(pairs) + " comparable pairs, need " +
                      std::to_string(config_.min_pairs));

    CorridorReport report;
    report.pairs_compared = pairs;
    report.score = std::clamp(
        static_cast<double>(signed_sum) / static_cast<double>(pairs), -1.0, 1.0);
    report.abs_score = std::abs(report.score);
    report.is_corridor = report.abs_score >= config_.score_threshold &&
                         pairs >= static_cast<std::size_t>(config_.min_pairs);
    return report;
  }

private:
  std::size_t stride_for(double range) const {
    return stride_from_breakpoints(stride_breakpoints_, range);
  }

  void rebuild_tables(const LaserScan& scan) const {
    const std::size_t n = scan.ranges.size();
    const double inc = scan.angle_increment;

    const bool geometry_changed = inc != cached_increment_;
    if (geometry_changed) {
      cached_increment_ = inc;
      stride_breakpoints_ =
          stride_breakpoints(inc, config_.range_error_delta);
    }

    if (geometry_changed || n != quadrant_.size() ||
        scan.angle_min != cached_angle_min_) {
      cached_angle_min_ = scan.angle_min;
      quadrant_.assign(n, 0);
      constexpr double half_pi = 1.5707963267948966;
      // Beam angles are monotone, so quadrants form contiguous runs bounded
      // by the indices where the angle crosses a multiple of pi/2.
      int k = static_cast<int>(std::floor(scan.angle_min / half_pi));
      std::size_t i = 0;
      while (i < n) {
        const double boundary = half_pi * static_cast<double>(k + 1);
        const double steps = (boundary - scan.angle_min) / inc;
        const std::size_t next =
            steps >= static_cast<double>(n)
                ? n
                : static_cast<std::size_t>(std::ceil(steps));
        if (next > i) {
          const std::uint8_t q =
              static_cast<std::uint8_t>(((k % 4) + 6) % 4);  // wrapped to [-pi, pi)
          std::fill(quadrant_.begin() + static_cast<std::ptrdiff_t>(i),
                    quadrant_.begin() + static_cast<std::ptrdiff_t>(next), q);
          i = next;
        }
        ++k;
      }
    }
  }

  CorridorConfig config_;
  mutable double cached_increment_ = -1.0;
  mutable double cached_angle_min_ = std::numeric_limits<double>::quiet_NaN();
  mutable std::vector<double> stride_breakpoints_;
  mutable std::vector<std::uint8_t> quadrant_;
};

// One-shot convenience over a fresh detector.
inline CorridorReport corridor_score(const LaserScan& scan,
                                     const CorridorConfig& config) {
  return CorridorDetector(config).score(scan);
}

}  // namespace scanfilter

#endif  // SCANFILTER_CORRIDOR_HPP
