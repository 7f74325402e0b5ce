#ifndef SCANFILTER_HISTOGRAM_HPP
#define SCANFILTER_HISTOGRAM_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "scanfilter/error.hpp"
#include "scanfilter/instrumentation.hpp"
#include "scanfilter/scan.hpp"

namespace scanfilter {

// Four ways to reduce a scan to m columns. The range modes partition the
// span between the scan's lowest and highest valid range into m equal
// intervals; the angle modes partition the beam index space into m
// contiguous near-even blocks (index blocks are identical across scans of
// one stream, which is what the correlation needs).
enum class HistogramMode {
  RANGE_COUNT,  // points per range interval
  RANGE_AVG,    // mean range per range interval
  ANGLE_AVG,    // mean range per index block
  ANGLE_DISP,   // population variance of ranges per index block
};

inline const char* histogram_mode_name(HistogramMode mode) {
  switch (mode) {
    case HistogramMode::RANGE_COUNT: return "range-count";
    case HistogramMode::RANGE_AVG: return "range-avg";
    case HistogramMode::ANGLE_AVG: return "angle-avg";
    case HistogramMode::ANGLE_DISP: return "angle-disp";
  }
  return "unknown";
}

struct HistogramConfig {
  HistogramMode mode = HistogramMode::ANGLE_AVG;
  int columns = 30;  // m, >= 2
};

struct Histogram {
  std::vector<double> values;  // length == config.columns
  HistogramConfig config;
  std::size_t source_points = 0;  // valid points consumed
};

// Reduces a scan to an m-column histogram. Each scan point is read exactly
// once (the range modes bin from a scratch copy of the valid ranges so the
// interval edges are known before binning). Empty columns are 0, never NaN.
//
// Throws BAD_PARAMS (columns < 2), EMPTY_SCAN, TOO_FEW_POINTS (fewer valid
// points than columns), DEGENERATE_RANGE (range modes, all valid ranges
// identical).
inline Histogram build_histogram(const LaserScan& scan,
                                 const HistogramConfig& config) {
  if (config.columns < 2)
    throw Error(Errc::BAD_PARAMS, "histogram needs at least 2 columns");
  const std::size_t n = scan.ranges.size();
  if (n == 0) throw Error(Errc::EMPTY_SCAN, "cannot histogram an empty scan");

  const std::size_t m = static_cast<std::size_t>(config.columns);
  Histogram hist;
  hist.config = config;
  hist.values.assign(m, 0.0);

  auto& touches = cost::counters().point_touches;

  if (config.mode == HistogramMode::ANGLE_AVG ||
      config.mode == HistogramMode::ANGLE_DISP) {
    std::vector<double> sum(m, 0.0);
    std::vector<double> sum_sq(m, 0.0);
    std::vector<std::size_t> count(m, 0);

    for (std::size_t i = 0; i < n; ++i) {
      ++touches;
      if (!scan.range_valid(i)) continue;
      const double r = scan.ranges[i];
      const std::size_t block = i * m / n;  // near-even contiguous blocks
      sum[block] += r;
      sum_sq[block] += r * r;
      ++count[block];
    }

    std::size_t valid = 0;
    for (std::size_t b = 0; b < m; ++b) valid += count[b];
    if (valid < m)
      throw Error(Errc::TOO_FEW_POINTS,
                  std::to_string(valid) + " valid points for " +
                      std::to_string(m) + " columns");
    hist.source_points = valid;

    for (std::size_t b = 0; b < m; ++b) {
      if (count[b] == 0) continue;
      const double c = static_cast<double>(count[b]);
      const double mean = sum[b] / c;
      if (config.mode == HistogramMode::ANGLE_AVG) {
        hist.values[b] = mean;
      } else {
        hist.values[b] = std::max(0.0, sum_sq[b] / c - mean * mean);
      }
    }
    return hist;
  }

  // Range modes: one touch per scan point collecting the valid ranges and
  // their extremes, then binning off the scratch copy.
  std::vector<double> valid_ranges;
  valid_ranges.reserve(n);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    ++touches;
    if (!scan.range_valid(i)) continue;
    const double r = scan.ranges[i];
    valid_ranges.push_back(r);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }

  if (valid_ranges.size() < m)
    throw Error(Errc::TOO_FEW_POINTS,
                std::to_string(valid_ranges.size()) + " valid points for " +
                    std::to_string(m) + " columns");
  if (hi == lo)
    throw Error(Errc::DEGENERATE_RANGE,
                "all valid ranges equal; range partition undefined");
  hist.source_points = valid_ranges.size();

  const double width = hi - lo;
  std::vector<std::size_t> count(m, 0);
  std::vector<double> sum(m, 0.0);
  for (const double r : valid_ranges) {
    // Top interval closed so r == hi lands in the last column.
    std::size_t bin = static_cast<std::size_t>((r - lo) / width *
                                               static_cast<double>(m));
    if (bin >= m) bin = m - 1;
    ++count[bin];
    sum[bin] += r;
  }

  for (std::size_t b = 0; b < m; ++b) {
    if (config.mode == HistogramMode::RANGE_COUNT) {
      hist.values[b] = static_cast<double>(count[b]);
    } else if (count[b] > 0) {
      hist.values[b] = sum[b] / static_cast<double>(count[b]);
    }
  }
  return hist;
}

}  // namespace scanfilter

#endif  // SCANFILTER_HISTOGRAM_HPP
