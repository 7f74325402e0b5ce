#ifndef SCANFILTER_TESTS_HELPERS_HPP
#define SCANFILTER_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "scanfilter/scan.hpp"

namespace helpers {

// Scan with the given ranges, symmetric field of view, generous bounds.
inline scanfilter::LaserScan make_scan(std::vector<double> ranges,
                                       double angle_increment = 0.004,
                                       double range_min = 0.05,
                                       double range_max = 1000.0) {
  scanfilter::LaserScan scan;
  scan.angle_increment = angle_increment;
  scan.angle_min = -0.5 * static_cast<double>(ranges.size() - 1) *
                   angle_increment;
  scan.range_min = range_min;
  scan.range_max = range_max;
  scan.ranges = std::move(ranges);
  return scan;
}

}  // namespace helpers

#endif  // SCANFILTER_TESTS_HELPERS_HPP
