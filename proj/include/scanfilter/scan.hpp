#ifndef SCANFILTER_SCAN_HPP
#define SCANFILTER_SCAN_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "scanfilter/error.hpp"

namespace scanfilter {

// One lidar sweep: ordered ranges at uniformly incremented bearing angles.
// Immutable by convention once constructed; nothing downstream mutates it.
struct LaserScan {
  double timestamp = 0.0;        // seconds, monotone across a stream
  double angle_min = 0.0;        // bearing of ranges[0], radians, sensor frame
  double angle_increment = 0.0;  // radians between consecutive beams, > 0
  double range_min = 0.0;        // sensor validity bounds, meters
  double range_max = 0.0;
  std::vector<double> ranges;    // meters; invalid entries preserved, flagged

  std::size_t size() const { return ranges.size(); }

  // A range is valid iff finite and within the sensor bounds. Out-of-bound
  // and non-finite entries stay in the payload but are skipped everywhere.
  bool range_valid(std::size_t i) const {
    const double r = ranges[i];
    return std::isfinite(r) && r >= range_min && r <= range_max;
  }

  double beam_angle(std::size_t i) const {
    return angle_min + static_cast<double>(i) * angle_increment;
  }

  double field_of_view() const {
    return ranges.empty()
               ? 0.0
               : static_cast<double>(ranges.size() - 1) * angle_increment;
  }
};

struct ValidationReport {
  std::size_t valid_count = 0;
  std::vector<std::size_t> invalid_indices;
};

// Checks geometry and classifies every range. Deterministic and
// per-index independent; does not touch the pipeline cost counters.
inline ValidationReport validate_scan(const LaserScan& scan) {
  if (scan.ranges.empty())
    throw Error(Errc::EMPTY_SCAN, "scan has no ranges");
  if (scan.angle_increment <= 0.0 || !std::isfinite(scan.angle_increment) ||
      !std::isfinite(scan.angle_min))
    throw Error(Errc::BAD_GEOMETRY, "angles must be finite, increment > 0");
  constexpr double two_pi = 6.283185307179586476925286766559;
  if (scan.field_of_view() > two_pi * (1.0 + 1e-12))
    throw Error(Errc::BAD_GEOMETRY, "field of view exceeds 2*pi");

  ValidationReport report;
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    if (scan.range_valid(i))
      ++report.valid_count;
    else
      report.invalid_indices.push_back(i);
  }
  return report;
}

}  // namespace scanfilter

#endif  // SCANFILTER_SCAN_HPP
