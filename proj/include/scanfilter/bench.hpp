#ifndef SCANFILTER_BENCH_HPP
#define SCANFILTER_BENCH_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "scanfilter/scan.hpp"
#include "scanfilter/synth.hpp"

namespace scanfilter {

// Stand-in for the downstream scan matcher the filter is supposed to
// relieve: 100 candidate poses, each transforming every valid point into
// the world frame and probing a pseudo-random grid. Only a cost reference;
// the accumulated value is meaningless and returned solely so the work
// cannot be optimized away.
class MatcherSim {
public:
  MatcherSim() : grid_(1u << 16) {
    std::uint64_t state = 42;
    for (float& cell : grid_)
      cell = static_cast<float>(detail::uniform01(state));
  }

  double run(const LaserScan& scan) {
    const std::size_t n = scan.ranges.size();
    cos_.resize(n);
    sin_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = scan.beam_angle(i);
      cos_[i] = std::cos(a);
      sin_[i] = std::sin(a);
    }
    double acc = 0.0;
    for (int pose = 0; pose < 100; ++pose) {
      const double pa = static_cast<double>(pose) * 0.0314159;
      const double px = static_cast<double>(pose) * 0.003;
      const double py = static_cast<double>(pose) * -0.002;
      const double ca = std::cos(pa);
      const double sa = std::sin(pa);
      for (std::size_t i = 0; i < n; ++i) {
        if (!scan.range_valid(i)) continue;
        const double r = scan.ranges[i];
        const double x = px + r * (cos_[i] * ca - sin_[i] * sa);
        const double y = py + r * (sin_[i] * ca + cos_[i] * sa);
        const auto xi = static_cast<std::int32_t>(x * 20.0) + 32768;
        const auto yi = static_cast<std::int32_t>(y * 20.0) + 32768;
        const std::uint32_t idx =
            (static_cast<std::uint32_t>(xi) * 2654435761u) ^
            static_cast<std::uint32_t>(yi);
        acc += grid_[idx & 0xFFFFu];
      }
    }
    return acc;
  }

private:
  std::vector<float> grid_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

// Per-scan reference times in nanoseconds.
inline std::vector<std::uint64_t> matcher_reference_times(
    std::span<const LaserScan> scans) {
  MatcherSim matcher;
  volatile double sink = 0.0;
  std::vector<std::uint64_t> times;
  times.reserve(scans.size());
  for (const LaserScan& scan : scans) {
    const auto start = std::chrono::steady_clock::now();
    sink = sink + matcher.run(scan);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count()));
  }
  return times;
}

}  // namespace scanfilter

#endif  // SCANFILTER_BENCH_HPP
