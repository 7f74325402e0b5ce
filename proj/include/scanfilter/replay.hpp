#ifndef SCANFILTER_REPLAY_HPP
#define SCANFILTER_REPLAY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "scanfilter/filter.hpp"
#include "scanfilter/scan.hpp"

namespace scanfilter {

struct DecisionRecord {
  std::uint64_t scan_id = 0;
  FilterDecision decision;
  std::uint64_t filter_time_ns = 0;
};

struct RunStats {
  std::uint64_t total = 0;
  std::uint64_t kept = 0;
  std::uint64_t dropped = 0;
  std::uint64_t corridor_keeps = 0;
  double drop_pct = 0.0;  // 0 over an empty stream
  std::uint64_t p50_filter_time_ns = 0;
  std::uint64_t p95_filter_time_ns = 0;
};

// Runs one filter instance over a scan sequence in arrival order. When
// `kept_out` is given, KEEP scans are forwarded to it untouched.
inline std::vector<DecisionRecord> replay_filter(
    std::span<const LaserScan> scans, const FilterParams& params,
    const CorridorConfig& corridor = CorridorConfig{},
    std::vector<LaserScan>* kept_out = nullptr) {
  ScanFilter filter(params, corridor);
  std::vector<DecisionRecord> records;
  records.reserve(scans.size());

  for (std::size_t i = 0; i < scans.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    FilterDecision decision = filter.process(scans[i]);
    const auto stop = std::chrono::steady_clock::now();

    if (kept_out && decision.verdict == Verdict::KEEP)
      kept_out->push_back(scans[i]);

    DecisionRecord record;
    record.scan_id = i;
    record.filter_time_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count());
    record.decision = std::move(decision);
    records.push_back(std::move(record));
  }
  return records;
}

inline std::uint64_t percentile_ns(std::vector<std::uint64_t> sorted_times,
                                   double fraction) {
  if (sorted_times.empty()) return 0;
  std::sort(sorted_times.begin(), sorted_times.end());
  const auto rank = static_cast<std::size_t>(
      fraction * static_cast<double>(sorted_times.size() - 1) + 0.5);
  return sorted_times[std::min(rank, sorted_times.size() - 1)];
}

inline RunStats compute_stats(std::span<const DecisionRecord> records) {
  RunStats stats;
  stats.total = records.size();
  std::vector<std::uint64_t> times;
  times.reserve(records.size());
  for (const DecisionRecord& record : records) {
    times.push_back(record.filter_time_ns);
    if (record.decision.verdict == Verdict::KEEP) {
      ++stats.kept;
      if (record.decision.reason == DecisionReason::CORRIDOR)
        ++stats.corridor_keeps;
    } else {
      ++stats.dropped;
    }
  }
  if (stats.total > 0)
    stats.drop_pct =
        100.0 * static_cast<double>(stats.dropped) / static_cast<double>(stats.total);
  stats.p50_filter_time_ns = percentile_ns(times, 0.50);
  stats.p95_filter_time_ns = percentile_ns(times, 0.95);
  return stats;
}

}  // namespace scanfilter

#endif  // SCANFILTER_REPLAY_HPP
