#ifndef SCANFILTER_FILTER_HPP
#define SCANFILTER_FILTER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "scanfilter/correlation.hpp"
#include "scanfilter/corridor.hpp"
#include "scanfilter/error.hpp"
#include "scanfilter/histogram.hpp"
#include "scanfilter/scan.hpp"

namespace scanfilter {

enum class Verdict { KEEP, DROP };

enum class DecisionReason {
  WINDOW_WARMUP,          // window not full yet
  CORRIDOR,               // corridor veto: featureless corridors are never dropped
  LOW_PAIR_CORRELATION,   // some window pair below p_pair
  LOW_COMMON_CORRELATION, // product of pairs below p_common
  DEGENERATE_HISTOGRAM,   // scan statistics could not be computed; fail open
  REDUNDANT,              // correlated with the whole window: drop
};

inline const char* to_string(Verdict v) {
  return v == Verdict::KEEP ? "KEEP" : "DROP";
}

inline const char* to_string(DecisionReason reason) {
  switch (reason) {
    case DecisionReason::WINDOW_WARMUP: return "window_warmup";
    case DecisionReason::CORRIDOR: return "corridor";
    case DecisionReason::LOW_PAIR_CORRELATION: return "low_pair_correlation";
    case DecisionReason::LOW_COMMON_CORRELATION: return "low_common_correlation";
    case DecisionReason::DEGENERATE_HISTOGRAM: return "degenerate_histogram";
    case DecisionReason::REDUNDANT: return "redundant";
  }
  return "unknown";
}

struct FilterDecision {
  Verdict verdict = Verdict::KEEP;
  DecisionReason reason = DecisionReason::WINDOW_WARMUP;
  std::vector<double> pair_correlations;  // one per window entry when computed
  double common_correlation = std::numeric_limits<double>::quiet_NaN();
  double corridor_score = std::numeric_limits<double>::quiet_NaN();
};

// Whether dropped scans still enter the window. ALL_SCANS (the default)
// keeps the window at the k most recent scans so the speed calibration of
// the window size stays meaningful; KEPT_ONLY retains only forwarded scans.
enum class WindowPolicy { ALL_SCANS, KEPT_ONLY };

struct FilterParams {
  int window_size = 5;            // k, in [1, 30]
  double p_pair = 0.96;           // per-pair correlation floor, (0, 1]
  double p_common = 0.8;          // floor for the product of all pairs, (0, 1]
  HistogramConfig histogram{};    // defaults to 30-column angle averages
  double corridor_threshold = 0.5;
  bool corridor_enabled = true;
  WindowPolicy window_policy = WindowPolicy::ALL_SCANS;
};

// Distance traveled between two scan captures, and the capture period.
struct SpeedProfile {
  double avg_speed_cm = 2.2;  // centimeters per quantum
  double quantum_s = 0.025;   // seconds per scan
};

// window_size = floor(27 / avg_speed^2), clamped to [1, 30].
// avg_speed in centimeters per quantum.
inline int derive_window_size(double avg_speed_cm) {
  if (avg_speed_cm <= 0.0)
    throw Error(Errc::BAD_PARAMS, "avg_speed must be > 0");
  const double raw = 27.0 / (avg_speed_cm * avg_speed_cm);
  const int floored = static_cast<int>(std::floor(raw));
  return std::clamp(floored, 1, 30);
}

inline int derive_window_size(const SpeedProfile& profile) {
  return derive_window_size(profile.avg_speed_cm);
}

// p_common = p_pair ^ window_size.
inline double derive_common_threshold(double p_pair, int window_size) {
  if (p_pair <= 0.0 || p_pair > 1.0)
    throw Error(Errc::BAD_PARAMS, "p_pair must be in (0, 1]");
  if (window_size < 1)
    throw Error(Errc::BAD_PARAMS, "window_size must be >= 1");
  return std::pow(p_pair, window_size);
}

// Parameter groups for the two calibrated speed regimes.
inline FilterParams preset_fast_robot() {
  FilterParams p;
  p.window_size = 5;
  p.p_pair = 0.96;
  p.p_common = 0.8;
  p.histogram.columns = 30;
  return p;
}

inline FilterParams preset_slow_robot() {
  FilterParams p;
  p.window_size = 9;
  p.p_pair = 0.99;
  p.p_common = 0.9;
  p.histogram.columns = 15;
  return p;
}

// Bounded FIFO of the k most recent scans' histograms.
class ScanWindow {
public:
  struct Entry {
    Histogram histogram;
    std::uint64_t scan_id = 0;
  };

  explicit ScanWindow(std::size_t capacity) : capacity_(capacity) {}

  void push(Histogram histogram, std::uint64_t scan_id) {
    if (entries_.size() == capacity_) entries_.pop_front();
    entries_.push_back(Entry{std::move(histogram), scan_id});
  }

  bool full() const { return entries_.size() == capacity_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

private:
  std::size_t capacity_;
  std::deque<Entry> entries_;
};

// The per-stream decision pipeline: histogram, corridor veto, window
// warmup, per-pair Pearson floor, product floor, drop. Stateful and
// single-stream; distinct instances are independent.
//
// Fail-open contract: every scan yields exactly one decision, and any scan
// whose statistics cannot be computed is kept. The original scan payload is
// never modified; forwarding on KEEP is the caller's job.
class ScanFilter {
public:
  explicit ScanFilter(const FilterParams& params,
                      const CorridorConfig& corridor = CorridorConfig{})
      : params_(params),
        corridor_config_(corridor),
        window_(static_cast<std::size_t>(params.window_size)) {
    if (params.window_size < 1 || params.window_size > 30)
      throw Error(Errc::BAD_PARAMS, "window_size must be in [1, 30]");
    if (params.p_pair <= 0.0 || params.p_pair > 1.0)
      throw Error(Errc::BAD_PARAMS, "p_pair must be in (0, 1]");
    if (params.p_common <= 0.0 || params.p_common > 1.0)
      throw Error(Errc::BAD_PARAMS, "p_common must be in (0, 1]");
    if (params.p_common > params.p_pair)
      throw Error(Errc::BAD_PARAMS,
                  "p_common must not exceed p_pair (a product of values <= "
                  "p_pair cannot be required to exceed it)");
    if (params.corridor_threshold <= 0.0 || params.corridor_threshold > 1.0)
      throw Error(Errc::BAD_PARAMS, "corridor_threshold must be in (0, 1]");
    if (params.histogram.columns < 2)
      throw Error(Errc::BAD_PARAMS, "histogram columns must be >= 2");
    // The filter-level threshold governs the veto; keep one source of truth.
    corridor_config_.score_threshold = params.corridor_threshold;
    detector_.emplace(corridor_config_);
  }

  const FilterParams& params() const { return params_; }
  const ScanWindow& window() const { return window_; }
  std::uint64_t scans_seen() const { return next_scan_id_; }

  FilterDecision process(const LaserScan& scan) {
    const std::uint64_t scan_id = next_scan_id_++;
    FilterDecision decision;

    Histogram histogram;
    try {
      histogram = build_histogram(scan, params_.histogram);
    } catch (const Error&) {
      // No histogram, nothing to window; forward the scan.
      decision.verdict = Verdict::KEEP;
      decision.reason = DecisionReason::DEGENERATE_HISTOGRAM;
      return decision;
    }

    if (params_.corridor_enabled) {
      try {
        const CorridorReport report = detector_->score(scan);
        decision.corridor_score = report.score;
        if (report.is_corridor) {
          decision.verdict = Verdict::KEEP;
          decision.reason = DecisionReason::CORRIDOR;
          push(std::move(histogram), scan_id, decision.verdict);
          return decision;
        }
      } catch (const Error&) {
        decision.verdict = Verdict::KEEP;
        decision.reason = DecisionReason::DEGENERATE_HISTOGRAM;
        push(std::move(histogram), scan_id, decision.verdict);
        return decision;
      }
    }

    if (!window_.full()) {
      decision.verdict = Verdict::KEEP;
      decision.reason = DecisionReason::WINDOW_WARMUP;
      push(std::move(histogram), scan_id, decision.verdict);
      return decision;
    }

    bool degenerate = false;
    double min_pair = std::numeric_limits<double>::infinity();
    double product = 1.0;
    decision.pair_correlations.reserve(window_.size());
    for (const ScanWindow::Entry& entry : window_) {
      const std::optional<double> p =
          pearson(histogram.values, entry.histogram.values);
      if (!p) {
        degenerate = true;
        decision.pair_correlations.push_back(
            std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      decision.pair_correlations.push_back(*p);
      min_pair = std::min(min_pair, *p);
      product *= *p;
    }

    if (degenerate) {
      decision.verdict = Verdict::KEEP;
      decision.reason = DecisionReason::DEGENERATE_HISTOGRAM;
    } else {
      decision.common_correlation = product;
      if (min_pair < params_.p_pair) {
        decision.verdict = Verdict::KEEP;
        decision.reason = DecisionReason::LOW_PAIR_CORRELATION;
      } else if (product < params_.p_common) {
        decision.verdict = Verdict::KEEP;
        decision.reason = DecisionReason::LOW_COMMON_CORRELATION;
      } else {
        decision.verdict = Verdict::DROP;
        decision.reason = DecisionReason::REDUNDANT;
      }
    }

    push(std::move(histogram), scan_id, decision.verdict);
    return decision;
  }

private:
  void push(Histogram histogram, std::uint64_t scan_id, Verdict verdict) {
    if (params_.window_policy == WindowPolicy::KEPT_ONLY &&
        verdict != Verdict::KEEP)
      return;
    window_.push(std::move(histogram), scan_id);
  }

  FilterParams params_;
  CorridorConfig corridor_config_;
  std::optional<CorridorDetector> detector_;
  ScanWindow window_;
  std::uint64_t next_scan_id_ = 0;
};

}  // namespace scanfilter

#endif  // SCANFILTER_FILTER_HPP
