#ifndef SCANFILTER_IO_LOG_HPP
#define SCANFILTER_IO_LOG_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "scanfilter/error.hpp"
#include "scanfilter/replay.hpp"
#include "scanfilter/scan.hpp"

namespace scanfilter {

// Scan log: one JSON object per line with fields t, angle_min,
// angle_increment, range_min, range_max, ranges. Non-finite ranges are
// serialized as null and read back as NaN (still flagged invalid), so
// write-then-read is the identity on the scan model.

inline nlohmann::json scan_to_json(const LaserScan& scan) {
  nlohmann::json ranges = nlohmann::json::array();
  for (const double r : scan.ranges) {
    if (std::isfinite(r))
      ranges.push_back(r);
    else
      ranges.push_back(nullptr);
  }
  return nlohmann::json{{"t", scan.timestamp},
                        {"angle_min", scan.angle_min},
                        {"angle_increment", scan.angle_increment},
                        {"range_min", scan.range_min},
                        {"range_max", scan.range_max},
                        {"ranges", std::move(ranges)}};
}

inline LaserScan scan_from_json(const nlohmann::json& j, long line) {
  if (!j.is_object()) throw Error(Errc::PARSE_ERROR, line, "record is not an object");
  LaserScan scan;
  try {
    scan.timestamp = j.at("t").get<double>();
    scan.angle_min = j.at("angle_min").get<double>();
    scan.angle_increment = j.at("angle_increment").get<double>();
    scan.range_min = j.at("range_min").get<double>();
    scan.range_max = j.at("range_max").get<double>();
    const nlohmann::json& ranges = j.at("ranges");
    if (!ranges.is_array())
      throw Error(Errc::PARSE_ERROR, line, "ranges is not an array");
    scan.ranges.reserve(ranges.size());
    for (const nlohmann::json& r : ranges) {
      if (r.is_null())
        scan.ranges.push_back(std::numeric_limits<double>::quiet_NaN());
      else if (r.is_number())
        scan.ranges.push_back(r.get<double>());
      else
        throw Error(Errc::PARSE_ERROR, line, "range entry is neither number nor null");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::PARSE_ERROR, line, e.what());
  }
  return scan;
}

inline std::vector<LaserScan> read_scan_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IO_ERROR, "cannot open " + path);

  std::vector<LaserScan> scans;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw Error(Errc::PARSE_ERROR, line_number, "malformed record");
    scans.push_back(scan_from_json(j, line_number));
  }
  if (in.bad()) throw Error(Errc::IO_ERROR, "read failure on " + path);
  return scans;
}

inline void write_scan_log(const std::string& path,
                           std::span<const LaserScan> scans) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IO_ERROR, "cannot open " + path + " for writing");
  for (const LaserScan& scan : scans) out << scan_to_json(scan).dump() << '\n';
  out.flush();
  if (!out) throw Error(Errc::IO_ERROR, "write failure on " + path);
}

namespace detail {

// Fixed %.9g formatting keeps decision files byte-stable across runs;
// unavailable values (NaN) serialize as empty fields.
inline std::string csv_real(double value) {
  if (std::isnan(value)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

}  // namespace detail

// Decision table: one row per scan, comma separated, with header
// scan_id,verdict,reason,common_correlation,min_pair_correlation,
// corridor_score,filter_time_ns.
inline void write_decisions(const std::string& path,
                            std::span<const DecisionRecord> records) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IO_ERROR, "cannot open " + path + " for writing");
  out << "scan_id,verdict,reason,common_correlation,min_pair_correlation,"
         "corridor_score,filter_time_ns\n";
  for (const DecisionRecord& record : records) {
    double min_pair = std::numeric_limits<double>::quiet_NaN();
    for (const double p : record.decision.pair_correlations) {
      if (std::isnan(p)) continue;
      if (std::isnan(min_pair) || p < min_pair) min_pair = p;
    }
    out << record.scan_id << ',' << to_string(record.decision.verdict) << ','
        << to_string(record.decision.reason) << ','
        << detail::csv_real(record.decision.common_correlation) << ','
        << detail::csv_real(min_pair) << ','
        << detail::csv_real(record.decision.corridor_score) << ','
        << record.filter_time_ns << '\n';
  }
  out.flush();
  if (!out) throw Error(Errc::IO_ERROR, "write failure on " + path);
}

inline void write_stats(const std::string& path, const RunStats& stats) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IO_ERROR, "cannot open " + path + " for writing");
  const nlohmann::json j{{"total", stats.total},
                         {"kept", stats.kept},
                         {"dropped", stats.dropped},
                         {"drop_pct", stats.drop_pct},
                         {"p50_filter_time_ns", stats.p50_filter_time_ns},
                         {"p95_filter_time_ns", stats.p95_filter_time_ns},
                         {"corridor_keeps", stats.corridor_keeps}};
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw Error(Errc::IO_ERROR, "write failure on " + path);
}

}  // namespace scanfilter

#endif  // SCANFILTER_IO_LOG_HPP
