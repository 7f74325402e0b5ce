// Command line front end: replay filtering, parameter derivation, synthetic
// scene generation and benchmarking over the scan-log format.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scanfilter/scanfilter.hpp"

namespace {

using namespace scanfilter;

struct FilterFlags {
  std::string preset;
  int window_size = -1;
  double p_pair = -1.0;
  double p_common = -1.0;
  int columns = -1;
  std::string mode;
  double corridor_threshold = -1.0;
  bool no_corridor = false;
  double corridor_delta = -1.0;
  int corridor_min_pairs = -1;
  std::string window_policy;
};

void add_filter_flags(CLI::App* cmd, FilterFlags& flags) {
  cmd->add_option("--preset", flags.preset,
                  "Parameter group: fast-robot (k=5, p_pair=0.96, p_common=0.8, "
                  "30 columns) or slow-robot (k=9, p_pair=0.99, p_common=0.9, "
                  "15 columns)")
      ->check(CLI::IsMember({"fast-robot", "slow-robot"}));
  cmd->add_option("--window-size", flags.window_size, "Window size k, 1..30");
  cmd->add_option("--p-pair", flags.p_pair, "Per-pair correlation floor, (0,1]");
  cmd->add_option("--p-common", flags.p_common,
                  "Floor for the product of pair correlations, (0,1]");
  cmd->add_option("--columns", flags.columns, "Histogram columns, >= 2");
  cmd->add_option("--mode", flags.mode, "Histogram mode")
      ->check(CLI::IsMember({"angle-avg", "angle-disp", "range-count", "range-avg"}));
  cmd->add_option("--corridor-threshold", flags.corridor_threshold,
                  "Corridor veto threshold on |score|, (0,1]");
  cmd->add_flag("--no-corridor-detector", flags.no_corridor,
                "Disable the corridor veto");
  cmd->add_option("--corridor-delta", flags.corridor_delta,
                  "Sensor range error bound delta, meters");
  cmd->add_option("--corridor-min-pairs", flags.corridor_min_pairs,
                  "Minimum compared pairs for a corridor score");
  cmd->add_option("--window-policy", flags.window_policy,
                  "Which scans enter the window")
      ->check(CLI::IsMember({"all", "kept"}));
}

HistogramMode parse_mode(const std::string& name) {
  if (name == "range-count") return HistogramMode::RANGE_COUNT;
  if (name == "range-avg") return HistogramMode::RANGE_AVG;
  if (name == "angle-disp") return HistogramMode::ANGLE_DISP;
  return HistogramMode::ANGLE_AVG;
}

std::pair<FilterParams, CorridorConfig> resolve_params(const FilterFlags& f) {
  FilterParams params =
      f.preset == "slow-robot" ? preset_slow_robot() : preset_fast_robot();
  CorridorConfig corridor;

  if (f.window_size > 0) params.window_size = f.window_size;
  if (f.p_pair > 0.0) params.p_pair = f.p_pair;
  if (f.p_common > 0.0) params.p_common = f.p_common;
  if (f.columns > 0) params.histogram.columns = f.columns;
  if (!f.mode.empty()) params.histogram.mode = parse_mode(f.mode);
  if (f.corridor_threshold > 0.0) {
    params.corridor_threshold = f.corridor_threshold;
    corridor.score_threshold = f.corridor_threshold;
  }
  if (f.no_corridor) params.corridor_enabled = false;
  if (f.corridor_delta > 0.0) corridor.range_error_delta = f.corridor_delta;
  if (f.corridor_min_pairs > 0) corridor.min_pairs = f.corridor_min_pairs;
  if (f.window_policy == "kept") params.window_policy = WindowPolicy::KEPT_ONLY;
  return {params, corridor};
}

int cmd_filter(const std::string& in_path, const std::string& out_path,
               const std::string& decisions_path, const std::string& stats_path,
               const FilterFlags& flags) {
  const auto [params, corridor] = resolve_params(flags);
  const std::vector<LaserScan> scans = read_scan_log(in_path);

  std::vector<LaserScan> kept;
  const std::vector<DecisionRecord> records =
      replay_filter(scans, params, corridor, &kept);
  const RunStats stats = compute_stats(records);

  write_scan_log(out_path, kept);
  if (!decisions_path.empty()) write_decisions(decisions_path, records);
  if (!stats_path.empty()) write_stats(stats_path, stats);

  std::printf("total=%llu kept=%llu dropped=%llu drop_pct=%.2f corridor_keeps=%llu\n",
              static_cast<unsigned long long>(stats.total),
              static_cast<unsigned long long>(stats.kept),
              static_cast<unsigned long long>(stats.dropped), stats.drop_pct,
              static_cast<unsigned long long>(stats.corridor_keeps));
  return 0;
}

int cmd_params(double avg_speed_cm, double p_pair) {
  const int window = derive_window_size(avg_speed_cm);
  const double p_common = derive_common_threshold(p_pair, window);
  std::printf("window_size=%d\np_common=%.6f\n", window, p_common);
  return 0;
}

int cmd_gen(const std::string& scene_name, const std::string& out_path,
            SceneParams scene_params, SensorModel sensor) {
  if (const char* env_seed = std::getenv("SCANFILTER_SEED")) {
    const std::uint64_t seed = std::strtoull(env_seed, nullptr, 10);
    scene_params.seed = seed;
    sensor.seed = seed;
  } else {
    sensor.seed = scene_params.seed;
  }

  SceneKind kind = SceneKind::STATIONARY;
  if (scene_name == "corridor") kind = SceneKind::CORRIDOR;
  else if (scene_name == "room") kind = SceneKind::ROOM;
  else if (scene_name == "office-loop") kind = SceneKind::OFFICE_LOOP;

  const Scene scene = make_scene(kind, scene_params);
  const std::vector<LaserScan> scans = render_scene(scene, sensor);
  write_scan_log(out_path, scans);
  std::printf("scene=%s scans=%zu beams=%d seed=%llu\n", scene.world.name.c_str(),
              scans.size(), sensor.beams,
              static_cast<unsigned long long>(sensor.seed));
  return 0;
}

int cmd_bench(const std::string& in_path, const FilterFlags& flags) {
  const auto [params, corridor] = resolve_params(flags);
  const std::vector<LaserScan> scans = read_scan_log(in_path);
  if (scans.size() < 100)
    throw Error(Errc::BAD_PARAMS, "bench needs at least 100 scans, got " +
                                      std::to_string(scans.size()));

  const std::vector<DecisionRecord> records =
      replay_filter(scans, params, corridor);
  const RunStats stats = compute_stats(records);

  const std::uint64_t matcher_p50 =
      percentile_ns(matcher_reference_times(scans), 0.50);
  const double ratio =
      stats.p50_filter_time_ns > 0
          ? static_cast<double>(matcher_p50) /
                static_cast<double>(stats.p50_filter_time_ns)
          : 0.0;

  std::printf("scans=%zu window=%d columns=%d\n", scans.size(),
              params.window_size, params.histogram.columns);
  std::printf("filter_p50_ns=%llu filter_p95_ns=%llu\n",
              static_cast<unsigned long long>(stats.p50_filter_time_ns),
              static_cast<unsigned long long>(stats.p95_filter_time_ns));
  std::printf("matcher_p50_ns=%llu ratio=%.1f\n",
              static_cast<unsigned long long>(matcher_p50), ratio);
  std::printf("drop_pct=%.2f\n", stats.drop_pct);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation filter for 2D laser scan streams"};
  app.require_subcommand(1);

  // filter
  auto* filter_cmd =
      app.add_subcommand("filter", "Replay a scan log through the filter");
  std::string in_path, out_path, decisions_path, stats_path;
  FilterFlags filter_flags;
  filter_cmd->add_option("--in", in_path, "Input scan log")->required();
  filter_cmd->add_option("--out", out_path, "Output log of kept scans")->required();
  filter_cmd->add_option("--decisions", decisions_path, "Decision table (CSV)");
  filter_cmd->add_option("--stats", stats_path, "Run statistics (JSON)");
  add_filter_flags(filter_cmd, filter_flags);

  // params
  auto* params_cmd = app.add_subcommand(
      "params", "Derive window size and common threshold from robot speed");
  double avg_speed_cm = 0.0;
  double p_pair_for_derive = 0.98;
  params_cmd->add_option("--avg-speed-cm", avg_speed_cm,
                         "Average speed, centimeters per quantum")
      ->required();
  params_cmd->add_option("--p-pair", p_pair_for_derive,
                         "Per-pair correlation floor");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic scan log");
  std::string scene_name, gen_out;
  SceneParams scene_params;
  SensorModel sensor;
  gen_cmd->add_option("--scene", scene_name, "Scene kind")
      ->check(CLI::IsMember({"corridor", "room", "office-loop", "stationary"}))
      ->required();
  gen_cmd->add_option("--out", gen_out, "Output scan log")->required();
  gen_cmd->add_option("--scans", scene_params.stationary_scans,
                      "Scan count for stationary scenes");
  gen_cmd->add_option("--speed-cm", scene_params.speed_cm_per_quantum,
                      "Speed, centimeters per quantum");
  gen_cmd->add_option("--quantum", scene_params.quantum_s, "Seconds per scan");
  gen_cmd->add_option("--length", scene_params.corridor_length_m,
                      "Corridor length, meters");
  gen_cmd->add_option("--half-width", scene_params.corridor_half_width_m,
                      "Corridor half width, meters");
  gen_cmd->add_option("--room-width", scene_params.room_width_m,
                      "Room width, meters");
  gen_cmd->add_option("--room-height", scene_params.room_height_m,
                      "Room height, meters");
  gen_cmd->add_option("--pillars", scene_params.room_pillars,
                      "Square pillars inside the room");
  gen_cmd->add_option("--beams", sensor.beams, "Beams per scan");
  gen_cmd->add_option("--fov", sensor.fov, "Field of view, radians");
  gen_cmd->add_option("--range-max", sensor.range_max, "Sensor range, meters");
  gen_cmd->add_option("--noise-sigma", sensor.noise_sigma,
                      "Gaussian range noise sigma, meters");
  gen_cmd->add_option("--seed", scene_params.seed,
                      "Generation seed (SCANFILTER_SEED overrides)");

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time the filter against a simulated scan matcher");
  std::string bench_in;
  FilterFlags bench_flags;
  bench_cmd->add_option("--in", bench_in, "Input scan log (>= 100 scans)")
      ->required();
  add_filter_flags(bench_cmd, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(filter_cmd))
      return cmd_filter(in_path, out_path, decisions_path, stats_path,
                        filter_flags);
    if (app.got_subcommand(params_cmd))
      return cmd_params(avg_speed_cm, p_pair_for_derive);
    if (app.got_subcommand(gen_cmd))
      return cmd_gen(scene_name, gen_out, scene_params, sensor);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(bench_in, bench_flags);
  } catch (const scanfilter::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return (e.code() == Errc::IO_ERROR || e.code() == Errc::PARSE_ERROR) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
