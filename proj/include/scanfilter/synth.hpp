#ifndef SCANFILTER_SYNTH_HPP
#define SCANFILTER_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "scanfilter/error.hpp"
#include "scanfilter/scan.hpp"

namespace scanfilter {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Segment {
  Vec2 a;
  Vec2 b;
};

struct World {
  std::vector<Segment> segments;
  std::string name;
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians
};

// Poses sampled once per quantum.
struct Trajectory {
  std::vector<Pose> poses;
  double quantum_s = 0.025;
};

struct SensorModel {
  double fov = 2.356194490192345;  // 3*pi/4, matching the reference lidar
  int beams = 1000;
  double range_min = 0.1;   // meters
  double range_max = 30.0;  // meters
  double noise_sigma = 0.0; // meters; 0 disables noise
  std::uint64_t seed = 1;
};

namespace detail {

// Deterministic noise, independent of the standard library's distribution
// implementations so identical seeds give bit-identical logs everywhere.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

// Box-Muller, truncated to +-4 sigma (keeps the delta-based stride
// reasoning valid for test scenes).
inline double gaussian(std::uint64_t& state) {
  double u1 = uniform01(state);
  const double u2 = uniform01(state);
  if (u1 < 1e-300) u1 = 1e-300;
  constexpr double two_pi = 6.283185307179586476925286766559;
  const double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  return std::clamp(g, -4.0, 4.0);
}

inline double cross(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

}  // namespace detail

// Distance along the ray from `origin` in direction `theta` to the nearest
// segment, or +inf when nothing is hit.
inline double ray_distance(const World& world, double ox, double oy,
                           double theta) {
  const double dx = std::cos(theta);
  const double dy = std::sin(theta);
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& seg : world.segments) {
    const double ex = seg.b.x - seg.a.x;
    const double ey = seg.b.y - seg.a.y;
    const double denom = detail::cross(dx, dy, ex, ey);
    if (std::abs(denom) < 1e-15) continue;  // parallel
    const double rx = seg.a.x - ox;
    const double ry = seg.a.y - oy;
    const double t = detail::cross(rx, ry, ex, ey) / denom;
    const double u = detail::cross(rx, ry, dx, dy) / denom;
    if (t >= 0.0 && u >= 0.0 && u <= 1.0) best = std::min(best, t);
  }
  return best;
}

// Casts one scan from `pose`. Beams sweep the field of view symmetrically
// around the heading. Misses are recorded as range_max + 1, which the scan
// model flags invalid. Noise draws are sequential per beam, so the result
// is a pure function of (world, pose, sensor, noise_stream): rendering a
// trajectory passes the pose index as the stream id to decorrelate noise
// across scans.
inline LaserScan raycast(const World& world, const Pose& pose,
                         const SensorModel& sensor,
                         std::uint64_t noise_stream = 0) {
  if (sensor.beams < 2) throw Error(Errc::BAD_PARAMS, "sensor needs >= 2 beams");
  if (sensor.fov <= 0.0 || sensor.range_max <= sensor.range_min)
    throw Error(Errc::BAD_PARAMS, "bad sensor geometry");

  LaserScan scan;
  scan.angle_min = -sensor.fov / 2.0;
  scan.angle_increment =
      sensor.fov / static_cast<double>(sensor.beams - 1);
  scan.range_min = sensor.range_min;
  scan.range_max = sensor.range_max;
  scan.ranges.reserve(static_cast<std::size_t>(sensor.beams));

  std::uint64_t rng =
      sensor.seed ^ (0x9E3779B97F4A7C15ull * (noise_stream + 1));

  const double miss = sensor.range_max + 1.0;
  for (int b = 0; b < sensor.beams; ++b) {
    const double theta =
        pose.heading + scan.angle_min +
        static_cast<double>(b) * scan.angle_increment;
    const double hit = ray_distance(world, pose.x, pose.y, theta);
    // One noise draw per beam regardless of hit, so beam b's noise depends
    // only on (seed, stream, b).
    const double noise = sensor.noise_sigma > 0.0
                             ? detail::gaussian(rng) * sensor.noise_sigma
                             : 0.0;
    if (std::isfinite(hit)) {
      scan.ranges.push_back(std::max(0.0, hit + noise));
    } else {
      scan.ranges.push_back(miss);
    }
  }
  return scan;
}

enum class SceneKind { CORRIDOR, ROOM, OFFICE_LOOP, STATIONARY };

struct SceneParams {
  double speed_cm_per_quantum = 2.2;
  double quantum_s = 0.025;
  int stationary_scans = 100;       // STATIONARY
  double corridor_length_m = 10.0;  // CORRIDOR
  double corridor_half_width_m = 1.5;
  double room_width_m = 6.0;        // ROOM / STATIONARY, x span
  double room_height_m = 4.0;       // y span
  int room_pillars = 0;             // optional square clutter inside ROOM
  std::uint64_t seed = 1;
};

struct Scene {
  World world;
  Trajectory trajectory;
};

namespace detail {

inline void add_segment(World& world, double x1, double y1, double x2,
                        double y2) {
  world.segments.push_back(Segment{{x1, y1}, {x2, y2}});
}

inline void add_rect(World& world, double xmin, double ymin, double xmax,
                     double ymax) {
  add_segment(world, xmin, ymin, xmax, ymin);
  add_segment(world, xmax, ymin, xmax, ymax);
  add_segment(world, xmax, ymax, xmin, ymax);
  add_segment(world, xmin, ymax, xmin, ymin);
}

// Straight-line poses from (x0,y0) to (x1,y1) at `step` meters per pose,
// heading along the motion. Includes the start, excludes the end point
// unless it falls on a step.
inline void add_leg(std::vector<Pose>& poses, double x0, double y0, double x1,
                    double y1, double step) {
  const double len = std::hypot(x1 - x0, y1 - y0);
  const double heading = std::atan2(y1 - y0, x1 - x0);
  const int count = static_cast<int>(std::floor(len / step));
  for (int i = 0; i <= count; ++i) {
    const double s = static_cast<double>(i) * step;
    poses.push_back(Pose{x0 + std::cos(heading) * s,
                         y0 + std::sin(heading) * s, heading});
  }
}

// In-place rotation from `from` to `to` heading in ~4.5 degree steps.
inline void add_turn(std::vector<Pose>& poses, double x, double y, double from,
                     double to) {
  const double step = 0.0785398163397448;  // pi/40
  const double span = to - from;
  const int count = std::max(1, static_cast<int>(std::ceil(std::abs(span) / step)));
  for (int i = 1; i <= count; ++i) {
    poses.push_back(
        Pose{x, y, from + span * static_cast<double>(i) / count});
  }
}

}  // namespace detail

// Deterministic worlds with known structure. CORRIDOR is a pair of long
// parallel walls with the trajectory on the centerline; ROOM is a plain
// rectangle (optionally with square pillars clear of the path) crossed along
// its long axis; OFFICE_LOOP is two rooms joined by a corridor, traversed
// out and back; STATIONARY repeats one pose at the center of a room.
inline Scene make_scene(SceneKind kind, const SceneParams& params) {
  if (params.quantum_s <= 0.0)
    throw Error(Errc::BAD_PARAMS, "quantum must be > 0");
  const double step_m = params.speed_cm_per_quantum / 100.0;

  Scene scene;
  scene.trajectory.quantum_s = params.quantum_s;

  switch (kind) {
    case SceneKind::CORRIDOR: {
      if (params.corridor_length_m <= 0.0 || params.corridor_half_width_m <= 0.0)
        throw Error(Errc::BAD_PARAMS, "corridor dimensions must be positive");
      if (step_m <= 0.0)
        throw Error(Errc::BAD_PARAMS, "speed must be > 0");
      const double w = params.corridor_half_width_m;
      const double len = params.corridor_length_m;
      // Walls extend far past both ends so the corridor reads as infinite.
      detail::add_segment(scene.world, -35.0, w, len + 35.0, w);
      detail::add_segment(scene.world, -35.0, -w, len + 35.0, -w);
      scene.world.name = "corridor";
      detail::add_leg(scene.trajectory.poses, 0.0, 0.0, len, 0.0, step_m);
      break;
    }
    case SceneKind::ROOM: {
      if (params.room_width_m <= 0.0 || params.room_height_m <= 0.0)
        throw Error(Errc::BAD_PARAMS, "room dimensions must be positive");
      if (step_m <= 0.0)
        throw Error(Errc::BAD_PARAMS, "speed must be > 0");
      const double hw = params.room_width_m / 2.0;
      const double hh = params.room_height_m / 2.0;
      detail::add_rect(scene.world, -hw, -hh, hw, hh);
      scene.world.name = "room";
      std::uint64_t rng = params.seed;
      for (int p = 0; p < params.room_pillars; ++p) {
        // Square pillars placed off the y=0 path band.
        const double px =
            -hw + 1.0 + detail::uniform01(rng) * (params.room_width_m - 2.0);
        const double side = detail::uniform01(rng) < 0.5 ? -1.0 : 1.0;
        const double py = side * (0.8 + detail::uniform01(rng) *
                                            std::max(0.1, hh - 1.3));
        detail::add_rect(scene.world, px - 0.2, py - 0.2, px + 0.2, py + 0.2);
      }
      const double margin = std::min(1.0, hw / 2.0);
      detail::add_leg(scene.trajectory.poses, -hw + margin, 0.0, hw - margin,
                      0.0, step_m);
      break;
    }
    case SceneKind::OFFICE_LOOP: {
      if (step_m <= 0.0)
        throw Error(Errc::BAD_PARAMS, "speed must be > 0");
      // Room A [-6,0]x[-3,3] and room B [10,16]x[-3,3] joined by a corridor
      // of half-width 1 over x in [0,10], with door gaps where they meet.
      World& w = scene.world;
      w.name = "office_loop";
      detail::add_segment(w, -6.0, -3.0, -6.0, 3.0);   // A left
      detail::add_segment(w, -6.0, 3.0, 0.0, 3.0);     // A top
      detail::add_segment(w, -6.0, -3.0, 0.0, -3.0);   // A bottom
      detail::add_segment(w, 0.0, 1.0, 0.0, 3.0);      // A right, above door
      detail::add_segment(w, 0.0, -3.0, 0.0, -1.0);    // A right, below door
      detail::add_segment(w, 0.0, 1.0, 10.0, 1.0);     // corridor top
      detail::add_segment(w, 0.0, -1.0, 10.0, -1.0);   // corridor bottom
      detail::add_segment(w, 10.0, 1.0, 10.0, 3.0);    // B left, above door
      detail::add_segment(w, 10.0, -3.0, 10.0, -1.0);  // B left, below door
      detail::add_segment(w, 10.0, 3.0, 16.0, 3.0);    // B top
      detail::add_segment(w, 10.0, -3.0, 16.0, -3.0);  // B bottom
      detail::add_segment(w, 16.0, -3.0, 16.0, 3.0);   // B right
      // Furniture-sized clutter so room scans decorrelate under motion.
      detail::add_rect(w, -4.6, 1.6, -4.0, 2.2);
      detail::add_rect(w, -2.4, -2.4, -1.8, -1.8);
      detail::add_rect(w, 11.6, 1.7, 12.2, 2.3);
      detail::add_rect(w, 13.8, -2.3, 14.4, -1.7);

      auto& poses = scene.trajectory.poses;
      detail::add_leg(poses, -3.0, 0.0, 13.0, 0.0, step_m);
      detail::add_turn(poses, 13.0, 0.0, 0.0, 3.141592653589793);
      detail::add_leg(poses, 13.0, 0.0, -3.0, 0.0, step_m);
      detail::add_turn(poses, -3.0, 0.0, 3.141592653589793, 0.0);
      break;
    }
    case SceneKind::STATIONARY: {
      if (params.stationary_scans < 1)
        throw Error(Errc::BAD_PARAMS, "stationary_scans must be >= 1");
      if (params.room_width_m <= 0.0 || params.room_height_m <= 0.0)
        throw Error(Errc::BAD_PARAMS, "room dimensions must be positive");
      const double hw = params.room_width_m / 2.0;
      const double hh = params.room_height_m / 2.0;
      detail::add_rect(scene.world, -hw, -hh, hw, hh);
      scene.world.name = "stationary";
      scene.trajectory.poses.assign(
          static_cast<std::size_t>(params.stationary_scans), Pose{});
      break;
    }
  }
  return scene;
}

// Renders every pose of the scene: timestamps advance by one quantum per
// scan and the pose index seeds the per-scan noise stream.
inline std::vector<LaserScan> render_scene(const Scene& scene,
                                           const SensorModel& sensor) {
  std::vector<LaserScan> scans;
  scans.reserve(scene.trajectory.poses.size());
  for (std::size_t i = 0; i < scene.trajectory.poses.size(); ++i) {
    LaserScan scan = raycast(scene.world, scene.trajectory.poses[i], sensor, i);
    scan.timestamp = static_cast<double>(i) * scene.trajectory.quantum_s;
    scans.push_back(std::move(scan));
  }
  return scans;
}

}  // namespace scanfilter

#endif  // SCANFILTER_SYNTH_HPP
