#include <doctest.h>

#include <cmath>
#include <vector>

#include "scanfilter/corridor.hpp"
#include "scanfilter/synth.hpp"

#include "oracles.hpp"

using namespace scanfilter;

namespace {

World circle_world(double radius, int facets) {
  World world;
  world.name = "circle";
  for (int i = 0; i < facets; ++i) {
    const double a0 = 2.0 * 3.141592653589793 * i / facets;
    const double a1 = 2.0 * 3.141592653589793 * (i + 1) / facets;
    world.segments.push_back(Segment{{radius * std::cos(a0), radius * std::sin(a0)},
                                     {radius * std::cos(a1), radius * std::sin(a1)}});
  }
  return world;
}

}  // namespace

TEST_CASE("raycast at the center of a 360-gon") {
  const World circle = circle_world(3.0, 360);
  SensorModel sensor;
  const LaserScan scan = raycast(circle, Pose{}, sensor);
  REQUIRE(scan.ranges.size() == 1000);
  for (const double r : scan.ranges) {
    CHECK(r >= 3.0 - 1e-3);
    CHECK(r <= 3.0 + 1e-9);
  }
}

TEST_CASE("corridor ranges match the closed form") {
  SceneParams params;
  const Scene scene = make_scene(SceneKind::CORRIDOR, params);
  SensorModel sensor;
  const Pose pose{5.0, 0.2, 0.0};
  const LaserScan scan = raycast(scene.world, pose, sensor);

  for (std::size_t i = 0; i < scan.ranges.size(); i += 13) {
    const double theta = pose.heading + scan.beam_angle(i);
    const double expected =
        oracles::corridor_range(pose.y, theta, params.corridor_half_width_m);
    if (!std::isfinite(expected) || expected > 40.0) continue;  // long shots may
                                                                // leave the walls
    CHECK(scan.ranges[i] == doctest::Approx(expected).epsilon(1e-9));
  }

  // The perpendicular beam sees exactly the half width.
  const Pose centered{5.0, 0.0, 1.5707963267948966};  // heading at the wall
  const LaserScan head_on = raycast(scene.world, centered, sensor);
  const std::size_t mid = head_on.ranges.size() / 2;
  const double mid_angle = centered.heading + head_on.beam_angle(mid);
  const double expected =
      oracles::corridor_range(0.0, mid_angle, params.corridor_half_width_m);
  CHECK(head_on.ranges[mid] == doctest::Approx(expected).epsilon(1e-9));
  CHECK(head_on.ranges[mid] ==
        doctest::Approx(params.corridor_half_width_m).epsilon(1e-6));
}

TEST_CASE("room ranges match the rectangle oracle") {
  SceneParams params;  // 6 x 4 room
  const Scene scene = make_scene(SceneKind::ROOM, params);
  SensorModel sensor;
  const Pose pose{0.0, 0.0, 0.3};
  const LaserScan scan = raycast(scene.world, pose, sensor);
  for (std::size_t i = 0; i < scan.ranges.size(); i += 7) {
    const double theta = pose.heading + scan.beam_angle(i);
    const double expected =
        oracles::rectangle_range(pose.x, pose.y, theta, -3.0, -2.0, 3.0, 2.0);
    CHECK(scan.ranges[i] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("identical seeds give bit-identical noisy scans") {
  SceneParams params;
  const Scene scene = make_scene(SceneKind::CORRIDOR, params);
  SensorModel sensor;
  sensor.noise_sigma = 0.01;
  sensor.seed = 99;
  const LaserScan a = raycast(scene.world, Pose{5.0, 0.0, 0.0}, sensor, 3);
  const LaserScan b = raycast(scene.world, Pose{5.0, 0.0, 0.0}, sensor, 3);
  CHECK(a.ranges == b.ranges);

  const LaserScan c = raycast(scene.world, Pose{5.0, 0.0, 0.0}, sensor, 4);
  CHECK(a.ranges != c.ranges);  // a different stream draws different noise
}

TEST_CASE("noise is bounded and never negative") {
  SceneParams params;
  const Scene scene = make_scene(SceneKind::CORRIDOR, params);
  SensorModel clean_sensor;
  SensorModel noisy_sensor;
  noisy_sensor.noise_sigma = 0.5;
  const LaserScan clean = raycast(scene.world, Pose{5.0, 0.0, 0.0}, clean_sensor);
  const LaserScan noisy = raycast(scene.world, Pose{5.0, 0.0, 0.0}, noisy_sensor);
  for (std::size_t i = 0; i < clean.ranges.size(); ++i) {
    CHECK(noisy.ranges[i] >= 0.0);
    if (clean.ranges[i] <= clean.range_max)
      CHECK(std::abs(noisy.ranges[i] - clean.ranges[i]) <=
            4.0 * noisy_sensor.noise_sigma + 1e-12);
  }
}

TEST_CASE("misses are flagged invalid as range_max + 1") {
  SceneParams params;
  const Scene scene = make_scene(SceneKind::CORRIDOR, params);
  SensorModel sensor;
  const LaserScan scan = raycast(scene.world, Pose{5.0, 0.0, 0.0}, sensor);
  bool found_miss = false;
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    if (scan.ranges[i] == scan.range_max + 1.0) {
      found_miss = true;
      CHECK_FALSE(scan.range_valid(i));
    }
  }
  CHECK(found_miss);  // near-axis beams run past the wall ends
}

TEST_CASE("scene trajectories have the specified shape") {
  SceneParams params;
  params.stationary_scans = 100;
  const Scene stationary = make_scene(SceneKind::STATIONARY, params);
  REQUIRE(stationary.trajectory.poses.size() == 100);
  for (const Pose& pose : stationary.trajectory.poses) {
    CHECK(pose.x == stationary.trajectory.poses[0].x);
    CHECK(pose.y == stationary.trajectory.poses[0].y);
    CHECK(pose.heading == stationary.trajectory.poses[0].heading);
  }

  SceneParams corridor_params;
  corridor_params.corridor_length_m = 10.0;
  corridor_params.speed_cm_per_quantum = 2.2;
  const Scene corridor = make_scene(SceneKind::CORRIDOR, corridor_params);
  CHECK(corridor.trajectory.poses.size() == 455);  // floor(10 / 0.022) + 1

  const Scene loop = make_scene(SceneKind::OFFICE_LOOP, SceneParams{});
  CHECK(loop.trajectory.poses.size() > 100);
  CHECK_FALSE(loop.world.segments.empty());
}

TEST_CASE("bad scene parameters are rejected") {
  SceneParams params;
  params.corridor_length_m = -1.0;
  CHECK_THROWS_AS(make_scene(SceneKind::CORRIDOR, params), Error);

  params = SceneParams{};
  params.room_width_m = 0.0;
  CHECK_THROWS_AS(make_scene(SceneKind::ROOM, params), Error);

  params = SceneParams{};
  params.stationary_scans = 0;
  CHECK_THROWS_AS(make_scene(SceneKind::STATIONARY, params), Error);

  params = SceneParams{};
  params.speed_cm_per_quantum = 0.0;
  CHECK_THROWS_AS(make_scene(SceneKind::CORRIDOR, params), Error);
}

TEST_CASE("noiseless corridor scans score high, circle scans score zero") {
  SceneParams params;
  const Scene corridor = make_scene(SceneKind::CORRIDOR, params);
  SensorModel sensor;
  CorridorConfig config;
  config.range_error_delta = 0.03;

  const CorridorReport on_corridor =
      corridor_score(raycast(corridor.world, Pose{5.0, 0.0, 0.0}, sensor), config);
  CHECK(on_corridor.abs_score > 0.9);

  const World circle = circle_world(3.0, 360);
  const CorridorReport on_circle =
      corridor_score(raycast(circle, Pose{}, sensor), config);
  CHECK(on_circle.abs_score < 0.5);
}

TEST_CASE("rendering stamps timestamps one quantum apart") {
  SceneParams params;
  params.stationary_scans = 5;
  params.quantum_s = 0.025;
  const Scene scene = make_scene(SceneKind::STATIONARY, params);
  SensorModel sensor;
  sensor.beams = 50;
  const std::vector<LaserScan> scans = render_scene(scene, sensor);
  REQUIRE(scans.size() == 5);
  for (std::size_t i = 0; i < scans.size(); ++i)
    CHECK(scans[i].timestamp == doctest::Approx(0.025 * static_cast<double>(i)));
}
