#include <doctest.h>

#include <cmath>
#include <limits>

#include "scanfilter/scan.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace scanfilter;

TEST_CASE("validate_scan accepts an all-valid scan") {
  std::vector<double> ranges(1000, 5.0);
  const LaserScan scan = helpers::make_scan(ranges, 0.002, 0.1, 30.0);
  const ValidationReport report = validate_scan(scan);
  CHECK(report.valid_count == 1000);
  CHECK(report.invalid_indices.empty());
}

TEST_CASE("validate_scan flags non-finite ranges") {
  const LaserScan scan = helpers::make_scan(
      {1.0, std::numeric_limits<double>::infinity(), 2.0}, 0.01, 0.1, 30.0);
  const ValidationReport report = validate_scan(scan);
  CHECK(report.valid_count == 2);
  REQUIRE(report.invalid_indices.size() == 1);
  CHECK(report.invalid_indices[0] == 1);
}

TEST_CASE("validate_scan flags below-minimum ranges") {
  const LaserScan scan = helpers::make_scan({0.05, 1.0}, 0.01, 0.1, 30.0);
  const ValidationReport report = validate_scan(scan);
  CHECK(report.valid_count == 1);
  REQUIRE(report.invalid_indices.size() == 1);
  CHECK(report.invalid_indices[0] == 0);
}

TEST_CASE("validate_scan error paths") {
  LaserScan empty = helpers::make_scan({});
  empty.ranges.clear();
  CHECK_THROWS_AS(validate_scan(empty), Error);

  LaserScan bad_increment = helpers::make_scan({1.0, 2.0});
  bad_increment.angle_increment = 0.0;
  try {
    validate_scan(bad_increment);
    FAIL("expected BAD_GEOMETRY");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BAD_GEOMETRY);
  }

  LaserScan wide = helpers::make_scan(std::vector<double>(100, 1.0));
  wide.angle_increment = 0.1;  // 9.9 rad > 2*pi
  CHECK_THROWS_AS(validate_scan(wide), Error);
}

TEST_CASE("validate_scan is deterministic and complete") {
  oracles::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 300));
    std::vector<double> ranges(n);
    for (double& r : ranges) {
      const double u = rng.uniform(0.0, 1.0);
      if (u < 0.1)
        r = std::numeric_limits<double>::quiet_NaN();
      else if (u < 0.2)
        r = rng.uniform(30.0, 60.0);  // beyond range_max
      else
        r = rng.uniform(0.2, 29.0);
    }
    const LaserScan scan = helpers::make_scan(ranges, 0.005, 0.1, 30.0);
    const ValidationReport a = validate_scan(scan);
    const ValidationReport b = validate_scan(scan);
    CHECK(a.valid_count + a.invalid_indices.size() == n);
    CHECK(a.valid_count == b.valid_count);
    CHECK(a.invalid_indices == b.invalid_indices);
  }
}
