#include <doctest.h>

#include <cmath>
#include <vector>

#include "scanfilter/correlation.hpp"

#include "oracles.hpp"

using namespace scanfilter;

TEST_CASE("pearson on identical vectors is 1") {
  const std::vector<double> x{1.0, 2.0, 5.0, 3.0};
  const auto p = pearson(x, x);
  REQUIRE(p.has_value());
  CHECK(*p == doctest::Approx(1.0));
}

TEST_CASE("pearson on a negative affine image is -1") {
  const std::vector<double> x{1.0, 2.0, 3.0, 7.0};
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = -2.0 * x[i] + 7.0;
  const auto p = pearson(x, y);
  REQUIRE(p.has_value());
  CHECK(*p == doctest::Approx(-1.0));
}

TEST_CASE("one-pass pearson matches the two-pass oracle on a fixed sample") {
  const std::vector<double> x{1.0, 2.0, 3.0, 5.0};
  const std::vector<double> y{2.0, 1.0, 4.0, 6.0};
  const auto p = pearson(x, y);
  REQUIRE(p.has_value());
  const double expected = oracles::pearson_two_pass(x, y);
  CHECK(std::abs(*p - expected) < 1e-12);
  CHECK(*p == doctest::Approx(0.9022436386781062).epsilon(1e-12));
}

TEST_CASE("pearson rejects zero-variance input") {
  const std::vector<double> flat{4.0, 4.0, 4.0, 4.0};
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  CHECK_FALSE(pearson(flat, x).has_value());
  CHECK_FALSE(pearson(x, flat).has_value());
}

TEST_CASE("spearman on monotone agreement and disagreement") {
  const std::vector<double> x{1.0, 2.5, 7.0, 9.0};
  const std::vector<double> up{0.1, 4.0, 4.5, 100.0};
  std::vector<double> down(up.rbegin(), up.rend());
  auto s_up = spearman(x, up);
  auto s_down = spearman(x, down);
  REQUIRE(s_up.has_value());
  REQUIRE(s_down.has_value());
  CHECK(*s_up == doctest::Approx(1.0));
  CHECK(*s_down == doctest::Approx(-1.0));
}

TEST_CASE("spearman with ties matches the counting-rank oracle") {
  const std::vector<double> x{1.0, 2.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 3.0, 2.0, 4.0};
  const auto s = spearman(x, y);
  REQUIRE(s.has_value());

  const std::vector<double> rx = oracles::counting_ranks(x);
  const std::vector<double> ry = oracles::counting_ranks(y);
  const auto via_ranks = pearson(rx, ry);
  REQUIRE(via_ranks.has_value());
  CHECK(*s == *via_ranks);  // exact: identical rank vectors, same kernel
  CHECK(std::abs(*s - oracles::pearson_two_pass(rx, ry)) < 1e-12);
  CHECK(*s == doctest::Approx(0.94868329805051377).epsilon(1e-12));
}

TEST_CASE("spearman rejects fully tied input") {
  const std::vector<double> tied{2.0, 2.0, 2.0};
  const std::vector<double> x{1.0, 2.0, 3.0};
  CHECK_FALSE(spearman(tied, x).has_value());
}

TEST_CASE("kendall on pinned examples") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{3.0, 2.0, 1.0};
  CHECK(kendall(a, a) == doctest::Approx(1.0));
  CHECK(kendall(a, b) == doctest::Approx(-1.0));

  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y{1.0, 3.0, 2.0, 4.0};
  CHECK(kendall(x, y) == doctest::Approx(2.0 / 3.0));  // (5 - 1) / 6
}

TEST_CASE("kendall matches the enumeration oracle, ties included") {
  oracles::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 24));
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng.uniform_int(0, 6));  // small ints force ties
      y[i] = static_cast<double>(rng.uniform_int(0, 6));
    }
    CHECK(kendall(x, y) == oracles::kendall_enumeration(x, y));
  }
}

TEST_CASE("one-pass pearson tracks the two-pass oracle on random vectors") {
  oracles::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 64));
    const std::vector<double> x = rng.vector(n, 0.0, 100.0);
    const std::vector<double> y = rng.vector(n, 0.0, 100.0);
    const auto p = pearson(x, y);
    if (!p) continue;
    CHECK(std::abs(*p - oracles::pearson_two_pass(x, y)) < 1e-10);
  }
}

TEST_CASE("all three kernels are symmetric and bounded") {
  oracles::Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 40));
    const std::vector<double> x = rng.vector(n, 0.0, 50.0);
    const std::vector<double> y = rng.vector(n, 0.0, 50.0);

    const auto pxy = pearson(x, y);
    const auto pyx = pearson(y, x);
    REQUIRE(pxy.has_value() == pyx.has_value());
    if (pxy) {
      CHECK(*pxy == *pyx);
      CHECK(*pxy >= -1.0);
      CHECK(*pxy <= 1.0);
    }

    const auto sxy = spearman(x, y);
    const auto syx = spearman(y, x);
    REQUIRE(sxy.has_value() == syx.has_value());
    if (sxy) {
      CHECK(*sxy == *syx);
      CHECK(std::abs(*sxy) <= 1.0);
    }

    const double k = kendall(x, y);
    CHECK(k == kendall(y, x));
    CHECK(std::abs(k) <= 1.0);
  }
}

TEST_CASE("pearson is affine invariant") {
  oracles::Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 32));
    const std::vector<double> x = rng.vector(n, 0.0, 10.0);
    const std::vector<double> y = rng.vector(n, 0.0, 10.0);
    const auto base = pearson(x, y);
    if (!base) continue;

    const double a = rng.uniform(0.1, 5.0);
    const double b = rng.uniform(-20.0, 20.0);
    std::vector<double> pos(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = a * x[i] + b;
      neg[i] = -a * x[i] + b;
    }
    const auto p_pos = pearson(pos, y);
    const auto p_neg = pearson(neg, y);
    REQUIRE(p_pos.has_value());
    REQUIRE(p_neg.has_value());
    CHECK(std::abs(*p_pos - *base) < 1e-9);
    CHECK(std::abs(*p_neg + *base) < 1e-9);
  }
}

TEST_CASE("spearman equals pearson of counting ranks on random vectors") {
  oracles::Rng rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 30));
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng.uniform_int(0, 9));
      y[i] = static_cast<double>(rng.uniform_int(0, 9));
    }
    const auto s = spearman(x, y);
    const auto via = pearson(oracles::counting_ranks(x), oracles::counting_ranks(y));
    REQUIRE(s.has_value() == via.has_value());
    if (s) CHECK(*s == *via);
  }
}
