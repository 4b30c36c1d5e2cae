#include <cmath>
#include <random>

#include "cgl/errors.hpp"
#include "cgl/oracles.hpp"
#include "cgl/special.hpp"
#include "doctest.h"

using namespace cgl;

TEST_CASE("W at the anchor points") {
  CHECK(w_smooth(0.0).value == 1.0);
  // erfc(1) to 20 digits.
  CHECK(std::abs(w_smooth(1.0).value - 0.15729920705028513066) <= 1e-15);
  CHECK(w_smooth(25.0).value <= std::exp(-25.0));
  CHECK_THROWS_AS(w_smooth(-1e-9), DomainError);
}

TEST_CASE("W error bound is within contract") {
  for (double x = 0.0; x <= 50.0; x += 0.37) {
    const auto e = w_smooth(x);
    CHECK(e.abs_error_bound <= 1e-12);
    CHECK(e.value >= 0.0);
    CHECK(e.value <= 1.0);
  }
}

TEST_CASE("W is strictly decreasing and below e^-x") {
  double prev = w_value(0.0);
  for (int i = 1; i <= 5000; ++i) {
    const double x = i * 0.01;
    const double v = w_value(x);
    CHECK(v < prev);
    if (x >= 1.0) CHECK(v <= std::exp(-x) + 1e-12);
    prev = v;
  }
}

TEST_CASE("W matches quadrature of its defining integral") {
  for (double x : {0.0, 1e-6, 0.01, 0.1, 0.25, 0.5, 1.0, 2.0, 3.3, 5.0, 7.5, 10.0, 15.0, 20.0, 30.0, 40.0}) {
    const long double ref = oracle::w_quadrature(x);
    CHECK(std::abs(static_cast<long double>(w_value(x)) - ref) <= 1e-12L);
  }
}

TEST_CASE("afe_tail_bound examples") {
  const Discriminant d23(23);
  // 2 pi n / sqrt(23) >= 60 from n = 46 on.
  CHECK(afe_tail_bound(d23, 46) < 1e-20);
  const Discriminant d4(4);
  const double tiny = afe_tail_bound(d4, 1'000'000);
  CHECK(tiny < 1e-300);
  CHECK(tiny > 0.0);
  CHECK_THROWS_AS(afe_tail_bound(Discriminant(1000003), 100), DomainError);
}

TEST_CASE("afe_tail_bound is monotone under doubling") {
  for (std::int64_t dv : {3, 23, 455, 5003, 99991}) {
    if (!is_fundamental(-dv)) continue;
    const Discriminant d(dv);
    auto n = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(dv))));
    for (int k = 0; k < 12; ++k, n *= 2) CHECK(afe_tail_bound(d, 2 * n) <= afe_tail_bound(d, n));
  }
}

TEST_CASE("afe_tail_bound majorizes brute-force tails") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::int64_t> pick_d(3, 3000);
  int checked = 0;
  while (checked < 50) {
    const std::int64_t dv = pick_d(rng);
    if (!is_fundamental(-dv)) continue;
    const Discriminant d(dv);
    const auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(dv))));
    std::uniform_int_distribution<std::int64_t> pick_n(root, 3 * root);
    const std::int64_t n_max = pick_n(rng);
    // Past 10 n_max the remainder is itself bounded by afe_tail_bound.
    const double brute = oracle::afe_tail_brute(dv, n_max, 10 * n_max) + afe_tail_bound(d, 10 * n_max);
    CHECK(brute <= afe_tail_bound(d, n_max));
    ++checked;
  }
}
