#include <cmath>
#include <numbers>

#include "cgl/arith.hpp"
#include "cgl/errors.hpp"
#include "doctest.h"

using namespace cgl;

namespace {

// (a/2) from the residue of a mod 8.
int kronecker_two_table(std::int64_t a) {
  switch (((a % 8) + 8) % 8) {
    case 1:
    case 7:
      return 1;
    case 3:
    case 5:
      return -1;
    default:
      return 0;
  }
}

std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1;
  b = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime_naive(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-23, 2) == 1);
  CHECK(kronecker(-19, 3) == -1);
  for (std::int64_t a = -50; a <= 50; ++a) CHECK(kronecker(a, 1) == 1);
  CHECK(kronecker(5, 0) == 0);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(3, -1) == 1);
  CHECK(kronecker(-3, -1) == -1);
}

TEST_CASE("kronecker at 2 follows the mod 8 table") {
  for (std::int64_t a = -200; a <= 200; ++a) CHECK(kronecker(a, 2) == kronecker_two_table(a));
}

TEST_CASE("kronecker agrees with Euler's criterion") {
  for (std::int64_t p = 3; p < 200; p += 2) {
    if (!is_prime_naive(p)) continue;
    for (std::int64_t a = -199; a < 200; ++a) {
      if (a % p == 0) continue;
      const std::int64_t e = power_mod(a, (p - 1) / 2, p);
      CHECK(kronecker(a, p) == (e == 1 ? 1 : -1));
    }
  }
}

TEST_CASE("kronecker is multiplicative in the lower argument") {
  for (std::int64_t a = -60; a <= 60; a += 7) {
    for (std::int64_t m = -40; m <= 40; ++m) {
      for (std::int64_t n = -40; n <= 40; n += 3) {
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
    }
  }
}

TEST_CASE("is_fundamental examples") {
  CHECK(is_fundamental(-11));
  CHECK_FALSE(is_fundamental(-12));
  CHECK(is_fundamental(-20));
  CHECK(is_fundamental(-3));
  CHECK(is_fundamental(-4));
  CHECK(is_fundamental(-8));
  CHECK_FALSE(is_fundamental(-5));
  CHECK_FALSE(is_fundamental(-6));
  CHECK_FALSE(is_fundamental(-16));
  CHECK_FALSE(is_fundamental(7));
}

TEST_CASE("fundamental discriminants in [x, 2x]") {
  auto ds = fundamental_discriminants(10);
  std::vector<std::int64_t> v;
  for (auto d : ds) v.push_back(d.value());
  CHECK(v == std::vector<std::int64_t>{11, 15, 19, 20});

  v.clear();
  for (auto d : fundamental_discriminants(3)) v.push_back(d.value());
  CHECK(v == std::vector<std::int64_t>{3, 4});

  CHECK_THROWS_AS(Discriminant(12), DiscriminantError);
  CHECK_THROWS_AS(fundamental_discriminants(2), DomainError);
}

TEST_CASE("fundamental enumeration is exactly the filtered range") {
  for (std::int64_t x : {50, 333, 1000}) {
    auto ds = fundamental_discriminants(x);
    std::size_t i = 0;
    for (std::int64_t d = x; d <= 2 * x; ++d) {
      if (is_fundamental(-d)) {
        REQUIRE(i < ds.size());
        CHECK(ds[i++].value() == d);
      }
    }
    CHECK(i == ds.size());
  }
}

TEST_CASE("density of fundamental discriminants") {
  // Fundamental discriminants of both signs have density 6/pi^2; the
  // negative ones alone have half of that.
  auto positive_fundamental = [](std::int64_t d) {
    if (d % 4 == 1) return is_squarefree(static_cast<std::uint64_t>(d));
    if (d % 4 != 0) return false;
    const std::int64_t m = d / 4;
    return (m % 4 == 2 || m % 4 == 3) && is_squarefree(static_cast<std::uint64_t>(m));
  };
  for (std::int64_t x : {1000, 10000, 100000}) {
    const auto negative = static_cast<double>(fundamental_discriminants(x).size());
    double positive = 0;
    for (std::int64_t d = x; d <= 2 * x; ++d) positive += positive_fundamental(d);
    const double both = (negative + positive) / static_cast<double>(x);
    CHECK(both >= 0.55);
    CHECK(both <= 0.65);
    CHECK(negative / static_cast<double>(x) >= 0.275);
    CHECK(negative / static_cast<double>(x) <= 0.325);
  }
}

TEST_CASE("primes_in uses the half-open interval (lo, hi]") {
  CHECK(primes_in(10, 20) == std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(primes_in(13, 13).empty());
  CHECK(primes_in(2.5, 7) == std::vector<std::uint64_t>{3, 5, 7});
  CHECK(primes_in(2, 3) == std::vector<std::uint64_t>{3});
  CHECK(primes_in(0, 2) == std::vector<std::uint64_t>{2});
  CHECK(primes_in(0, 1000).size() == 168);
}

TEST_CASE("sieve capacity is enforced") {
  const auto saved = sieve_capacity();
  set_sieve_capacity(1000);
  CHECK_THROWS_AS(primes_in(0, 1001), CapacityError);
  CHECK_NOTHROW(primes_in(0, 1000));
  set_sieve_capacity(saved);
}

TEST_CASE("divisor_count") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  for (auto p : primes_in(0, 500)) CHECK(divisor_count(p) == 2);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t brute = 0;
    for (std::uint64_t t = 1; t <= n; ++t) brute += (n % t == 0);
    CHECK(divisor_count(n) == brute);
  }
}

TEST_CASE("log_iter") {
  CHECK(log_iter(std::numbers::e, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(log_iter(std::exp(std::numbers::e), 2) == doctest::Approx(1.0).epsilon(1e-15));
  // e^{e^{e^2}} = e^{1618.17...} overflows double but not long double.
  CHECK(static_cast<double>(log_iter(std::exp(std::exp(std::exp(2.0L))), 3)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(log_iter(std::numbers::e, 3), DomainError);
  CHECK_THROWS_AS(log_iter(0.5, 1), DomainError);
  CHECK_THROWS_AS(log_iter(10.0, 5), DomainError);
}

TEST_CASE("sqrt_mod_prime") {
  for (auto p : primes_in(2, 400)) {
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t a = 0; a < pi; ++a) {
      const std::int64_t r = sqrt_mod_prime(a, pi);
      bool residue = false;
      for (std::int64_t x = 0; x < pi; ++x) residue |= (x * x % pi == a);
      if (residue) {
        REQUIRE(r >= 0);
        CHECK(r * r % pi == a);
      } else {
        CHECK(r == -1);
      }
    }
  }
}
