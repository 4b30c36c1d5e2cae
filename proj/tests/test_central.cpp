#include <cmath>

#include "cgl/central.hpp"
#include "cgl/errors.hpp"
#include "cgl/oracles.hpp"
#include "cgl/special.hpp"
#include "doctest.h"

using namespace cgl;

namespace {

std::vector<Discriminant> fundamentals_in(std::int64_t lo, std::int64_t hi) {
  std::vector<Discriminant> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (is_fundamental(-d)) out.emplace_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("AFE length") {
  const Discriminant d(23);
  CHECK(afe_length(d, 40.0) == static_cast<std::int64_t>(std::ceil(std::sqrt(23.0) / (2 * M_PI) * (40 + std::log(23.0)))));
  CHECK(afe_length(Discriminant(3), 0.1) >= 2);
  CHECK_THROWS_AS(afe_length(d, 0.0), DomainError);
  std::int64_t huge = 10'000'000'000'000;
  while (!is_fundamental(-huge)) ++huge;
  CHECK_THROWS_AS(afe_length(Discriminant(huge), 40.0), CapacityError);
}

TEST_CASE("D = 23: truncation stability and conjugate equality") {
  const auto g = class_group(Discriminant(23));
  const auto c1 = central_value(g, g.character_at(1));
  const auto c2 = central_value(g, g.character_at(2));
  const auto c1_60 = central_value(g, g.character_at(1), 60.0);
  CHECK(std::abs(c1.value - c1_60.value) <= 2e-8);
  CHECK(std::abs(c1.value - c2.value) <= 1e-8);
  CHECK(std::abs(c1.imag_part) <= 1e-8);
  CHECK(c1.trunc_error <= 1e-8);
  CHECK(c1.n_max == afe_length(Discriminant(23), 40.0));
}

TEST_CASE("trivial character is refused") {
  const auto g = class_group(Discriminant(23));
  CHECK_THROWS_AS(central_value(g, g.character_at(0)), DomainError);
}

TEST_CASE("genus characters match the factored Dirichlet series") {
  struct Case {
    std::int64_t d, d1, d2;
  };
  for (const auto& [dv, d1, d2] : {Case{15, 5, -3}, Case{20, 5, -4}, Case{24, 8, -3}}) {
    const Discriminant d(dv);
    const auto g = class_group(d);
    const auto cv = central_value(g, g.character_at(1));
    const double ref = oracle::genus_central_value(dv, d1, d2, cv.n_max);
    CHECK(std::abs(cv.value - ref) <= 1e-8);
  }
}

TEST_CASE("reality, conjugate symmetry and truncation contract for D <= 2000") {
  for (const auto& d : fundamentals_in(3, 2000)) {
    const auto g = class_group(d);
    if (g.h() < 2) continue;
    const auto s30 = afe_sums(g, 30.0);
    const auto s40 = afe_sums(g, 40.0);
    const auto s60 = afe_sums(g, 60.0);
    for (std::size_t k = 1; k < static_cast<std::size_t>(g.h()); ++k) {
      const auto chi = g.character_at(k);
      const auto v30 = central_value(g, s30, chi);
      const auto v40 = central_value(g, s40, chi);
      const auto v60 = central_value(g, s60, chi);
      CHECK(std::abs(v40.imag_part) <= 1e-8 + v40.trunc_error);
      CHECK(std::abs(v40.value - central_value(g, s40, g.conjugate(chi)).value) <= 1e-8);
      CHECK(std::abs(v30.value - v40.value) <= v30.trunc_error + v40.trunc_error);
      CHECK(std::abs(v60.value - v40.value) <= v60.trunc_error + v40.trunc_error);
      CHECK(std::abs(v30.value - v60.value) <= v30.trunc_error + v60.trunc_error);
      CHECK(v40.trunc_error <= 1e-8);
    }
  }
}

TEST_CASE("majorant sum examples") {
  const Discriminant d(23);
  const auto s = majorant_sum(d);
  CHECK(s.value >= w_value(2 * M_PI / std::sqrt(23.0)));
  CHECK(std::abs(s.value - majorant_sum(d, 60.0).value) <= 1e-8);

  const Discriminant big(9995);
  CHECK(majorant_sum(big).value <= 2.0 * std::pow(9995.0, 0.25) * std::log(9995.0));
  CHECK(majorant_sum(big).value <= divisor_majorant_sum(big));
}

TEST_CASE("majorant dominates every central value") {
  for (const auto& d : fundamentals_in(3, 2000)) {
    const auto g = class_group(d);
    if (g.h() < 2) continue;
    const auto sums = afe_sums(g);
    const auto maj = majorant_sum(d);
    for (const auto& cv : central_values(g, sums)) {
      CHECK(std::abs(cv.value) <= 2.0 * maj.value + 2.0 * maj.error + cv.trunc_error);
    }
  }
}

TEST_CASE("family_max") {
  CHECK_FALSE(family_max(class_group(Discriminant(11))).has_value());

  const auto g23 = class_group(Discriminant(23));
  const auto m23 = family_max(g23);
  REQUIRE(m23.has_value());
  CHECK(m23->m_d == central_value(g23, g23.character_at(1)).value);
  CHECK_FALSE(m23->argmax_chi.is_trivial());

  const auto g15 = class_group(Discriminant(15));
  const auto m15 = family_max(g15);
  REQUIRE(m15.has_value());
  CHECK(m15->m_d == central_value(g15, g15.character_at(1)).value);

  for (const auto& d : fundamentals_in(1000, 1400)) {
    const auto g = class_group(d);
    const auto m = family_max(g);
    if (g.h() < 2) {
      CHECK_FALSE(m.has_value());
      continue;
    }
    REQUIRE(m.has_value());
    CHECK_FALSE(m->argmax_chi.is_trivial());
    for (const auto& cv : central_values(g, afe_sums(g))) CHECK(cv.value <= m->m_d + 1e-12);
  }
}
