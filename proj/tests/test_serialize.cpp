#include <cmath>
#include <limits>
#include <random>

#include "cgl/errors.hpp"
#include "cgl/serialize.hpp"
#include "doctest.h"

using namespace cgl;

namespace {

template <typename T>
T round_trip(const T& x) {
  return json::parse(json(x).dump()).get<T>();
}

}  // namespace

TEST_CASE("doubles print with 17 significant digits and read back exactly") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("class group and L-value reports round-trip") {
  const auto g = class_group(Discriminant(23));
  const auto cg = make_classgroup_report(g);
  CHECK(cg.h == 3);
  CHECK(cg.cyclic_orders == std::vector<std::int64_t>{3});
  CHECK(round_trip(cg) == cg);
  CHECK(to_text(cg).find("C3") != std::string::npos);

  const auto trivial = make_classgroup_report(class_group(Discriminant(4)));
  CHECK(trivial.h == 1);
  CHECK(round_trip(trivial) == trivial);

  const auto lv = make_lvalue_report(g, kDefaultTCut, {});
  REQUIRE(lv.rows.size() == 2);
  CHECK(std::abs(lv.rows[0].value - lv.rows[1].value) <= 1e-8);
  CHECK(round_trip(lv) == lv);
  CHECK_THROWS_AS(make_lvalue_report(g, kDefaultTCut, {0}), DomainError);
  CHECK_THROWS_AS(make_lvalue_report(g, kDefaultTCut, {3}), DomainError);
}

TEST_CASE("resonate reports") {
  const auto g = class_group(Discriminant(5003));
  ResonatorParams empty;
  empty.log_m = 20.0;
  const auto rep = make_resonate_report(g, empty, kDefaultTCut);
  CHECK(rep.status == "empty_prime_set");
  CHECK(rep.theorem2_exponent == 0.0);
  REQUIRE(rep.quantities);
  CHECK(rep.quantities->m_size == 1);
  // The unit-ideal resonator weights every character equally.
  const auto lv = make_lvalue_report(g, kDefaultTCut, {});
  double mean = 0.0;
  for (const auto& r : lv.rows) mean += r.value;
  mean /= static_cast<double>(lv.rows.size());
  REQUIRE(rep.quantities->v_over_w);
  CHECK(*rep.quantities->v_over_w == doctest::Approx(mean).epsilon(1e-12));
  CHECK(to_text(rep).find("max L >= V/W: certified") != std::string::npos);
  CHECK(round_trip(rep) == rep);

  ResonatorParams override_k;
  override_k.log_m = 3.0;
  override_k.k_blocks = 2;
  const auto full = make_resonate_report(g, override_k, kDefaultTCut);
  CHECK(full.status == "ok");
  REQUIRE(full.quantities);
  CHECK(full.quantities->certified);
  CHECK(round_trip(full) == full);

  ResonatorParams capped = override_k;
  capped.size_cap = 4;
  const auto partial = make_resonate_report(g, capped, kDefaultTCut);
  CHECK(partial.status == "size_cap_exceeded");
  CHECK(!partial.quantities);
  REQUIRE(partial.log_m_set_size);
  CHECK(*partial.log_m_set_size > std::log(4.0));
  CHECK(round_trip(partial) == partial);
}

TEST_CASE("family reports round-trip and stream identical CSV") {
  FamilyOptions opts;
  opts.x = 300;
  opts.prime_max = 13;
  std::string first, second;
  const auto rep = run_family(opts, [&](const FamilyRow& r) { first += family_csv_row(r) + "\n"; });
  opts.threads = 2;
  run_family(opts, [&](const FamilyRow& r) { second += family_csv_row(r) + "\n"; });
  CHECK(first == second);
  CHECK(round_trip(rep) == rep);
  CHECK(family_csv_header() == "D,h,M_D,argmax_char,v_over_w,status");
  const auto summary = family_summary(rep);
  CHECK(!summary.contains("rows"));
  CHECK(summary.at("crivo").size() == 5);

  opts.x = 10;
  const auto tiny = run_family(opts);
  const json j = tiny;
  CHECK(j.at("theorem1_bound").is_null());
  CHECK(round_trip(tiny) == tiny);
  CHECK(family_csv_row(tiny.rows[0]) == "11,1,1,,,trivial_class_group");
}

TEST_CASE("verify reports round-trip") {
  VerifyReport rep{"special", 7, false, {{"a", true, ""}, {"b", false, "off by 1e-3"}}};
  CHECK(round_trip(rep) == rep);
  CHECK(to_text(rep).find("FAIL b: off by 1e-3") != std::string::npos);
}
