#pragma once

#include <optional>
#include <string>

#include "cgl/family.hpp"
#include "cgl/reports.hpp"
#include "json.hpp"

namespace nlohmann {

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};

}  // namespace nlohmann

namespace cgl {

using json = nlohmann::json;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassGroupReport, d, h, cyclic_orders, forms)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LValueRow, index, exponents, value, imag_part, trunc_error, n_max)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LValueReport, d, h, t_cut, rows)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BlockSummary, k, lo, hi, primes, ideals, split, inert, ramified)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResonateQuantitiesReport, m_size, v, w, v_over_w, v0, w0, e0, v0_all_characters,
                                   e0_divisor_majorant, tcc_ratio, tcc_ok, e0_over_w0, surrogate_ok, size_bound,
                                   size_bound_ok, v0_ge_w0, certified, ramified_ideals, ramified_exponent_share)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResonateReport, d, h, log_m, gamma, a_param, k_blocks, block_count, size_cap, t_cut,
                                   blocks, status, log_m_set_size, theorem2_exponent, exp_theorem2_exponent,
                                   euler_ratio, m_d, quantities)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyRow, d, h, m_d, argmax_char, v_over_w, status)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CrivoEntry, p, sum, split_fraction)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyReport, x, n_x, rows, geo_mean, theorem1_bound, delta, ratio, crivo)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckResult, name, passed, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyReport, suite, seed, passed, results)

/// 17 significant digits, so the value reads back exactly.
std::string format_double(double x);

std::string family_csv_header();
std::string family_csv_row(const FamilyRow& row);

std::string to_csv(const ClassGroupReport& rep);
std::string to_csv(const LValueReport& rep);
std::string to_csv(const ResonateReport& rep);

std::string to_text(const ClassGroupReport& rep);
std::string to_text(const LValueReport& rep);
std::string to_text(const ResonateReport& rep);
std::string to_text(const VerifyReport& rep);

/// The JSON summary written next to a family CSV (rows omitted).
json family_summary(const FamilyReport& rep);

}  // namespace cgl
