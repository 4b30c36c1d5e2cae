#pragma once

// Plain-data reports assembled from the library for the command line.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgl/central.hpp"
#include "cgl/family.hpp"
#include "cgl/resonator.hpp"

namespace cgl {

struct ClassGroupReport {
  std::int64_t d = 0;
  std::int64_t h = 0;
  std::vector<std::int64_t> cyclic_orders;
  std::vector<std::array<std::int64_t, 3>> forms;

  friend bool operator==(const ClassGroupReport&, const ClassGroupReport&) = default;
};

ClassGroupReport make_classgroup_report(const GroupStructure& g);

struct LValueRow {
  std::size_t index = 0;
  std::vector<std::int64_t> exponents;
  double value = 0.0;
  double imag_part = 0.0;
  double trunc_error = 0.0;
  std::int64_t n_max = 0;

  friend bool operator==(const LValueRow&, const LValueRow&) = default;
};

struct LValueReport {
  std::int64_t d = 0;
  std::int64_t h = 0;
  double t_cut = kDefaultTCut;
  std::vector<LValueRow> rows;

  friend bool operator==(const LValueReport&, const LValueReport&) = default;
};

/// Rows for the given character indices, all nontrivial ones when empty.
/// Index 0 or an index >= h throws DomainError.
LValueReport make_lvalue_report(const GroupStructure& g, double t_cut, const std::vector<std::size_t>& indices);

struct BlockSummary {
  int k = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t primes = 0;
  std::int64_t ideals = 0;
  std::int64_t split = 0;
  std::int64_t inert = 0;
  std::int64_t ramified = 0;

  friend bool operator==(const BlockSummary&, const BlockSummary&) = default;
};

struct ResonateQuantitiesReport {
  std::uint64_t m_size = 0;
  double v = 0.0;
  double w = 0.0;
  std::optional<double> v_over_w;
  double v0 = 0.0;
  double w0 = 0.0;
  double e0 = 0.0;
  double v0_all_characters = 0.0;
  double e0_divisor_majorant = 0.0;
  std::optional<double> tcc_ratio;
  bool tcc_ok = false;
  std::optional<double> e0_over_w0;
  bool surrogate_ok = false;
  double size_bound = 0.0;
  bool size_bound_ok = false;
  bool v0_ge_w0 = false;
  bool certified = false;
  std::uint64_t ramified_ideals = 0;
  double ramified_exponent_share = 0.0;

  friend bool operator==(const ResonateQuantitiesReport&, const ResonateQuantitiesReport&) = default;
};

struct ResonateReport {
  std::int64_t d = 0;
  std::int64_t h = 0;
  double log_m = 0.0;
  double gamma = 0.0;
  double a_param = 0.0;
  std::optional<int> k_blocks;
  int block_count = 0;
  std::uint64_t size_cap = 0;
  double t_cut = kDefaultTCut;
  std::vector<BlockSummary> blocks;
  /// ok, empty_prime_set or size_cap_exceeded
  std::string status;
  /// log |M| when the set was too large to enumerate
  std::optional<double> log_m_set_size;
  double theorem2_exponent = 0.0;
  double exp_theorem2_exponent = 1.0;
  double euler_ratio = 1.0;
  std::optional<double> m_d;  ///< absent when h = 1
  std::optional<ResonateQuantitiesReport> quantities;

  friend bool operator==(const ResonateReport&, const ResonateReport&) = default;
};

ResonateReport make_resonate_report(const GroupStructure& g, const ResonatorParams& params, double t_cut);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  bool passed = false;
  std::vector<CheckResult> results;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

}  // namespace cgl
