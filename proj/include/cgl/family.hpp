#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgl/central.hpp"
#include "cgl/resonator.hpp"

namespace cgl {

/// sum of (-D/p) over the family x <= D <= 2x. p must be an odd prime.
std::int64_t crivo_sum(std::int64_t x, std::int64_t p);

/// (1/N_X) sum_{D, p not dividing D} (1 + (-D/p)) / 2: the share of the
/// family in which p splits.
double split_fraction(std::int64_t x, std::int64_t p);

/// The prime sum over the full block range (e scale, e^K scale] against the
/// integral of dx / (x log x (log x - c)), c = log_2 M + log_3 M.
struct PrimeSumCheck {
  double lo = 0.0;
  double hi = 0.0;
  double prime_sum = 0.0;  ///< sum_p 1 / (p (log p - c))
  double integral = 0.0;   ///< adaptive quadrature
  double analytic = 0.0;   ///< (1/c) ln(K (c + 1) / (c + K))
  double closed_form = 0.0;  ///< gamma log_3 M / log_2 M
};

PrimeSumCheck prime_sum_integral_check(const ResonatorParams& params);

struct FamilyRow {
  std::int64_t d = 0;
  std::int64_t h = 0;
  double m_d = 1.0;  ///< 1 when h = 1
  std::optional<std::size_t> argmax_char;
  std::optional<double> v_over_w;
  std::string status;  ///< ok, trivial_class_group, uncertified, size_cap_exceeded

  friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

struct CrivoEntry {
  std::int64_t p = 0;
  std::int64_t sum = 0;
  double split_fraction = 0.0;

  friend bool operator==(const CrivoEntry&, const CrivoEntry&) = default;
};

struct FamilyReport {
  std::int64_t x = 0;
  std::int64_t n_x = 0;
  std::vector<FamilyRow> rows;
  std::optional<double> geo_mean;  ///< absent if some M_D <= 0
  /// exp(delta sqrt(log X log_3 X / log_2 X)); absent when log_3 X <= 0.
  std::optional<double> theorem1_bound;
  double delta = 0.24;
  std::optional<double> ratio;  ///< geo_mean / theorem1_bound
  std::vector<CrivoEntry> crivo;

  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

struct FamilyOptions {
  std::int64_t x = 10;
  double delta = 0.24;
  double t_cut = kDefaultTCut;
  std::optional<ResonatorParams> resonate;
  unsigned threads = 1;
  /// Odd primes p <= prime_max go into the crivo table.
  std::int64_t prime_max = 0;
  /// Upper limit on sum h_D sqrt(D), a proxy for total work.
  double work_limit = 1e11;
};

std::optional<double> theorem1_bound(std::int64_t x, double delta);

/// Computes one row per D in ascending order. `on_row` sees every row in that
/// order as soon as it and all earlier rows are done, whatever the thread count.
FamilyReport run_family(const FamilyOptions& opts, const std::function<void(const FamilyRow&)>& on_row = {});

/// The row for a single discriminant.
FamilyRow family_row(const Discriminant& d, const FamilyOptions& opts);

}  // namespace cgl
