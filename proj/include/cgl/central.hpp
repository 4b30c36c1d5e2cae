#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "cgl/classgroup.hpp"

namespace cgl {

/// Default AFE truncation parameter: the series stops once
/// 2 pi n / sqrt(D) exceeds t_cut + log D.
inline constexpr double kDefaultTCut = 40.0;

/// Longest AFE series the library will evaluate.
inline constexpr std::int64_t kMaxAfeTerms = 20'000'000;

/// ceil(sqrt(D)/(2 pi) * (t_cut + log D)), at least ceil(sqrt(D)).
std::int64_t afe_length(const Discriminant& d, double t_cut);

/// Per-class smoothed sums S_A = sum_{n <= n_max} c_A(n) n^{-1/2} W(2 pi n / sqrt(D)).
///
/// Every L(1/2, chi) is 2 sum_A chi(A) S_A, so one table serves all h
/// characters of a discriminant.
struct AfeSums {
  double t_cut = kDefaultTCut;
  std::int64_t n_max = 0;
  std::vector<double> per_class;
  double tail_bound = 0.0;      ///< afe_tail_bound(D, n_max)
  double rounding_bound = 0.0;  ///< floating-point error of 2 sum_A chi(A) S_A
};

AfeSums afe_sums(const GroupStructure& g, double t_cut = kDefaultTCut);

/// 2 sum_A chi(A) S_A for any chi, the trivial character included.
std::complex<double> afe_sum(const GroupStructure& g, const AfeSums& sums, const Character& chi);

struct CentralValue {
  Character chi;
  double value = 0.0;       ///< real part of the AFE sum
  double imag_part = 0.0;   ///< discarded imaginary part, kept for auditing
  double trunc_error = 0.0; ///< truncation tail plus rounding bound
  std::int64_t n_max = 0;
};

/// L(1/2, chi) for a nontrivial chi via the approximate functional equation.
/// Throws DomainError for the trivial character, CapacityError when the AFE
/// would exceed kMaxAfeTerms.
CentralValue central_value(const GroupStructure& g, const Character& chi, double t_cut = kDefaultTCut);
CentralValue central_value(const GroupStructure& g, const AfeSums& sums, const Character& chi);

/// Central values of every nontrivial character, in character order.
std::vector<CentralValue> central_values(const GroupStructure& g, const AfeSums& sums);

struct MajorantSum {
  double value = 0.0;
  double error = 0.0;
  std::int64_t n_max = 0;
};

/// S(D) = sum_n lambda(n) n^{-1/2} W(2 pi n / sqrt(D)); `error` folds in the
/// truncated tail and rounding.
MajorantSum majorant_sum(const Discriminant& d, double t_cut = kDefaultTCut);

/// The divisor-function majorant sum_n d(n) n^{-1/2} W(2 pi n / sqrt(D)),
/// an upper bound for S(D).
double divisor_majorant_sum(const Discriminant& d, double t_cut = kDefaultTCut);

struct FamilyMax {
  std::int64_t d = 0;
  double m_d = 0.0;
  Character argmax_chi;
  std::size_t argmax_index = 0;
  double error = 0.0;
};

/// max over nontrivial chi of L(1/2, chi); std::nullopt when h_D = 1.
std::optional<FamilyMax> family_max(const GroupStructure& g, double t_cut = kDefaultTCut);
std::optional<FamilyMax> family_max(const GroupStructure& g, const AfeSums& sums);

}  // namespace cgl
