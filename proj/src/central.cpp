#include "cgl/central.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cgl/errors.hpp"
#include "cgl/ideals.hpp"
#include "cgl/special.hpp"
#include "cgl/summation.hpp"

namespace cgl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// n^{-1/2} W(2 pi n / sqrt(D)) for n = 0..n_max (entry 0 unused).
std::vector<double> afe_weights(const Discriminant& d, std::int64_t n_max) {
  const double scale = 2.0 * std::numbers::pi / std::sqrt(static_cast<double>(d.value()));
  std::vector<double> wt(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto nd = static_cast<double>(n);
    wt[static_cast<std::size_t>(n)] = w_value(scale * nd) / std::sqrt(nd);
  }
  return wt;
}

}  // namespace

std::int64_t afe_length(const Discriminant& d, double t_cut) {
  if (!(t_cut > 0.0)) throw DomainError("afe_length: t_cut must be positive");
  const double root_d = std::sqrt(static_cast<double>(d.value()));
  const double n = std::ceil(root_d / (2.0 * std::numbers::pi) * (t_cut + std::log(static_cast<double>(d.value()))));
  const double n_max = std::max(n, std::ceil(root_d));
  if (n_max > static_cast<double>(kMaxAfeTerms)) {
    throw CapacityError("AFE length " + std::to_string(n_max) + " for D = " + std::to_string(d.value()) +
                        " exceeds the configured limit");
  }
  return static_cast<std::int64_t>(n_max);
}

AfeSums afe_sums(const GroupStructure& g, double t_cut) {
  const Discriminant& d = g.discriminant();
  AfeSums out;
  out.t_cut = t_cut;
  out.n_max = afe_length(d, t_cut);
  const auto wt = afe_weights(d, out.n_max);
  const auto w = static_cast<double>(unit_count(d));

  // Inverse classes have identical representation counts, so each pair is
  // summed once and shared; this also makes S_A == S_{A^{-1}} bit-exact.
  const std::size_t h = g.classes().size();
  out.per_class.assign(h, 0.0);
  std::vector<bool> done(h, false);
  std::vector<std::int32_t> reps;
  double total = 0.0;
  for (std::size_t i = 0; i < h; ++i) {
    if (done[i]) continue;
    representations_upto(g.classes()[i], out.n_max, reps);
    CompensatedSum<double> acc;
    for (std::size_t n = 1; n < reps.size(); ++n) {
      if (reps[n] != 0) acc.add(static_cast<double>(reps[n]) * wt[n]);
    }
    const double s = acc.value() / w;
    const std::size_t j = g.inverse_index(i);
    out.per_class[i] = out.per_class[j] = s;
    done[i] = done[j] = true;
    total += (i == j ? 1.0 : 2.0) * s;
  }
  out.tail_bound = afe_tail_bound(d, out.n_max);
  // Each weight carries a few ulp (erfc, sqrt, division); the per-class sums
  // are compensated; the character combination adds about one ulp per class.
  out.rounding_bound = 2.0 * (32.0 + 2.0 * static_cast<double>(h)) * kEps * total;
  return out;
}

std::complex<double> afe_sum(const GroupStructure& g, const AfeSums& sums, const Character& chi) {
  CompensatedSum<std::complex<double>> acc;
  for (std::size_t i = 0; i < sums.per_class.size(); ++i) acc.add(g.character_value(chi, i) * sums.per_class[i]);
  return 2.0 * acc.value();
}

CentralValue central_value(const GroupStructure& g, const AfeSums& sums, const Character& chi) {
  if (chi.is_trivial()) {
    throw DomainError("central_value: the approximate functional equation needs a nontrivial character");
  }
  const auto z = afe_sum(g, sums, chi);
  return {chi, z.real(), z.imag(), sums.tail_bound + sums.rounding_bound, sums.n_max};
}

CentralValue central_value(const GroupStructure& g, const Character& chi, double t_cut) {
  if (chi.is_trivial()) {
    throw DomainError("central_value: the approximate functional equation needs a nontrivial character");
  }
  return central_value(g, afe_sums(g, t_cut), chi);
}

std::vector<CentralValue> central_values(const GroupStructure& g, const AfeSums& sums) {
  std::vector<CentralValue> out;
  for (std::size_t k = 1; k < static_cast<std::size_t>(g.h()); ++k) out.push_back(central_value(g, sums, g.character_at(k)));
  return out;
}

MajorantSum majorant_sum(const Discriminant& d, double t_cut) {
  MajorantSum out;
  out.n_max = afe_length(d, t_cut);
  const auto wt = afe_weights(d, out.n_max);
  const auto lam = lambda_table(d, out.n_max);
  CompensatedSum<double> acc;
  for (std::int64_t n = 1; n <= out.n_max; ++n) {
    if (lam[n] != 0) acc.add(static_cast<double>(lam[n]) * wt[n]);
  }
  out.value = acc.value();
  // afe_tail_bound carries the factor 2 of the L-value normalization.
  out.error = 0.5 * afe_tail_bound(d, out.n_max) + 32.0 * kEps * out.value;
  return out;
}

double divisor_majorant_sum(const Discriminant& d, double t_cut) {
  const std::int64_t n_max = afe_length(d, t_cut);
  const auto wt = afe_weights(d, n_max);
  std::vector<std::int64_t> tau(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t t = 1; t <= n_max; ++t) {
    for (std::int64_t m = t; m <= n_max; m += t) ++tau[m];
  }
  CompensatedSum<double> acc;
  for (std::int64_t n = 1; n <= n_max; ++n) acc.add(static_cast<double>(tau[n]) * wt[n]);
  return acc.value() + 0.5 * afe_tail_bound(d, n_max);
}

std::optional<FamilyMax> family_max(const GroupStructure& g, const AfeSums& sums) {
  if (g.h() < 2) return std::nullopt;
  FamilyMax best;
  best.d = g.discriminant().value();
  best.m_d = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < static_cast<std::size_t>(g.h()); ++k) {
    const Character chi = g.character_at(k);
    // L(1/2, chi) = L(1/2, conj chi): evaluate one member of each pair.
    if (g.character_index(g.conjugate(chi)) < k) continue;
    const auto cv = central_value(g, sums, chi);
    if (cv.value > best.m_d) {
      best.m_d = cv.value;
      best.argmax_chi = chi;
      best.argmax_index = k;
      best.error = cv.trunc_error;
    }
  }
  return best;
}

std::optional<FamilyMax> family_max(const GroupStructure& g, double t_cut) {
  if (g.h() < 2) return std::nullopt;
  return family_max(g, afe_sums(g, t_cut));
}

}  // namespace cgl
