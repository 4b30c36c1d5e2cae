#include "cgl/resonator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "cgl/errors.hpp"
#include "cgl/special.hpp"
#include "cgl/summation.hpp"

namespace cgl {

namespace {

using u128 = unsigned __int128;

constexpr u128 kNormSaturated = ~static_cast<u128>(0);

u128 saturating_mul(u128 a, u128 b) {
  if (a != 0 && b > kNormSaturated / a) return kNormSaturated;
  return a * b;
}

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

double log_binomial(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

struct DescriptorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Largest count allowed by "strictly fewer than bound".
std::int64_t max_count(double bound) {
  if (!(bound > 0.0)) return -1;
  if (std::isinf(bound)) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(std::ceil(bound)) - 1;
}

}  // namespace

double ResonatorParams::log2_m() const { return std::log(log_m); }
double ResonatorParams::log3_m() const { return std::log(log2_m()); }
double ResonatorParams::scale() const { return log_m * log2_m(); }

int ResonatorParams::block_count() const {
  if (k_blocks) return *k_blocks;
  const double k = std::pow(log2_m(), gamma);
  // (log_2 M)^gamma can land on an integer (8^{1/3}); absorb rounding below it.
  return static_cast<int>(std::floor(k * (1.0 + 1e-12)));
}

double ResonatorParams::count_bound(int k) const {
  return a_param * log_m / (static_cast<double>(k) * static_cast<double>(k) * log3_m());
}

void ResonatorParams::validate() const {
  if (!(log_m > std::numbers::e)) throw DomainError("resonator: need M > e^e (log M > e)");
  if (!(gamma > 0.0 && gamma < 0.5)) throw DomainError("resonator: gamma must lie in (0, 1/2)");
  if (!(a_param > 2.0 && a_param < 1.0 / gamma)) throw DomainError("resonator: a must lie in (2, 1/gamma)");
  if (k_blocks && *k_blocks < 1) throw DomainError("resonator: k_blocks must be >= 1");
  if (size_cap < 1) throw DomainError("resonator: size_cap must be >= 1");
}

double resonator_weight(const ResonatorParams& params, std::int64_t p) {
  const double l2 = params.log2_m();
  const double l3 = params.log3_m();
  const auto pd = static_cast<double>(p);
  const double denom = std::log(pd) - l2 - l3;
  if (!(denom > 0.0)) throw DomainError("resonator_weight: p = " + std::to_string(p) + " is below the block range");
  return std::sqrt(params.log_m * l2 / l3) / (std::sqrt(pd) * denom);
}

std::vector<PrimeBlock> build_blocks(const Discriminant& d, const ResonatorParams& params) {
  params.validate();
  std::vector<PrimeBlock> blocks;
  const int k_total = params.block_count();
  const double scale = params.scale();
  for (int k = 1; k <= k_total - 1; ++k) {
    PrimeBlock b;
    b.k = k;
    b.lo = std::exp(static_cast<double>(k)) * scale;
    b.hi = std::exp(static_cast<double>(k + 1)) * scale;
    for (auto p : primes_in(b.lo, b.hi)) {
      const double f = resonator_weight(params, static_cast<std::int64_t>(p));
      for (auto& ideal : splitting(d, static_cast<std::int64_t>(p))) {
        b.ideals.push_back(std::move(ideal));
        b.f_values.push_back(f);
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

FlatPrimes flatten(const std::vector<PrimeBlock>& blocks) {
  FlatPrimes flat;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    for (std::size_t i = 0; i < b.ideals.size(); ++i) {
      flat.p.push_back(b.ideals[i].p);
      flat.norm.push_back(b.ideals[i].norm);
      flat.f.push_back(b.f_values[i]);
      flat.block.push_back(static_cast<int>(bi));
      flat.ideal.push_back(&b.ideals[i]);
    }
  }
  return flat;
}

double log_m_set_size(const std::vector<PrimeBlock>& blocks, std::span<const double> bounds) {
  double total = 0.0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto n = static_cast<std::int64_t>(blocks[bi].ideals.size());
    const std::int64_t top = std::min(n, max_count(bounds[bi]));
    if (top < 0) return -std::numeric_limits<double>::infinity();
    double block = -std::numeric_limits<double>::infinity();
    for (std::int64_t l = 0; l <= top; ++l) {
      block = log_sum_exp(block, log_binomial(static_cast<double>(n), static_cast<double>(l)));
    }
    total += block;
  }
  return total;
}

std::vector<IdealDescriptor> enumerate_m_set(const std::vector<PrimeBlock>& blocks, std::span<const double> bounds,
                                             std::size_t size_cap) {
  if (bounds.size() != blocks.size()) throw DomainError("enumerate_m_set: one bound per block required");
  const double log_size = log_m_set_size(blocks, bounds);
  if (log_size > std::log(static_cast<double>(size_cap)) + 1e-9) {
    throw SizeCapExceeded("resonator set has about e^" + std::to_string(log_size) + " members, above size_cap " +
                              std::to_string(size_cap),
                          log_size);
  }

  const FlatPrimes flat = flatten(blocks);
  const std::size_t n = flat.p.size();
  std::vector<std::int64_t> limit(blocks.size());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) limit[bi] = max_count(bounds[bi]);

  std::vector<IdealDescriptor> out;
  if (std::any_of(limit.begin(), limit.end(), [](std::int64_t l) { return l < 0; })) return out;

  std::vector<std::int64_t> counts(blocks.size(), 0);
  IdealDescriptor current;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (out.size() >= size_cap) {
      throw SizeCapExceeded("resonator set exceeds size_cap " + std::to_string(size_cap), log_size);
    }
    out.push_back(current);
    for (std::size_t i = start; i < n; ++i) {
      const auto b = static_cast<std::size_t>(flat.block[i]);
      if (counts[b] + 1 > limit[b]) continue;
      ++counts[b];
      current.primes.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1);
      current.primes.pop_back();
      --counts[b];
    }
  };
  visit(visit, 0);
  return out;
}

std::vector<IdealDescriptor> enumerate_m_set(const std::vector<PrimeBlock>& blocks, const ResonatorParams& params) {
  std::vector<double> bounds;
  for (const auto& b : blocks) bounds.push_back(params.count_bound(b.k));
  return enumerate_m_set(blocks, bounds, params.size_cap);
}

Eigen::VectorXcd character_transform(const GroupStructure& g, const Eigen::VectorXd& r) {
  const auto h = static_cast<Eigen::Index>(g.h());
  Eigen::VectorXcd out(h);
  for (Eigen::Index k = 0; k < h; ++k) {
    const Character chi = g.character_at(static_cast<std::size_t>(k));
    CompensatedSum<std::complex<double>> acc;
    for (Eigen::Index i = 0; i < h; ++i) acc.add(g.character_value(chi, static_cast<std::size_t>(i)) * r(i));
    out(k) = acc.value();
  }
  return out;
}

ResonatorCoefficients resonator_coeffs(const GroupStructure& g, const std::vector<IdealDescriptor>& m_set,
                                       const std::vector<PrimeBlock>& blocks) {
  const FlatPrimes flat = flatten(blocks);
  std::vector<std::size_t> cls(flat.p.size());
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = g.index_of(flat.ideal[i]->ideal_class);

  const auto h = static_cast<std::size_t>(g.h());
  std::vector<CompensatedSum<double>> r2(h);
  for (const auto& m : m_set) {
    std::size_t c = g.principal_index();
    double f2 = 1.0;
    for (auto i : m.primes) {
      c = g.multiply(c, cls[i]);
      f2 *= flat.f[i] * flat.f[i];
    }
    r2[c].add(f2);
  }
  ResonatorCoefficients out;
  out.r.resize(static_cast<Eigen::Index>(h));
  for (std::size_t i = 0; i < h; ++i) out.r(static_cast<Eigen::Index>(i)) = std::sqrt(r2[i].value());
  out.r_chi = character_transform(g, out.r);
  return out;
}

ResonanceRatio resonance_ratio(std::span<const double> l_values, const Eigen::VectorXcd& r_chi) {
  CompensatedSum<double> v, w;
  for (Eigen::Index k = 1; k < r_chi.size(); ++k) {
    const double weight = std::norm(r_chi(k));
    v.add(l_values[static_cast<std::size_t>(k)] * weight);
    w.add(weight);
  }
  return {v.value(), w.value()};
}

ResonanceQuantities quantities(const GroupStructure& g, const ResonatorCoefficients& coeffs, const AfeSums& sums,
                               const MajorantSum& majorant) {
  const auto h = static_cast<std::size_t>(g.h());
  std::vector<double> afe(h);
  for (std::size_t k = 0; k < h; ++k) afe[k] = afe_sum(g, sums, g.character_at(k)).real();

  ResonanceQuantities q;
  const auto vw = resonance_ratio(afe, coeffs.r_chi);
  q.v = vw.v;
  q.w = vw.w;
  q.w0 = static_cast<double>(h) * coeffs.r.squaredNorm();
  q.e0 = 2.0 * majorant.value * std::norm(coeffs.r_chi(0));
  q.v0 = q.v + q.e0;
  CompensatedSum<double> all;
  for (std::size_t k = 0; k < h; ++k) all.add(afe[k] * std::norm(coeffs.r_chi(static_cast<Eigen::Index>(k))));
  q.v0_all_characters = all.value();
  return q;
}

double divisor_pair_sum(const std::vector<PrimeBlock>& blocks, const std::vector<IdealDescriptor>& m_set,
                        double norm_cutoff, std::optional<std::int64_t> smoothing_d) {
  const FlatPrimes flat = flatten(blocks);
  std::unordered_set<std::vector<std::uint32_t>, DescriptorHash> members;
  for (const auto& m : m_set) members.insert(m.primes);
  const double w_scale =
      smoothing_d ? 2.0 * std::numbers::pi / std::sqrt(static_cast<double>(*smoothing_d)) : 0.0;

  // Quotient norms compare exactly against the cutoff while they fit.
  const bool finite_cutoff = std::isfinite(norm_cutoff);
  const u128 cutoff = finite_cutoff && norm_cutoff >= 0 ? static_cast<u128>(std::floor(norm_cutoff)) : 0;

  CompensatedSum<double> acc;
  std::vector<std::uint32_t> divisor;
  for (const auto& n : m_set) {
    const auto& ps = n.primes;
    // Each prime of n goes either to the divisor m (weight f^2) or to the
    // quotient n/m (weight f / sqrt(N)).
    auto walk = [&](auto&& self, std::size_t pos, double weight, u128 norm, double norm_d) -> void {
      if (finite_cutoff && (norm_cutoff < 0 || norm > cutoff)) return;
      if (pos == ps.size()) {
        if (!members.contains(divisor)) return;
        const double smooth = smoothing_d ? w_value(w_scale * norm_d) : 1.0;
        acc.add(weight * smooth);
        return;
      }
      const auto i = ps[pos];
      divisor.push_back(i);
      self(self, pos + 1, weight * flat.f[i] * flat.f[i], norm, norm_d);
      divisor.pop_back();
      const auto np = static_cast<double>(flat.norm[i]);
      self(self, pos + 1, weight * flat.f[i] / std::sqrt(np), saturating_mul(norm, static_cast<u128>(flat.norm[i])),
           norm_d * np);
    };
    divisor.clear();
    walk(walk, 0, 1.0, 1, 1.0);
  }
  return acc.value();
}

double truncation_majorant(const std::vector<PrimeBlock>& blocks, const std::vector<IdealDescriptor>& m_set,
                           std::int64_t d) {
  const FlatPrimes flat = flatten(blocks);
  CompensatedSum<double> acc;
  for (const auto& n : m_set) {
    double term = 1.0;
    for (auto i : n.primes) {
      const double f = flat.f[i];
      term *= f * f * (1.0 + 1.0 / (f * std::pow(static_cast<double>(flat.norm[i]), 0.25)));
    }
    acc.add(term);
  }
  return std::pow(static_cast<double>(d), -0.125) * acc.value();
}

double f_square_sum(const std::vector<PrimeBlock>& blocks, const std::vector<IdealDescriptor>& m_set) {
  const FlatPrimes flat = flatten(blocks);
  CompensatedSum<double> acc;
  for (const auto& m : m_set) {
    double f2 = 1.0;
    for (auto i : m.primes) f2 *= flat.f[i] * flat.f[i];
    acc.add(f2);
  }
  return acc.value();
}

double log_euler_ratio(const std::vector<PrimeBlock>& blocks) {
  CompensatedSum<double> acc;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.ideals.size(); ++i) {
      const double f = b.f_values[i];
      acc.add(std::log1p(f / (std::sqrt(static_cast<double>(b.ideals[i].norm)) * (1.0 + f * f))));
    }
  }
  return acc.value();
}

double euler_ratio(const std::vector<PrimeBlock>& blocks) { return std::exp(log_euler_ratio(blocks)); }

double theorem2_exponent(const std::vector<PrimeBlock>& blocks, const ResonatorParams& params) {
  const double l2 = params.log2_m();
  const double l3 = params.log3_m();
  CompensatedSum<double> acc;
  for (const auto& b : blocks) {
    for (const auto& ideal : b.ideals) {
      const auto p = static_cast<double>(ideal.p);
      acc.add(1.0 / (std::sqrt(static_cast<double>(ideal.norm)) * std::sqrt(p) * (std::log(p) - l2 - l3)));
    }
  }
  return std::sqrt(params.log_m * l2 / l3) * acc.value();
}

ResonatorInstance build_instance(const GroupStructure& g, const ResonatorParams& params, const AfeSums& sums) {
  return build_instance(g, params, build_blocks(g.discriminant(), params), sums);
}

ResonatorInstance build_instance(const GroupStructure& g, const ResonatorParams& params,
                                 std::vector<PrimeBlock> blocks, const AfeSums& sums) {
  params.validate();
  ResonatorInstance inst;
  inst.params = params;
  inst.t_cut = sums.t_cut;
  inst.blocks = std::move(blocks);
  inst.degenerate = std::all_of(inst.blocks.begin(), inst.blocks.end(),
                                [](const PrimeBlock& b) { return b.ideals.empty(); });
  inst.m_set = enumerate_m_set(inst.blocks, params);
  inst.coeffs = resonator_coeffs(g, inst.m_set, inst.blocks);
  inst.majorant = majorant_sum(g.discriminant(), sums.t_cut);
  inst.q = quantities(g, inst.coeffs, sums, inst.majorant);
  inst.l_values.resize(static_cast<std::size_t>(g.h()));
  for (std::size_t k = 0; k < inst.l_values.size(); ++k) {
    inst.l_values[k] = afe_sum(g, sums, g.character_at(k)).real();
  }
  return inst;
}

ConstraintReport check_constraints(const GroupStructure& g, const ResonatorInstance& inst) {
  const auto dv = static_cast<double>(g.discriminant().value());
  const auto& q = inst.q;
  ConstraintReport rep;
  rep.m_size = inst.m_set.size();
  rep.size_bound = static_cast<double>(g.h()) / (3.0 * std::pow(dv, 0.25) * std::log(dv));
  rep.size_bound_ok = static_cast<double>(rep.m_size) <= rep.size_bound;
  rep.tcc_ratio = q.v0 > 0.0 ? q.e0 / q.v0 : std::numeric_limits<double>::infinity();
  rep.tcc_ok = rep.tcc_ratio < 1.0;
  rep.e0_over_w0 = q.w0 > 0.0 ? q.e0 / q.w0 : std::numeric_limits<double>::infinity();
  rep.surrogate_ok = q.e0 <= q.w0;
  rep.e0_divisor_majorant =
      2.0 * divisor_majorant_sum(g.discriminant(), inst.t_cut) *
      std::norm(inst.coeffs.r_chi(0));
  rep.v0_ge_w0 = q.v0 >= q.w0;
  rep.w_positive = q.w > 0.0;
  rep.v_over_w = rep.w_positive ? q.v / q.w : std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 1; k < inst.l_values.size(); ++k) {
    rep.m_d = k == 1 ? inst.l_values[k] : std::max(rep.m_d, inst.l_values[k]);
  }
  rep.certified = rep.w_positive && rep.m_d >= rep.v_over_w - 1e-6;

  const double l2 = inst.params.log2_m();
  const double l3 = inst.params.log3_m();
  double ramified = 0.0;
  for (const auto& b : inst.blocks) {
    for (const auto& ideal : b.ideals) {
      if (ideal.split_type != SplitType::ramified) continue;
      ++rep.ramified_ideals;
      const auto p = static_cast<double>(ideal.p);
      ramified += 1.0 / (std::sqrt(static_cast<double>(ideal.norm)) * std::sqrt(p) * (std::log(p) - l2 - l3));
    }
  }
  rep.ramified_exponent_share = std::sqrt(inst.params.log_m * l2 / l3) * ramified;
  return rep;
}

}  // namespace cgl
