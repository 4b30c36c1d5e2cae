#include "cgl/reports.hpp"

#include <cmath>
#include <set>

#include "cgl/errors.hpp"

namespace cgl {

ClassGroupReport make_classgroup_report(const GroupStructure& g) {
  ClassGroupReport rep;
  rep.d = g.discriminant().value();
  rep.h = g.h();
  rep.cyclic_orders = g.cyclic_orders();
  for (const auto& f : g.classes()) rep.forms.push_back({f.a, f.b, f.c});
  return rep;
}

LValueReport make_lvalue_report(const GroupStructure& g, double t_cut, const std::vector<std::size_t>& indices) {
  LValueReport rep;
  rep.d = g.discriminant().value();
  rep.h = g.h();
  rep.t_cut = t_cut;
  std::vector<std::size_t> wanted = indices;
  if (wanted.empty()) {
    for (std::size_t k = 1; k < static_cast<std::size_t>(g.h()); ++k) wanted.push_back(k);
  }
  for (auto k : wanted) {
    if (k >= static_cast<std::size_t>(g.h())) {
      throw DomainError("character index " + std::to_string(k) + " out of range (h = " + std::to_string(g.h()) + ")");
    }
    if (k == 0) {
      throw DomainError(
          "character 0 is the trivial character: its L-function has a pole and the approximate functional "
          "equation does not apply");
    }
  }
  if (wanted.empty()) return rep;
  const auto sums = afe_sums(g, t_cut);
  for (auto k : wanted) {
    const auto cv = central_value(g, sums, g.character_at(k));
    rep.rows.push_back({k, cv.chi.exponents, cv.value, cv.imag_part, cv.trunc_error, cv.n_max});
  }
  return rep;
}

ResonateReport make_resonate_report(const GroupStructure& g, const ResonatorParams& params, double t_cut) {
  params.validate();
  ResonateReport rep;
  rep.d = g.discriminant().value();
  rep.h = g.h();
  rep.log_m = params.log_m;
  rep.gamma = params.gamma;
  rep.a_param = params.a_param;
  rep.k_blocks = params.k_blocks;
  rep.block_count = params.block_count();
  rep.size_cap = params.size_cap;
  rep.t_cut = t_cut;

  auto blocks = build_blocks(g.discriminant(), params);
  bool empty = true;
  for (const auto& b : blocks) {
    BlockSummary s;
    s.k = b.k;
    s.lo = b.lo;
    s.hi = b.hi;
    std::set<std::int64_t> primes;
    for (const auto& ideal : b.ideals) {
      primes.insert(ideal.p);
      ++s.ideals;
      switch (ideal.split_type) {
        case SplitType::split: ++s.split; break;
        case SplitType::inert: ++s.inert; break;
        case SplitType::ramified: ++s.ramified; break;
      }
    }
    s.primes = static_cast<std::int64_t>(primes.size());
    if (s.ideals > 0) empty = false;
    rep.blocks.push_back(s);
  }
  rep.theorem2_exponent = theorem2_exponent(blocks, params);
  rep.exp_theorem2_exponent = std::exp(rep.theorem2_exponent);
  rep.euler_ratio = euler_ratio(blocks);

  const auto sums = afe_sums(g, t_cut);
  if (const auto best = family_max(g, sums)) rep.m_d = best->m_d;

  try {
    const auto inst = build_instance(g, params, std::move(blocks), sums);
    const auto c = check_constraints(g, inst);
    ResonateQuantitiesReport q;
    q.m_size = c.m_size;
    q.v = inst.q.v;
    q.w = inst.q.w;
    if (c.w_positive) q.v_over_w = c.v_over_w;
    q.v0 = inst.q.v0;
    q.w0 = inst.q.w0;
    q.e0 = inst.q.e0;
    q.v0_all_characters = inst.q.v0_all_characters;
    q.e0_divisor_majorant = c.e0_divisor_majorant;
    if (std::isfinite(c.tcc_ratio)) q.tcc_ratio = c.tcc_ratio;
    q.tcc_ok = c.tcc_ok;
    if (std::isfinite(c.e0_over_w0)) q.e0_over_w0 = c.e0_over_w0;
    q.surrogate_ok = c.surrogate_ok;
    q.size_bound = c.size_bound;
    q.size_bound_ok = c.size_bound_ok;
    q.v0_ge_w0 = c.v0_ge_w0;
    q.certified = c.certified;
    q.ramified_ideals = c.ramified_ideals;
    q.ramified_exponent_share = c.ramified_exponent_share;
    rep.quantities = q;
    rep.status = empty ? "empty_prime_set" : "ok";
  } catch (const SizeCapExceeded& e) {
    rep.status = "size_cap_exceeded";
    rep.log_m_set_size = e.log_true_size();
  }
  return rep;
}

}  // namespace cgl
