#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "cgl/checks.hpp"
#include "cgl/errors.hpp"
#include "cgl/family.hpp"
#include "cgl/oracles.hpp"
#include "cgl/serialize.hpp"
#include "cgl/special.hpp"

namespace cgl::checks {

namespace {

// Counts checks and keeps the first failure for the report line.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  bool expect(bool ok, const std::function<std::string()>& why) {
    ++checked_;
    if (!ok) {
      if (failed_ == 0) first_ = why();
      ++failed_;
    }
    return ok;
  }

  void note(std::string s) { notes_ += (notes_.empty() ? "" : "; ") + std::move(s); }

  CheckResult result() const {
    std::ostringstream d;
    if (failed_ == 0) {
      d << checked_ << " checks";
    } else {
      d << failed_ << " of " << checked_ << " failed, first: " << first_;
    }
    if (!notes_.empty()) d << "; " << notes_;
    return {name_, failed_ == 0 && checked_ > 0, d.str()};
  }

 private:
  std::string name_;
  std::int64_t checked_ = 0;
  std::int64_t failed_ = 0;
  std::string first_;
  std::string notes_;
};

std::string num(double x) { return format_double(x); }

std::vector<Discriminant> fundamentals(std::int64_t lo, std::int64_t hi, std::int64_t step = 1) {
  std::vector<Discriminant> out;
  for (std::int64_t d = lo; d <= hi; d += step) {
    if (d >= 3 && is_fundamental(-d)) out.emplace_back(d);
  }
  return out;
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> l_values(const GroupStructure& g, const AfeSums& sums) {
  std::vector<double> l(static_cast<std::size_t>(g.h()), 0.0);
  const auto values = central_values(g, sums);
  for (std::size_t k = 1; k < l.size(); ++k) l[k] = values[k - 1].value;
  return l;
}

// Keeps at most `per_block` ideals in each block.
std::vector<PrimeBlock> cap_blocks(std::vector<PrimeBlock> blocks, std::size_t per_block) {
  for (auto& b : blocks) {
    const std::size_t n = std::min(per_block, b.ideals.size());
    b.ideals.resize(n);
    b.f_values.resize(n);
  }
  return blocks;
}

std::vector<PrimeBlock> first_ideals(std::vector<PrimeBlock> blocks, std::size_t keep) {
  for (auto& b : blocks) {
    const std::size_t n = std::min(keep, b.ideals.size());
    b.ideals.resize(n);
    b.f_values.resize(n);
    keep -= n;
  }
  return blocks;
}

bool is_odd_prime(std::int64_t p) {
  return p > 2 && sieve_covering(static_cast<std::uint64_t>(p))->is_prime(static_cast<std::uint64_t>(p));
}

}  // namespace

CheckResult smoothing_function() {
  Tally t("smoothing function W");
  t.expect(w_value(0.0) == 1.0, [] { return "W(0) = " + num(w_value(0.0)); });
  double prev = w_value(0.0);
  for (int i = 1; i <= 5000; ++i) {
    const double x = 0.01 * i;
    const double w = w_value(x);
    t.expect(w < prev, [&] { return "not strictly decreasing at x = " + num(x); });
    if (x >= 1.0) t.expect(w <= std::exp(-x) + 1e-12, [&] { return "W(x) > e^-x at x = " + num(x); });
    prev = w;
  }
  for (int i = 0; i < 20; ++i) {
    const double x = 0.05 + 0.0125 * i * i * i;
    const double w = w_value(x);
    const auto quad = static_cast<double>(oracle::w_quadrature(static_cast<long double>(x)));
    t.expect(std::abs(w - std::erfc(std::sqrt(x))) <= 1e-12, [&] { return "W != erfc(sqrt x) at " + num(x); });
    t.expect(std::abs(w - quad) <= 1e-12, [&] { return "W vs quadrature " + num(w - quad) + " at " + num(x); });
  }
  return t.result();
}

CheckResult afe_tail_majorant(std::uint64_t seed, int samples) {
  Tally t("AFE tail bound dominates the brute-force tail");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(3, 20000);
  int done = 0;
  while (done < samples) {
    const std::int64_t dv = pick(rng);
    if (!is_fundamental(-dv)) continue;
    const Discriminant d(dv);
    const auto n_max = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(dv)))) + 1;
    const double bound = afe_tail_bound(d, n_max);
    const double brute = oracle::afe_tail_brute(dv, n_max, 200 * n_max);
    t.expect(brute <= bound, [&] { return "D = " + std::to_string(dv) + ": " + num(brute) + " > " + num(bound); });
    ++done;
  }
  return t.result();
}

CheckResult arith_basics(std::int64_t x_max) {
  Tally t("Kronecker symbol and fundamental discriminants");
  t.expect(kronecker(-23, 2) == 1 && kronecker(-23, 3) == 1 && kronecker(-23, 5) == -1 && kronecker(-4, 3) == -1,
           [] { return "Kronecker examples"; });
  for (std::int64_t p : {3, 5, 7, 11, 13, 101, 197}) {
    for (std::int64_t a = -300; a <= 300; ++a) {
      std::int64_t r = ((a % p) + p) % p;
      std::int64_t e = 1, base = r;
      for (std::int64_t k = (p - 1) / 2; k > 0; k >>= 1) {
        if (k & 1) e = e * base % p;
        base = base * base % p;
      }
      const int euler = r == 0 ? 0 : (e == 1 ? 1 : -1);
      t.expect(kronecker(a, p) == euler, [&] { return "Euler criterion a = " + std::to_string(a); });
    }
  }
  for (std::int64_t x = 1000; x <= x_max; x *= 10) {
    const auto family = fundamental_discriminants(x);
    // Both signs together have density 6/pi^2, the negative ones half of it.
    auto positive_fundamental = [](std::int64_t d) {
      if (d % 4 == 1) return is_squarefree(static_cast<std::uint64_t>(d));
      if (d % 4 != 0) return false;
      const std::int64_t m = d / 4;
      return (m % 4 == 2 || m % 4 == 3) && is_squarefree(static_cast<std::uint64_t>(m));
    };
    auto both = static_cast<std::int64_t>(family.size());
    for (std::int64_t d = x; d <= 2 * x; ++d) both += positive_fundamental(d) ? 1 : 0;
    const double density = static_cast<double>(both) / static_cast<double>(x);
    const double negative = static_cast<double>(family.size()) / static_cast<double>(x);
    t.expect(density >= 0.55 && density <= 0.65, [&] { return "density " + num(density) + " at X = " + std::to_string(x); });
    t.expect(negative >= 0.275 && negative <= 0.325, [&] { return "negative density " + num(negative); });
    for (const auto& d : family) {
      t.expect(d.value() >= x && d.value() <= 2 * x, [&] { return "range"; });
    }
  }
  return t.result();
}

CheckResult class_numbers(std::int64_t d_max) {
  Tally t("class numbers against the analytic class number formula");
  for (const auto& d : fundamentals(3, d_max)) {
    const auto dv = d.value();
    const auto g = class_group(d);
    const double formula = oracle::class_number_formula(dv, 32 * dv);
    t.expect(g.h() == std::llround(formula),
             [&] { return "D = " + std::to_string(dv) + ": h = " + std::to_string(g.h()) + ", formula " + num(formula); });
    std::int64_t prod = 1;
    for (auto o : g.cyclic_orders()) prod *= o;
    t.expect(prod == g.h(), [&] { return "D = " + std::to_string(dv) + ": invariant factors"; });
  }
  return t.result();
}

CheckResult group_axioms(std::int64_t d_max) {
  Tally t("group axioms under composition of forms");
  for (const auto& d : fundamentals(3, d_max)) {
    const auto g = class_group(d);
    const auto& cls = g.classes();
    const auto e = principal_class(d);
    const auto name = [&] { return "D = " + std::to_string(d.value()); };
    for (std::size_t i = 0; i < cls.size(); ++i) {
      t.expect(compose(cls[i], e) == cls[i], name);
      t.expect(compose(cls[i], inverse(cls[i])) == e, name);
      for (std::size_t j = 0; j < cls.size(); ++j) {
        const auto ij = compose(cls[i], cls[j]);
        t.expect(ij == compose(cls[j], cls[i]), name);
        t.expect(cls[g.multiply(i, j)] == ij, name);
        for (std::size_t k = 0; k < cls.size(); ++k) {
          t.expect(compose(ij, cls[k]) == compose(cls[i], compose(cls[j], cls[k])), name);
        }
      }
    }
  }
  return t.result();
}

CheckResult character_orthogonality(std::int64_t d_max) {
  Tally t("character table is unitary");
  for (const auto& d : fundamentals(3, d_max)) {
    const auto g = class_group(d);
    const auto h = static_cast<Eigen::Index>(g.h());
    Eigen::MatrixXcd table(h, h);
    for (Eigen::Index k = 0; k < h; ++k) {
      const auto chi = g.character_at(static_cast<std::size_t>(k));
      for (Eigen::Index i = 0; i < h; ++i) table(k, i) = g.character_value(chi, static_cast<std::size_t>(i));
    }
    const double err = (table * table.adjoint() - static_cast<double>(h) * Eigen::MatrixXcd::Identity(h, h)).norm();
    t.expect(err <= 1e-9 * static_cast<double>(h), [&] { return "D = " + std::to_string(d.value()) + ": " + num(err); });
  }
  return t.result();
}

CheckResult ideal_count_identities(std::int64_t d_max, std::int64_t n_max) {
  Tally t("ideal counts: partition of lambda and inverse symmetry");
  for (const auto& d : fundamentals(3, d_max)) {
    const auto g = class_group(d);
    const ClassCountTable table(g, n_max);
    const auto lambda = lambda_table(d, n_max);
    const auto h = static_cast<std::size_t>(g.h());
    for (std::int64_t n = 1; n <= n_max; ++n) {
      std::int64_t total = 0;
      for (std::size_t a = 0; a < h; ++a) {
        total += table(a, n);
        if (table(a, n) != table(g.inverse_index(a), n)) {
          t.expect(false, [&] { return "D = " + std::to_string(d.value()) + ", n = " + std::to_string(n) + ": c_A != c_A^-1"; });
        }
      }
      t.expect(total == lambda[static_cast<std::size_t>(n)],
               [&] { return "D = " + std::to_string(d.value()) + ", n = " + std::to_string(n); });
    }
  }
  return t.result();
}

CheckResult central_integrity(std::int64_t d_max) {
  Tally t("central values: reality, conjugate symmetry, truncation agreement");
  for (const auto& d : fundamentals(3, d_max)) {
    const auto g = class_group(d);
    if (g.h() < 2) continue;
    const auto s30 = afe_sums(g, 30.0);
    const auto s40 = afe_sums(g, 40.0);
    const auto s60 = afe_sums(g, 60.0);
    const auto name = [&](const char* what) { return "D = " + std::to_string(d.value()) + ": " + what; };
    for (std::size_t k = 1; k < static_cast<std::size_t>(g.h()); ++k) {
      const auto chi = g.character_at(k);
      const auto a = central_value(g, s30, chi);
      const auto b = central_value(g, s40, chi);
      const auto c = central_value(g, s60, chi);
      const auto bc = central_value(g, s40, g.conjugate(chi));
      t.expect(std::abs(b.imag_part) <= 1e-8, [&] { return name("imaginary part"); });
      t.expect(std::abs(b.value - bc.value) <= 1e-8, [&] { return name("conjugate"); });
      t.expect(std::abs(a.value - b.value) <= a.trunc_error + b.trunc_error, [&] { return name("t_cut 30/40"); });
      t.expect(std::abs(b.value - c.value) <= b.trunc_error + c.trunc_error, [&] { return name("t_cut 40/60"); });
      t.expect(std::abs(a.value - c.value) <= a.trunc_error + c.trunc_error, [&] { return name("t_cut 30/60"); });
    }
  }
  return t.result();
}

CheckResult genus_factorization(std::int64_t n_max) {
  Tally t("genus characters factor into two Dirichlet series");
  struct Case {
    std::int64_t d, d1, d2;
  };
  for (const auto& [dv, d1, d2] : {Case{15, 5, -3}, Case{20, 5, -4}, Case{24, 8, -3}}) {
    const Discriminant d(dv);
    const auto g = class_group(d);
    const auto chi = g.character_at(1);
    const ClassCountTable table(g, n_max);
    std::int64_t coprime = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      if (std::gcd(n, dv) != 1) continue;
      ++coprime;
      double a = 0.0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(g.h()); ++i) {
        a += g.character_value(chi, i).real() * static_cast<double>(table(i, n));
      }
      const auto expect = oracle::genus_coefficient(d1, d2, n);
      t.expect(std::llround(a) == expect && std::abs(a - static_cast<double>(expect)) < 1e-9, [&] {
        return "D = " + std::to_string(dv) + ", n = " + std::to_string(n);
      });
    }
    const auto cv = central_value(g, chi);
    const double ref = oracle::genus_central_value(dv, d1, d2, cv.n_max);
    t.expect(std::abs(cv.value - ref) <= 1e-8, [&] { return "D = " + std::to_string(dv) + " value " + num(cv.value - ref); });
    t.note("D = " + std::to_string(dv) + ": " + std::to_string(coprime) + " coprime n");
  }
  return t.result();
}

CheckResult majorant_bound(std::int64_t d_lo, std::int64_t d_hi) {
  Tally t("majorant sum S(D) <= 2 D^(1/4) log D");
  double worst = 0.0;
  for (const auto& d : fundamentals(d_lo, d_hi)) {
    const auto dv = static_cast<double>(d.value());
    const auto s = majorant_sum(d);
    const double bound = 2.0 * std::pow(dv, 0.25) * std::log(dv);
    worst = std::max(worst, (s.value + s.error) / bound);
    t.expect(s.value + s.error <= bound, [&] { return "D = " + std::to_string(d.value()) + ": " + num(s.value); });
  }
  t.note("max S/bound = " + num(worst));
  return t.result();
}

CheckResult resonance_keystone(std::uint64_t seed, int discriminants, int trials) {
  Tally t("M_D >= V/W for random resonators");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> pick(20, 5000);
  std::set<std::int64_t> used;
  while (static_cast<int>(used.size()) < discriminants) {
    const auto dv = pick(rng);
    if (used.contains(dv) || !is_fundamental(-dv)) continue;
    const auto g = class_group(Discriminant(dv));
    if (g.h() < 2 || g.h() > 20) continue;
    used.insert(dv);
    const auto sums = afe_sums(g);
    const double m_d = family_max(g, sums)->m_d;
    const auto l = l_values(g, sums);
    for (int trial = 0; trial < trials; ++trial) {
      Eigen::VectorXcd r_chi(g.h());
      if (trial % 2 == 0) {
        Eigen::VectorXd r(g.h());
        for (auto& x : r) x = u(rng);
        r_chi = character_transform(g, r);
      } else {
        for (auto& x : r_chi) x = {u(rng) - 0.5, u(rng) - 0.5};
      }
      const auto vw = resonance_ratio(l, r_chi);
      if (!(vw.w > 0.0)) continue;
      t.expect(m_d >= vw.ratio() - 1e-6, [&] { return "D = " + std::to_string(dv) + ": V/W = " + num(vw.ratio()); });
    }
  }
  std::string ds;
  for (auto d : used) ds += (ds.empty() ? "" : " ") + std::to_string(d);
  t.note("D in {" + ds + "}");
  return t.result();
}

CheckResult sums_as_products(std::uint64_t seed, int configurations, int ideals) {
  Tally t("divisor pair sums factor as Euler products");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(100, 100000);
  std::uniform_real_distribution<double> log_m(6.0, 30.0);
  int made = 0;
  while (made < configurations) {
    const auto dv = pick(rng);
    if (!is_fundamental(-dv)) continue;
    ResonatorParams params;
    params.log_m = log_m(rng);
    params.k_blocks = 2 + static_cast<int>(rng() % 2);
    const auto base = first_ideals(build_blocks(Discriminant(dv), params), static_cast<std::size_t>(ideals));
    const auto flat = flatten(base);
    if (flat.p.size() < static_cast<std::size_t>(ideals)) continue;
    ++made;
    const std::size_t n = flat.p.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<PrimeBlock> sub = base;
      for (auto& b : sub) {
        b.ideals.clear();
        b.f_values.clear();
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          auto& b = sub[static_cast<std::size_t>(flat.block[i])];
          b.ideals.push_back(*flat.ideal[i]);
          b.f_values.push_back(flat.f[i]);
        }
      }
      const auto m = enumerate_m_set(sub, std::vector<double>(sub.size(), static_cast<double>(n) + 1.0), 1u << n);
      const double brute = divisor_pair_sum(sub, m) / f_square_sum(sub, m);
      t.expect(rel_close(brute, euler_ratio(sub), 1e-10), [&] {
        return "D = " + std::to_string(dv) + ", subset " + std::to_string(mask) + ": " + num(brute) + " vs " +
               num(euler_ratio(sub));
      });
    }
  }
  return t.result();
}

CheckResult m_set_structure() {
  Tally t("resonator set: divisor-closed, block bounds, |M| <= M");
  int configs = 0;
  for (std::int64_t dv : {23, 4003}) {
    for (double log_m : {10.0, 14.0, 20.0, 30.0}) {
      for (int k = 2; k <= 4; ++k) {
        ResonatorParams params;
        params.log_m = log_m;
        params.k_blocks = k;
        const std::size_t per_block = 14 / static_cast<std::size_t>(k - 1);
        const auto blocks = cap_blocks(build_blocks(Discriminant(dv), params), per_block);
        const auto m_set = enumerate_m_set(blocks, params);
        const auto flat = flatten(blocks);
        const auto name = [&] {
          return "D = " + std::to_string(dv) + ", log M = " + num(log_m) + ", K = " + std::to_string(k);
        };
        ++configs;
        std::set<std::vector<std::uint32_t>> members;
        for (const auto& m : m_set) members.insert(m.primes);
        t.expect(members.size() == m_set.size(), name);
        for (const auto& m : m_set) {
          std::vector<int> counts(blocks.size(), 0);
          for (auto i : m.primes) ++counts[static_cast<std::size_t>(flat.block[i])];
          for (std::size_t b = 0; b < blocks.size(); ++b) {
            t.expect(counts[b] < params.count_bound(blocks[b].k), name);
          }
          for (std::size_t drop = 0; drop < m.primes.size(); ++drop) {
            auto sub = m.primes;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            t.expect(members.contains(sub), name);
          }
        }
        // Every admissible subset must be present: compare with the count.
        std::vector<double> bounds;
        for (const auto& b : blocks) bounds.push_back(params.count_bound(b.k));
        t.expect(std::abs(std::log(static_cast<double>(m_set.size())) - log_m_set_size(blocks, bounds)) < 1e-9, name);
        t.expect(std::log(static_cast<double>(m_set.size())) <= log_m, name);
      }
    }
  }
  t.note(std::to_string(configs) + " configurations");
  return t.result();
}

CheckResult resonator_chain(std::int64_t d_lo, std::int64_t d_hi, std::int64_t step) {
  Tally t("resonator chain: W <= W0, V = V0 - E0, Cauchy-Schwarz, truncation, V0 vs W0");
  ResonatorParams params;
  params.log_m = 10.0;
  params.k_blocks = 2;
  for (const auto& d : fundamentals(d_lo, d_hi, step)) {
    const auto g = class_group(d);
    if (g.h() < 2) continue;
    const auto sums = afe_sums(g);
    const auto inst = build_instance(g, params, first_ideals(build_blocks(d, params), 8), sums);
    const auto& q = inst.q;
    const auto name = [&](const char* what) { return "D = " + std::to_string(d.value()) + ": " + what; };
    t.expect(q.w <= q.w0 * (1 + 1e-12), [&] { return name("W > W0"); });
    t.expect(rel_close(q.v, q.v0_all_characters - q.e0, 1e-6), [&] { return name("V != V0 - E0"); });
    const double dv = static_cast<double>(d.value());
    const double cs = 2.0 * static_cast<double>(g.h()) *
                      divisor_pair_sum(inst.blocks, inst.m_set, std::numeric_limits<double>::infinity(), d.value());
    t.expect(cs <= q.v0 * (1 + 1e-6), [&] { return name("Cauchy-Schwarz"); });
    const double full = divisor_pair_sum(inst.blocks, inst.m_set);
    const double far = full - divisor_pair_sum(inst.blocks, inst.m_set, std::sqrt(dv));
    t.expect(far <= truncation_majorant(inst.blocks, inst.m_set, d.value()) * (1 + 1e-12),
             [&] { return name("truncation majorant"); });
    t.expect(q.v0 >= 2.0 * w_value(2.0 * std::numbers::pi / std::sqrt(dv)) * q.w0 * (1 - 1e-9),
             [&] { return name("V0 < 2 W(2 pi / sqrt D) W0"); });
    if (d.value() >= 763) t.expect(q.v0 >= q.w0, [&] { return name("V0 < W0"); });
    const auto rep = check_constraints(g, inst);
    t.expect(rep.certified, [&] { return name("not certified"); });

    // Constraining the set removes pairs.
    const auto unconstrained = enumerate_m_set(inst.blocks, std::vector<double>(inst.blocks.size(), 100.0), 1u << 12);
    const auto tight = enumerate_m_set(inst.blocks, std::vector<double>(inst.blocks.size(), 3.0), 1u << 12);
    t.expect(divisor_pair_sum(inst.blocks, tight) <= divisor_pair_sum(inst.blocks, unconstrained),
             [&] { return name("constrained > unconstrained"); });
  }
  return t.result();
}

CheckResult crivo_bound(const std::vector<std::int64_t>& xs, std::int64_t p_max) {
  Tally t("crivo sums within 32 p sqrt(X)");
  double worst = 0.0;
  for (auto x : xs) {
    const auto n_x = static_cast<double>(fundamental_discriminants(x).size());
    const double sx = std::sqrt(static_cast<double>(x));
    for (std::int64_t p = 3; p <= p_max; p += 2) {
      if (!is_odd_prime(p)) continue;
      const auto s = static_cast<double>(crivo_sum(x, p));
      const auto pd = static_cast<double>(p);
      worst = std::max(worst, std::abs(s) / (pd * sx));
      t.expect(std::abs(s) <= 32.0 * pd * sx, [&] { return "x = " + std::to_string(x) + ", p = " + std::to_string(p); });
      const double avg = (n_x + s) / n_x;
      t.expect(std::abs(avg - 1.0) <= 32.0 * pd / sx,
               [&] { return "split average x = " + std::to_string(x) + ", p = " + std::to_string(p); });
    }
  }
  t.note("max |sum| / (p sqrt X) = " + num(worst));
  return t.result();
}

CheckResult prime_integral() {
  Tally t("prime sum against the integral at log M = e^8, gamma = 1/3");
  ResonatorParams params;
  params.log_m = std::exp(8.0);
  params.gamma = 1.0 / 3.0;
  const auto chk = prime_sum_integral_check(params);
  const double c = params.log2_m() + params.log3_m();
  const double closed = std::log(2.0 * (c + 1.0) / (c + 2.0)) / c;
  const double ratio = chk.prime_sum / chk.integral;
  t.expect(ratio >= 0.9 && ratio <= 1.1, [&] { return "prime_sum / integral = " + num(ratio); });
  t.expect(std::abs(chk.integral - closed) <= 1e-9, [&] { return "integral - closed form = " + num(chk.integral - closed); });
  const double oracle_int = oracle::prime_density_integral(chk.lo, chk.hi, c);
  t.expect(std::abs(oracle_int - closed) <= 1e-9, [&] { return "x-space quadrature - closed form = " + num(oracle_int - closed); });
  t.note("ratio " + num(ratio) + ", closed form gamma log3M/log2M = " + num(chk.closed_form));
  return t.result();
}

CheckResult family_reproducible(std::int64_t x, double delta) {
  Tally t("family run is reproducible");
  std::string csv[2];
  std::string summary[2];
  FamilyReport last;
  for (int run = 0; run < 2; ++run) {
    FamilyOptions opts;
    opts.x = x;
    opts.delta = delta;
    opts.threads = static_cast<unsigned>(run + 1);
    opts.prime_max = 50;
    csv[run] = family_csv_header() + "\n";
    last = run_family(opts, [&](const FamilyRow& r) { csv[run] += family_csv_row(r) + "\n"; });
    summary[run] = family_summary(last).dump();
  }
  t.expect(csv[0] == csv[1], [] { return "CSV differs between runs"; });
  t.expect(summary[0] == summary[1], [] { return "JSON differs between runs"; });
  t.expect(static_cast<std::int64_t>(last.rows.size()) == last.n_x, [] { return "row count"; });
  const auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string("null"); };
  t.note("N_X = " + std::to_string(last.n_x) + ", geo_mean = " + opt(last.geo_mean) +
         ", theorem1_bound = " + opt(last.theorem1_bound) + ", ratio = " + opt(last.ratio));
  return t.result();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith",    "special",   "classgroup", "ideals",
                                              "central",  "resonator", "family",     "all"};
  return names;
}

VerifyReport run_suite(std::string_view suite, std::uint64_t seed) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport rep;
  rep.suite = std::string(suite);
  rep.seed = seed;
  const bool all = suite == "all";
  auto add = [&](CheckResult r) { rep.results.push_back(std::move(r)); };
  if (all || suite == "arith") add(arith_basics(10000));
  if (all || suite == "special") {
    add(smoothing_function());
    add(afe_tail_majorant(seed, 20));
  }
  if (all || suite == "classgroup") {
    add(class_numbers(2000));
    add(group_axioms(200));
    add(character_orthogonality(500));
  }
  if (all || suite == "ideals") add(ideal_count_identities(200, 2000));
  if (all || suite == "central") {
    add(central_integrity(500));
    add(genus_factorization(2000));
    add(majorant_bound(50, 2000));
  }
  if (all || suite == "resonator") {
    add(resonance_keystone(seed, 5, 50));
    add(sums_as_products(seed, 2, 10));
    add(m_set_structure());
    add(resonator_chain(100, 2000, 53));
  }
  if (all || suite == "family") {
    add(crivo_bound({100, 1000, 10000}, 100));
    add(prime_integral());
    add(family_reproducible(500, 0.24));
  }
  rep.passed = std::all_of(rep.results.begin(), rep.results.end(), [](const CheckResult& r) { return r.passed; });
  return rep;
}

}  // namespace cgl::checks
