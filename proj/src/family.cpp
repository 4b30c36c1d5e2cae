#include "cgl/family.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "cgl/arith.hpp"
#include "cgl/errors.hpp"
#include "cgl/summation.hpp"

namespace cgl {

namespace {

void require_prime(std::int64_t p, const char* who) {
  if (p < 2 || !sieve_covering(static_cast<std::uint64_t>(p))->is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::int64_t crivo_sum(std::int64_t x, std::int64_t p) {
  require_prime(p, "crivo_sum");
  if (p == 2) throw DomainError("crivo_sum: p must be odd");
  std::int64_t s = 0;
  for (const auto& d : fundamental_discriminants(x)) s += kronecker(d.signed_value(), p);
  return s;
}

double split_fraction(std::int64_t x, std::int64_t p) {
  require_prime(p, "split_fraction");
  const auto family = fundamental_discriminants(x);
  std::int64_t twice = 0;
  for (const auto& d : family) {
    if (d.value() % p != 0) twice += 1 + kronecker(d.signed_value(), p);
  }
  return static_cast<double>(twice) / (2.0 * static_cast<double>(family.size()));
}

PrimeSumCheck prime_sum_integral_check(const ResonatorParams& params) {
  params.validate();
  PrimeSumCheck out;
  const int k_total = params.block_count();
  if (k_total <= 1) return out;
  const double c = params.log2_m() + params.log3_m();
  out.lo = std::exp(1.0) * params.scale();
  out.hi = std::exp(static_cast<double>(k_total)) * params.scale();

  CompensatedSum<double> acc;
  for (auto p : primes_in(out.lo, out.hi)) {
    const auto pd = static_cast<double>(p);
    acc.add(1.0 / (pd * (std::log(pd) - c)));
  }
  out.prime_sum = acc.value();

  // With t = log x the integrand becomes 1 / (t (t - c)), smooth on the range.
  auto f = [c](double t) { return 1.0 / (t * (t - c)); };
  out.integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, std::log(out.lo), std::log(out.hi), 15,
                                                                               1e-14);
  const auto k = static_cast<double>(k_total);
  out.analytic = std::log(k * (c + 1.0) / (c + k)) / c;
  out.closed_form = params.gamma * params.log3_m() / params.log2_m();
  return out;
}

std::optional<double> theorem1_bound(std::int64_t x, double delta) {
  const auto xd = static_cast<double>(x);
  if (!(xd > 1.0) || !(std::log(xd) > 1.0)) return std::nullopt;
  const double l1 = std::log(xd);
  const double l2 = std::log(l1);
  const double l3 = std::log(l2);
  if (!(l3 > 0.0)) return std::nullopt;
  return std::exp(delta * std::sqrt(l1 * l3 / l2));
}

FamilyRow family_row(const Discriminant& d, const FamilyOptions& opts) {
  FamilyRow row;
  row.d = d.value();
  const auto g = class_group(d);
  row.h = g.h();
  if (g.h() < 2) {
    row.status = "trivial_class_group";
    return row;
  }
  const auto sums = afe_sums(g, opts.t_cut);
  const auto best = family_max(g, sums);
  row.m_d = best->m_d;
  row.argmax_char = best->argmax_index;
  row.status = "ok";
  if (opts.resonate) {
    try {
      const auto inst = build_instance(g, *opts.resonate, sums);
      const auto rep = check_constraints(g, inst);
      if (rep.w_positive) row.v_over_w = rep.v_over_w;
      if (!rep.certified) row.status = "uncertified";
    } catch (const SizeCapExceeded&) {
      row.status = "size_cap_exceeded";
    }
  }
  return row;
}

FamilyReport run_family(const FamilyOptions& opts, const std::function<void(const FamilyRow&)>& on_row) {
  if (opts.threads < 1) throw DomainError("run_family: thread count must be >= 1");
  if (opts.resonate) opts.resonate->validate();
  if (opts.x < 3) throw DomainError("run_family: x must be >= 3");

  // Guardrail before any work: h_D is at most about sqrt(D) log D / pi. The
  // scan stops at the first D past the limit, so huge x fails fast.
  double work = 0.0;
  for (std::int64_t d = opts.x; d <= 2 * opts.x; ++d) {
    if (!is_fundamental(-d)) continue;
    const auto dv = static_cast<double>(d);
    work += dv * std::log(dv) / std::numbers::pi;
    if (work > opts.work_limit) {
      throw CapacityError("run_family: work guardrail exceeded at D = " + std::to_string(d));
    }
  }
  const auto family = fundamental_discriminants(opts.x);

  FamilyReport rep;
  rep.x = opts.x;
  rep.n_x = static_cast<std::int64_t>(family.size());
  rep.delta = opts.delta;
  rep.rows.resize(family.size());

  std::vector<std::exception_ptr> errors(family.size());
  std::vector<char> done(family.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= family.size() || stop.load()) return;
      FamilyRow row;
      std::exception_ptr err;
      try {
        row = family_row(family[i], opts);
      } catch (const CapacityError& e) {
        err = std::make_exception_ptr(CapacityError("D = " + std::to_string(family[i].value()) + ": " + e.what()));
      } catch (const DomainError& e) {
        err = std::make_exception_ptr(DomainError("D = " + std::to_string(family[i].value()) + ": " + e.what()));
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        rep.rows[i] = std::move(row);
        errors[i] = err;
        done[i] = 1;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const unsigned n_threads = std::min<unsigned>(opts.threads, std::max<std::size_t>(family.size(), 1));
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < family.size() && !failure; ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[i] != 0; });
    if (errors[i]) {
      failure = errors[i];
      stop = true;
      break;
    }
    const FamilyRow row = rep.rows[i];
    lock.unlock();
    if (on_row) on_row(row);
  }
  stop = true;
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CompensatedSum<double> log_sum;
  bool positive = true;
  for (const auto& row : rep.rows) {
    if (!(row.m_d > 0.0)) positive = false;
    else log_sum.add(std::log(row.m_d));
  }
  if (positive && rep.n_x > 0) rep.geo_mean = std::exp(log_sum.value() / static_cast<double>(rep.n_x));
  rep.theorem1_bound = theorem1_bound(opts.x, opts.delta);
  if (rep.geo_mean && rep.theorem1_bound) rep.ratio = *rep.geo_mean / *rep.theorem1_bound;

  for (std::int64_t p = 3; p <= opts.prime_max; p += 2) {
    if (!sieve_covering(static_cast<std::uint64_t>(p))->is_prime(static_cast<std::uint64_t>(p))) continue;
    rep.crivo.push_back({p, crivo_sum(opts.x, p), split_fraction(opts.x, p)});
  }
  return rep;
}

}  // namespace cgl
