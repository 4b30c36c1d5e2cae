#include "cgl/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cgl/arith.hpp"

namespace cgl::oracle {

long double w_quadrature(long double x) {
  using boost::math::quadrature::gauss_kronrod;
  const long double lo = std::sqrt(x);
  auto integrand = [](long double s) { return std::exp(-s * s); };
  long double err = 0;
  const long double integral = gauss_kronrod<long double, 61>::integrate(
      integrand, lo, std::numeric_limits<long double>::infinity(), 20, 1e-17L, &err);
  return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * integral;
}

double class_number_formula(std::int64_t d_abs, std::int64_t terms) {
  // (-D/n) is periodic mod D for fundamental -D; tabulate one period.
  std::vector<int> chi(static_cast<std::size_t>(d_abs));
  for (std::int64_t r = 0; r < d_abs; ++r) chi[r] = kronecker(-d_abs, r);
  long double l1 = 0.0L;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const int c = chi[n % d_abs];
    if (c != 0) l1 += static_cast<long double>(c) / static_cast<long double>(n);
  }
  const long double w = d_abs == 3 ? 6.0L : (d_abs == 4 ? 4.0L : 2.0L);
  return static_cast<double>(w * std::sqrt(static_cast<long double>(d_abs)) /
                             (2.0L * std::numbers::pi_v<long double>)*l1);
}

std::int64_t lambda_by_divisors(std::int64_t d_abs, std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t t = 1; t <= n; ++t) {
    if (n % t == 0) s += kronecker(-d_abs, t);
  }
  return s;
}

std::int64_t genus_coefficient(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t u = 1; u <= n; ++u) {
    if (n % u == 0) s += kronecker(d1, u) * kronecker(d2, n / u);
  }
  return s;
}

double genus_central_value(std::int64_t d_abs, std::int64_t d1, std::int64_t d2, std::int64_t n_max) {
  const long double scale = 2.0L * std::numbers::pi_v<long double> / std::sqrt(static_cast<long double>(d_abs));
  long double s = 0.0L;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t a = genus_coefficient(d1, d2, n);
    if (a == 0) continue;
    const long double nl = static_cast<long double>(n);
    s += static_cast<long double>(a) * std::erfc(std::sqrt(scale * nl)) / std::sqrt(nl);
  }
  return static_cast<double>(2.0L * s);
}

double afe_tail_brute(std::int64_t d_abs, std::int64_t n_max, std::int64_t n_stop) {
  const long double scale = 2.0L * std::numbers::pi_v<long double> / std::sqrt(static_cast<long double>(d_abs));
  long double s = 0.0L;
  for (std::int64_t n = n_max + 1; n <= n_stop; ++n) {
    std::int64_t tau = 0;
    for (std::int64_t t = 1; t * t <= n; ++t) {
      if (n % t == 0) tau += (t * t == n) ? 1 : 2;
    }
    const long double nl = static_cast<long double>(n);
    s += static_cast<long double>(tau) * std::erfc(std::sqrt(scale * nl)) / std::sqrt(nl);
  }
  return static_cast<double>(2.0L * s);
}

std::int64_t class_number_by_search(std::int64_t d_abs) {
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= d_abs; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      if ((b * b + d_abs) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b + d_abs) / (4 * a);
      if (c < a) continue;
      if (b == -a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

double theorem2_exponent_quad(std::span<const std::int64_t> primes, std::span<const std::int64_t> norms,
                              double log_m) {
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  const Quad lm = log_m;
  const Quad l2 = log(lm);
  const Quad l3 = log(l2);
  Quad s = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Quad p = primes[i];
    s += 1 / (sqrt(Quad(norms[i])) * sqrt(p) * (log(p) - l2 - l3));
  }
  return static_cast<double>(sqrt(lm * l2 / l3) * s);
}

double prime_density_integral(double lo, double hi, double c) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(hi > lo)) return 0.0;
  auto integrand = [c](double x) {
    const double l = std::log(x);
    return 1.0 / (x * l * (l - c));
  };
  double err = 0;
  return gauss_kronrod<double, 61>::integrate(integrand, lo, hi, 30, 1e-14, &err);
}

}  // namespace cgl::oracle
