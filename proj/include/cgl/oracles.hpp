#pragma once

// Independent reference computations used by the invariant suites and the
// tests. None of these share code paths with the routines they check.

#include <cstdint>
#include <span>
#include <vector>

namespace cgl::oracle {

/// (2/sqrt(pi)) int_{sqrt(x)}^inf e^{-s^2} ds by adaptive Gauss-Kronrod
/// quadrature in extended precision.
long double w_quadrature(long double x);

/// w_D sqrt(D) / (2 pi) * L(1, chi_{-D}), the character sum taken term by
/// term over n = 1..terms.
double class_number_formula(std::int64_t d_abs, std::int64_t terms);

/// sum_{t | n} (-D/t) by literal divisor enumeration.
std::int64_t lambda_by_divisors(std::int64_t d_abs, std::int64_t n);

/// sum_{uv = n} (d1/u)(d2/v).
std::int64_t genus_coefficient(std::int64_t d1, std::int64_t d2, std::int64_t n);

/// 2 sum_{n <= n_max} (sum_{uv=n} (d1/u)(d2/v)) n^{-1/2} W(2 pi n / sqrt(D)),
/// W from w_quadrature's closed-form twin erfc evaluated in long double.
double genus_central_value(std::int64_t d_abs, std::int64_t d1, std::int64_t d2, std::int64_t n_max);

/// 2 sum_{n_max < n <= n_stop} d(n) n^{-1/2} W(2 pi n / sqrt(D)).
double afe_tail_brute(std::int64_t d_abs, std::int64_t n_max, std::int64_t n_stop);

/// Class number by counting reduced forms with a naive triple loop.
std::int64_t class_number_by_search(std::int64_t d_abs);

/// sqrt(log M log_2 M / log_3 M) * sum_i 1 / (sqrt(N_i) sqrt(p_i) (log p_i - log_2 M - log_3 M)),
/// evaluated entirely in 113-bit binary floating point.
double theorem2_exponent_quad(std::span<const std::int64_t> primes, std::span<const std::int64_t> norms,
                              double log_m);

/// Adaptive quadrature of int_lo^hi dx / (x log x (log x - c)).
double prime_density_integral(double lo, double hi, double c);

}  // namespace cgl::oracle
