#include "cgl/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

// glibc documents erfc as accurate to a few ulp on x86_64; 16 ulp of the
// result leaves a wide margin.
constexpr double kErfcUlps = 16.0;

}  // namespace

double w_value(double x) {
  if (!(x >= 0.0)) throw DomainError("w_smooth: x must be >= 0");
  return std::erfc(std::sqrt(x));
}

SmoothingEval w_smooth(double x) {
  const double value = w_value(x);
  const double err = kErfcUlps * std::numeric_limits<double>::epsilon() * value +
                     std::numeric_limits<double>::denorm_min();
  return {x, value, err};
}

double afe_tail_bound(const Discriminant& d, std::int64_t n_max) {
  const double root_d = std::sqrt(static_cast<double>(d.value()));
  const auto n = static_cast<double>(n_max);
  if (n < root_d) throw DomainError("afe_tail_bound: n_max must be >= sqrt(D)");

  // With lambda(n) <= d(n) <= n and W(x) <= e^{-x} (x >= 2 pi here), the tail
  // is at most 2 * sum_{m > n} sqrt(m) e^{-alpha m}. That summand decreases for
  // m > 1/(2 alpha), so the sum is below the integral from n, and
  // sqrt(t) <= sqrt(n) + (t - n)/(2 sqrt(n)) gives the closed form.
  const double alpha = 2.0 * std::numbers::pi / root_d;
  const double poly = std::sqrt(n) / alpha + 1.0 / (2.0 * std::sqrt(n) * alpha * alpha);
  const double log_bound = std::log(2.0 * poly) - alpha * n;
  const double bound = std::exp(log_bound);
  return std::max(bound, std::numeric_limits<double>::min());
}

}  // namespace cgl
