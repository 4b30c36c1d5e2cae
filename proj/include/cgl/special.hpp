#pragma once

#include <cstdint>

#include "cgl/arith.hpp"

namespace cgl {

/// One evaluation of the AFE smoothing weight with its error bound.
struct SmoothingEval {
  double x = 0.0;
  double value = 0.0;
  double abs_error_bound = 0.0;
};

/// W(x) = Gamma(1/2)^{-1} * int_x^inf t^{1/2} e^{-t} dt/t, i.e. erfc(sqrt(x)).
/// Positive and decreasing, W(0) = 1. Throws DomainError for x < 0.
SmoothingEval w_smooth(double x);

/// Value-only form of w_smooth for inner loops.
double w_value(double x);

/// Upper bound on 2 * sum_{n > n_max} d(n) n^{-1/2} W(2 pi n / sqrt(D)),
/// valid for every class group character at once. Requires n_max >= sqrt(D).
double afe_tail_bound(const Discriminant& d, std::int64_t n_max);

}  // namespace cgl
