#pragma once

#include <cmath>
#include <complex>

namespace cgl {

/// Neumaier's compensated sum.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar x) {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_{};
  Scalar comp_{};
};

/// Componentwise compensated sum for complex values.
template <typename Real>
class CompensatedSum<std::complex<Real>> {
 public:
  void add(std::complex<Real> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

}  // namespace cgl
