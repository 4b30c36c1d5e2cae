#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cgl {

/// A positive integer D such that -D is a fundamental discriminant.
///
/// The field attached to it is Q(sqrt(-D)). Construction validates the
/// fundamental-discriminant conditions and throws DiscriminantError otherwise.
class Discriminant {
 public:
  explicit Discriminant(std::int64_t d_abs);

  std::int64_t value() const { return d_; }
  /// The signed fundamental discriminant -D.
  std::int64_t signed_value() const { return -d_; }

  friend bool operator==(const Discriminant&, const Discriminant&) = default;
  friend auto operator<=>(const Discriminant&, const Discriminant&) = default;

 private:
  std::int64_t d_;
};

/// Kronecker symbol (a/n), extended to every integer n (0, negative, even).
int kronecker(std::int64_t a, std::int64_t n);

bool is_squarefree(std::uint64_t n);

/// True iff neg_d (< 0) is a fundamental discriminant.
bool is_fundamental(std::int64_t neg_d);

/// Every D with x <= D <= 2x and -D fundamental, ascending.
std::vector<Discriminant> fundamental_discriminants(std::int64_t x);

/// Eratosthenes table over [0, limit]. Immutable once built.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;
  std::span<const std::uint64_t> primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

/// Largest number the shared sieve may cover. Defaults to 10^8; the
/// CGL_SIEVE_CAPACITY environment variable overrides it at first use.
std::uint64_t sieve_capacity();
void set_sieve_capacity(std::uint64_t capacity);

/// A shared sieve covering at least [0, n]. Throws CapacityError when n is
/// above sieve_capacity(). Safe to call from several threads.
std::shared_ptr<const PrimeSieve> sieve_covering(std::uint64_t n);

/// Primes p with lo < p <= hi, ascending.
std::vector<std::uint64_t> primes_in(double lo, double hi);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t divisor_count(std::uint64_t n);

/// k-fold iterated natural logarithm, 1 <= k <= 4. Every argument handed to
/// log must exceed 1, otherwise DomainError.
template <std::floating_point T>
T log_iter(T x, int k);

extern template float log_iter(float, int);
extern template double log_iter(double, int);
extern template long double log_iter(long double, int);

/// Smallest square root of a modulo the odd prime p, or -1 if a is a
/// non-residue.
std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p);

}  // namespace cgl
