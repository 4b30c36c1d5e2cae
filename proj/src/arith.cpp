#include "cgl/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

constexpr std::uint64_t kDefaultSieveCapacity = 100'000'000;

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Jacobi symbol for odd positive n.
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod_floor(a, n);
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::int64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

struct SharedSieve {
  std::mutex mutex;
  std::shared_ptr<const PrimeSieve> sieve;
  std::uint64_t capacity = 0;
  bool capacity_set = false;
};

SharedSieve& shared() {
  static SharedSieve s;
  return s;
}

std::uint64_t capacity_locked(SharedSieve& s) {
  if (!s.capacity_set) {
    s.capacity = kDefaultSieveCapacity;
    if (const char* env = std::getenv("CGL_SIEVE_CAPACITY")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) s.capacity = v;
    }
    s.capacity_set = true;
  }
  return s.capacity;
}

}  // namespace

Discriminant::Discriminant(std::int64_t d_abs) : d_(d_abs) {
  if (d_abs < 3 || !is_fundamental(-d_abs)) {
    const std::string neg = "-" + std::to_string(d_abs);
    throw DiscriminantError(neg + " is not fundamental: is_fundamental(" + neg + ") failed");
  }
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -1;
  }
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    if (twos & 1) {
      const std::int64_t r = mod_floor(a, 8);
      if (r == 3 || r == 5) sign = -sign;
    }
  }
  if (n == 1) return sign;
  return sign * jacobi(a, n);
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  if (n % 4 == 0) return false;
  if (n % 2 == 0) n /= 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

bool is_fundamental(std::int64_t neg_d) {
  if (neg_d >= 0) return false;
  const std::int64_t r = mod_floor(neg_d, 4);
  if (r == 1) return is_squarefree(static_cast<std::uint64_t>(-neg_d));
  if (r != 0) return false;
  const std::int64_t m = neg_d / 4;
  const std::int64_t rm = mod_floor(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(static_cast<std::uint64_t>(-m));
}

std::vector<Discriminant> fundamental_discriminants(std::int64_t x) {
  if (x < 3) throw DomainError("fundamental_discriminants: x must be >= 3");
  std::vector<Discriminant> out;
  for (std::int64_t d = x; d <= 2 * x; ++d) {
    if (is_fundamental(-d)) out.emplace_back(d);
  }
  return out;
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
  composite_[0] = true;
  if (limit >= 1) composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite_[i]) primes_.push_back(i);
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw CapacityError("PrimeSieve::is_prime: " + std::to_string(n) + " above sieve limit");
  return !composite_[n];
}

std::uint64_t sieve_capacity() {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  return capacity_locked(s);
}

void set_sieve_capacity(std::uint64_t capacity) {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  s.capacity = capacity;
  s.capacity_set = true;
}

std::shared_ptr<const PrimeSieve> sieve_covering(std::uint64_t n) {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  const std::uint64_t cap = capacity_locked(s);
  if (n > cap) {
    throw CapacityError("sieve request " + std::to_string(n) + " exceeds sieve capacity " +
                        std::to_string(cap));
  }
  if (!s.sieve || s.sieve->limit() < n) {
    std::uint64_t limit = s.sieve ? s.sieve->limit() : 1u << 16;
    while (limit < n) limit *= 2;
    limit = std::min(limit, cap);
    s.sieve = std::make_shared<const PrimeSieve>(limit);
  }
  return s.sieve;
}

std::vector<std::uint64_t> primes_in(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi >= lo)) throw DomainError("primes_in: need 0 <= lo <= hi");
  const auto top = static_cast<std::uint64_t>(std::floor(hi));
  const auto bottom = static_cast<std::uint64_t>(std::floor(lo));
  auto sieve = sieve_covering(top);
  const auto primes = sieve->primes();
  auto first = std::upper_bound(primes.begin(), primes.end(), bottom);
  auto last = std::upper_bound(primes.begin(), primes.end(), top);
  return {first, last};
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw DomainError("divisor_count: n must be >= 1");
  std::uint64_t d = 1;
  for (const auto& [p, e] : factorize(n)) d *= static_cast<std::uint64_t>(e + 1);
  return d;
}

template <std::floating_point T>
T log_iter(T x, int k) {
  if (k < 1 || k > 4) throw DomainError("log_iter: k must be in 1..4");
  for (int i = 0; i < k; ++i) {
    if (!(x > T{1})) {
      throw DomainError("log_iter: argument " + std::to_string(x) + " at level " + std::to_string(i + 1) +
                        " is <= 1");
    }
    x = std::log(x);
  }
  return x;
}

template float log_iter(float, int);
template double log_iter(double, int);
template long double log_iter(long double, int);

std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p) {
  const auto pu = static_cast<std::uint64_t>(p);
  const auto au = static_cast<std::uint64_t>(mod_floor(a, p));
  if (au == 0) return 0;
  if (p == 2) return 1;
  if (pow_mod(au, (pu - 1) / 2, pu) != 1) return -1;

  // Tonelli-Shanks.
  std::uint64_t q = pu - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (pu - 1) / 2, pu) != pu - 1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = pow_mod(z, q, pu);
  std::uint64_t t = pow_mod(au, q, pu);
  std::uint64_t r = pow_mod(au, (q + 1) / 2, pu);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, pu);
      ++i;
    }
    const std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), pu);
    m = i;
    c = mul_mod(b, b, pu);
    t = mul_mod(t, c, pu);
    r = mul_mod(r, b, pu);
  }
  const auto root = static_cast<std::int64_t>(r);
  return std::min(root, p - root);
}

}  // namespace cgl
