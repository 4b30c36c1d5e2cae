#include "cgl/ideals.hpp"

#include <cmath>
#include <string>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Smallest b in [0, 2p) with b^2 = -D (mod 4p), or -1.
std::int64_t form_root(std::int64_t dv, std::int64_t p) {
  if (p == 2) {
    for (std::int64_t b = 0; b < 4; ++b) {
      if ((b * b + dv) % 8 == 0) return b;
    }
    return -1;
  }
  const std::int64_t s = sqrt_mod_prime(-dv, p);
  if (s < 0) return -1;
  // b must match D in parity; the two lifts of +-s into [0, 2p).
  std::int64_t best = -1;
  for (std::int64_t r : {s, (p - s) % p}) {
    const std::int64_t b = ((r - dv) % 2 == 0) ? r : r + p;
    if (best < 0 || b < best) best = b;
  }
  return best;
}

}  // namespace

const char* to_string(SplitType t) {
  switch (t) {
    case SplitType::split:
      return "split";
    case SplitType::inert:
      return "inert";
    case SplitType::ramified:
      return "ramified";
  }
  return "?";
}

std::vector<PrimeIdeal> splitting(const Discriminant& d, std::int64_t p) {
  if (p < 2 || !sieve_covering(static_cast<std::uint64_t>(p))->is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError("splitting: " + std::to_string(p) + " is not prime");
  }
  const std::int64_t dv = d.value();
  const int k = kronecker(-dv, p);
  if (k == -1) {
    const IdealClass one = principal_class(d);
    return {{p, p * p, SplitType::inert, one, one}};
  }
  const std::int64_t b = form_root(dv, p);
  if (b < 0) throw std::logic_error("splitting: no square root for a non-inert prime");
  const std::int64_t c = (b * b + dv) / (4 * p);
  const IdealClass cls = reduce(p, b, c, d);
  const IdealClass conj = inverse(cls);
  if (k == 0) return {{p, p, SplitType::ramified, cls, conj}};
  return {{p, p, SplitType::split, cls, conj}, {p, p, SplitType::split, conj, cls}};
}

std::int64_t lambda_count(const Discriminant& d, std::int64_t n) {
  if (n < 1) throw DomainError("lambda_count: n must be >= 1");
  std::int64_t out = 1;
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(n))) {
    switch (kronecker(-d.value(), static_cast<std::int64_t>(p))) {
      case 1:
        out *= e + 1;
        break;
      case -1:
        if (e % 2 == 1) return 0;
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<std::int64_t> lambda_table(const Discriminant& d, std::int64_t n_max) {
  std::vector<std::int64_t> lam(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t t = 1; t <= n_max; ++t) {
    const int chi = kronecker(-d.value(), t);
    if (chi == 0) continue;
    for (std::int64_t m = t; m <= n_max; m += t) lam[m] += chi;
  }
  return lam;
}

std::int64_t representation_count(const IdealClass& f, std::int64_t n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  // 4a Q(x, y) = (2ax + by)^2 + D y^2, so D y^2 <= 4an.
  const std::int64_t y_max = isqrt(4 * f.a * n / f.d);
  std::int64_t count = 0;
  for (std::int64_t y = -y_max; y <= y_max; ++y) {
    const std::int64_t disc = 4 * f.a * n - f.d * y * y;
    if (disc < 0) continue;
    const std::int64_t s = isqrt(disc);
    if (s * s != disc) continue;
    for (std::int64_t num : {-f.b * y + s, -f.b * y - s}) {
      if (num % (2 * f.a) == 0) ++count;
      if (s == 0) break;
    }
  }
  return count;
}

std::vector<std::int64_t> class_counts(const GroupStructure& g, std::int64_t n) {
  if (n < 1) throw DomainError("class_counts: n must be >= 1");
  const int w = unit_count(g.discriminant());
  std::vector<std::int64_t> out;
  out.reserve(g.classes().size());
  for (const auto& f : g.classes()) out.push_back(representation_count(f, n) / w);
  return out;
}

void representations_upto(const IdealClass& f, std::int64_t n_max, std::vector<std::int32_t>& reps) {
  reps.assign(static_cast<std::size_t>(n_max) + 1, 0);
  // Lattice points with 0 < Q(x, y) <= n_max, row by row in y.
  const std::int64_t y_max = isqrt(4 * f.a * n_max / f.d);
  for (std::int64_t y = -y_max; y <= y_max; ++y) {
    const std::int64_t disc = 4 * f.a * n_max - f.d * y * y;
    if (disc < 0) continue;
    const double s = std::sqrt(static_cast<double>(disc));
    const auto lo = static_cast<std::int64_t>(std::floor((-f.b * y - s) / (2.0 * f.a))) - 1;
    const auto hi = static_cast<std::int64_t>(std::ceil((-f.b * y + s) / (2.0 * f.a))) + 1;
    for (std::int64_t x = lo; x <= hi; ++x) {
      const std::int64_t q = f.a * x * x + f.b * x * y + f.c * y * y;
      if (q > 0 && q <= n_max) ++reps[static_cast<std::size_t>(q)];
    }
  }
}

ClassCountTable::ClassCountTable(const GroupStructure& g, std::int64_t n_max) : n_max_(n_max) {
  const std::size_t stride = static_cast<std::size_t>(n_max) + 1;
  counts_.assign(g.classes().size() * stride, 0);
  const int w = unit_count(g.discriminant());
  std::vector<std::int32_t> reps;
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    representations_upto(g.classes()[i], n_max, reps);
    for (std::size_t n = 1; n < stride; ++n) counts_[i * stride + n] = reps[n] / w;
  }
}

}  // namespace cgl
