#include "cgl/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

using i128 = __int128;

// u*a + v*b = g = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

std::uint64_t form_key(std::int64_t a, std::int64_t b) {
  return (static_cast<std::uint64_t>(a) << 32) ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(b));
}

// Moves b into (-a, a] by x -> x + r y.
void normalize(i128& a, i128& b, i128& c) {
  if (-a < b && b <= a) return;
  i128 num = a - b;
  i128 den = 2 * a;
  i128 r = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --r;
  c = a * r * r + b * r + c;
  b = b + 2 * a * r;
}

IdealClass reduce_unchecked(i128 a, i128 b, i128 c, std::int64_t d) {
  normalize(a, b, c);
  while (a > c) {
    std::swap(a, c);
    b = -b;
    normalize(a, b, c);
  }
  if (a == c && b < 0) b = -b;
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c), d};
}

}  // namespace

int unit_count(const Discriminant& d) {
  if (d.value() == 3) return 6;
  if (d.value() == 4) return 4;
  return 2;
}

bool is_reduced(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a <= 0 || std::abs(b) > a || a > c) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

IdealClass reduce(std::int64_t a, std::int64_t b, std::int64_t c, const Discriminant& d) {
  if (a <= 0) throw DomainError("reduce: leading coefficient must be positive");
  if (static_cast<i128>(b) * b - static_cast<i128>(4) * a * c != -static_cast<i128>(d.value())) {
    throw DiscriminantError("reduce: form discriminant does not equal -" + std::to_string(d.value()));
  }
  if (std::gcd(std::gcd(a, b), c) != 1) throw DiscriminantError("reduce: form is not primitive");
  return reduce_unchecked(a, b, c, d.value());
}

IdealClass compose(const IdealClass& x, const IdealClass& y) {
  if (x.d != y.d) throw DiscriminantError("compose: discriminant mismatch");
  IdealClass f1 = x, f2 = y;
  if (f1.a > f2.a) std::swap(f1, f2);
  const std::int64_t s = (f1.b + f2.b) / 2;
  const std::int64_t n = f2.b - s;

  std::int64_t y1 = 0, d = 0, u = 0, v = 0;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    d = f1.a;
  } else {
    d = ext_gcd(f2.a, f1.a, u, v);
    y1 = u;
  }

  std::int64_t x2 = 0, y2 = 0, d1 = 0;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    d1 = ext_gcd(s, d, u, v);
    x2 = u;
    y2 = -v;
  }

  const std::int64_t v1 = f1.a / d1;
  const std::int64_t v2 = f2.a / d1;
  i128 r = (static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * f2.c) % v1;
  if (r < 0) r += v1;
  const i128 b3 = f2.b + 2 * static_cast<i128>(v2) * r;
  const i128 a3 = static_cast<i128>(v1) * v2;
  const i128 c3 = (b3 * b3 + x.d) / (4 * a3);
  return reduce_unchecked(a3, b3, c3, x.d);
}

IdealClass inverse(const IdealClass& x) { return reduce_unchecked(x.a, -x.b, x.c, x.d); }

IdealClass principal_class(const Discriminant& d) {
  const std::int64_t b = d.value() % 2;
  return {1, b, (b + d.value()) / 4, d.value()};
}

std::vector<IdealClass> reduced_forms(const Discriminant& d) {
  const std::int64_t dv = d.value();
  std::vector<IdealClass> out;
  const auto a_max = static_cast<std::int64_t>(std::sqrt(static_cast<double>(dv) / 3.0)) + 1;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - dv) & 1) != 0) continue;
      const std::int64_t num = b * b + dv;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (!is_reduced(a, b, c)) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c, dv});
    }
  }
  return out;
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::int64_t e) { return e == 0; });
}

GroupStructure::GroupStructure(const Discriminant& d) : d_(d), classes_(reduced_forms(d)) {
  const std::size_t h = classes_.size();
  for (std::size_t i = 0; i < h; ++i) lookup_.emplace(form_key(classes_[i].a, classes_[i].b), i);

  // Multiplication on indices through composition; only used while building.
  auto mul = [&](std::size_t i, std::size_t j) { return index_of(compose(classes_[i], classes_[j])); };
  inverse_.resize(h);
  for (std::size_t i = 0; i < h; ++i) inverse_[i] = index_of(inverse(classes_[i]));

  // Greedy basis: repeatedly take an element of maximal order modulo the
  // subgroup H found so far, then correct it by an element of H so that its
  // order equals its order modulo H. H stays a direct summand throughout.
  std::vector<std::vector<std::int64_t>> h_coords(h);  // coords of members of H
  std::vector<bool> in_h(h, false);
  in_h[0] = true;
  std::vector<std::size_t> members{0};
  std::vector<std::size_t> gens;
  std::vector<std::int64_t> orders;

  while (members.size() < h) {
    std::size_t best = 0;
    std::int64_t best_order = 0;
    for (std::size_t x = 0; x < h; ++x) {
      if (in_h[x]) continue;
      std::int64_t m = 1;
      std::size_t p = x;
      while (!in_h[p]) {
        p = mul(p, x);
        ++m;
      }
      if (m > best_order) {
        best_order = m;
        best = x;
      }
    }
    // best^m lies in H with coordinates t; subtract t/m along each generator.
    std::size_t power = best;
    for (std::int64_t i = 1; i < best_order; ++i) power = mul(power, best);
    const auto& t = h_coords[power];
    std::size_t lifted = best;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (t[j] % best_order != 0) throw std::logic_error("class group basis: lift not divisible");
      const std::int64_t steps = (orders[j] - t[j] / best_order) % orders[j];
      for (std::int64_t s = 0; s < steps; ++s) lifted = mul(lifted, gens[j]);
    }

    std::vector<std::size_t> next;
    next.reserve(members.size() * static_cast<std::size_t>(best_order));
    std::size_t step = 0;  // lifted^k
    for (std::int64_t k = 0; k < best_order; ++k) {
      for (std::size_t mbr : members) {
        const std::size_t e = k == 0 ? mbr : mul(mbr, step);
        if (k > 0) {
          if (in_h[e]) throw std::logic_error("class group basis: lifted element not independent");
          in_h[e] = true;
          h_coords[e] = h_coords[mbr];
          h_coords[e].back() = k;
          next.push_back(e);
        } else {
          h_coords[e].push_back(0);
        }
      }
      step = k == 0 ? lifted : mul(step, lifted);
    }
    members.insert(members.end(), next.begin(), next.end());
    gens.push_back(lifted);
    orders.push_back(best_order);
  }

  // Invariant factors ascend: d_1 | d_2 | ... | d_r.
  const std::size_t r = gens.size();
  std::reverse(gens.begin(), gens.end());
  std::reverse(orders.begin(), orders.end());
  orders_ = orders;
  for (std::size_t g : gens) generators_.push_back(classes_[g]);
  coords_.assign(h * r, 0);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < r; ++j) coords_[i * r + j] = h_coords[i][r - 1 - j];
  }
  by_coords_.assign(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t key = index_of_coords(coords(i));
    if (by_coords_[key] != h) throw std::logic_error("class group basis: coordinates collide");
    by_coords_[key] = i;
  }

  const std::int64_t exponent = orders_.empty() ? 1 : orders_.back();
  roots_.resize(static_cast<std::size_t>(exponent));
  for (std::int64_t k = 0; k < exponent; ++k) {
    if (2 * k <= exponent) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(exponent);
      roots_[k] = {std::cos(angle), std::sin(angle)};
    } else {
      roots_[k] = std::conj(roots_[exponent - k]);
    }
  }
  if (exponent % 2 == 0 && exponent > 0) roots_[exponent / 2] = {-1.0, 0.0};
  if (exponent % 4 == 0 && exponent > 0) {
    roots_[exponent / 4] = {0.0, 1.0};
    roots_[3 * exponent / 4] = {0.0, -1.0};
  }
}

std::size_t GroupStructure::index_of(const IdealClass& x) const {
  const auto it = lookup_.find(form_key(x.a, x.b));
  if (x.d != d_.value() || it == lookup_.end()) {
    throw DomainError("index_of: (" + std::to_string(x.a) + ", " + std::to_string(x.b) + ", " +
                      std::to_string(x.c) + ") is not a reduced form of this group");
  }
  return it->second;
}

std::span<const std::int64_t> GroupStructure::coords(std::size_t index) const {
  const std::size_t r = orders_.size();
  return {coords_.data() + index * r, r};
}

std::size_t GroupStructure::index_of_coords(std::span<const std::int64_t> c) const {
  std::size_t key = 0;
  for (std::size_t j = orders_.size(); j-- > 0;) {
    key = key * static_cast<std::size_t>(orders_[j]) + static_cast<std::size_t>(c[j]);
  }
  return key;
}

std::size_t GroupStructure::multiply(std::size_t i, std::size_t j) const {
  const std::size_t r = orders_.size();
  std::vector<std::int64_t> sum(r);
  for (std::size_t k = 0; k < r; ++k) sum[k] = (coords_[i * r + k] + coords_[j * r + k]) % orders_[k];
  return by_coords_[index_of_coords(sum)];
}

std::int64_t GroupStructure::phase(const Character& chi, std::size_t i) const {
  const std::size_t r = orders_.size();
  if (chi.exponents.size() != r) throw DomainError("character does not match the group decomposition");
  const std::int64_t exponent = orders_.empty() ? 1 : orders_.back();
  std::int64_t k = 0;
  for (std::size_t j = 0; j < r; ++j) {
    k = (k + chi.exponents[j] * coords_[i * r + j] % orders_[j] * (exponent / orders_[j])) % exponent;
  }
  return k;
}

std::complex<double> GroupStructure::character_value(const Character& chi, std::size_t i) const {
  return roots_[static_cast<std::size_t>(phase(chi, i))];
}

Character GroupStructure::character_at(std::size_t index) const {
  Character chi;
  chi.exponents.resize(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    chi.exponents[j] = static_cast<std::int64_t>(index % static_cast<std::size_t>(orders_[j]));
    index /= static_cast<std::size_t>(orders_[j]);
  }
  return chi;
}

std::size_t GroupStructure::character_index(const Character& chi) const {
  return index_of_coords(chi.exponents);
}

Character GroupStructure::conjugate(const Character& chi) const {
  Character out = chi;
  for (std::size_t j = 0; j < orders_.size(); ++j) out.exponents[j] = (orders_[j] - chi.exponents[j]) % orders_[j];
  return out;
}

GroupStructure class_group(const Discriminant& d) {
  sieve_covering(0);  // surfaces a misconfigured capacity early
  if (static_cast<std::uint64_t>(d.value()) > sieve_capacity()) {
    throw CapacityError("class_group: D above sieve capacity");
  }
  return GroupStructure(d);
}

std::vector<Character> characters(const GroupStructure& g) {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(g.h()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.h()); ++i) out.push_back(g.character_at(i));
  return out;
}

}  // namespace cgl
