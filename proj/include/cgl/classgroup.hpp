#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cgl/arith.hpp"

namespace cgl {

/// Number of roots of unity in Q(sqrt(-D)): 6 for D = 3, 4 for D = 4, else 2.
int unit_count(const Discriminant& d);

/// A reduced primitive positive definite form a x^2 + b xy + c y^2 with
/// b^2 - 4ac = -D, standing for one class of the ideal class group.
///
/// Reduced means |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
struct IdealClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;  ///< D, the absolute discriminant

  friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

/// Gauss reduction of (a, b, c). Throws DiscriminantError when
/// b^2 - 4ac != -D or the form is not primitive, DomainError when a <= 0.
IdealClass reduce(std::int64_t a, std::int64_t b, std::int64_t c, const Discriminant& d);

/// Reduced representative of the product class (Dirichlet composition).
IdealClass compose(const IdealClass& x, const IdealClass& y);

IdealClass inverse(const IdealClass& x);

/// The principal form (1, b, c) with b in {0, 1}.
IdealClass principal_class(const Discriminant& d);

bool is_reduced(std::int64_t a, std::int64_t b, std::int64_t c);

/// All reduced forms of discriminant -D, sorted by (a, b); principal first.
std::vector<IdealClass> reduced_forms(const Discriminant& d);

/// A class group character, given by its exponent vector against the cyclic
/// decomposition: chi(prod g_j^{a_j}) = exp(2 pi i sum e_j a_j / d_j).
struct Character {
  std::vector<std::int64_t> exponents;

  bool is_trivial() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// The class group with an invariant-factor decomposition
/// Z/d_1 x ... x Z/d_r, d_1 | d_2 | ... | d_r, all d_j > 1.
///
/// Classes are addressed by their position in classes(); every class has an
/// exponent vector against generators(). Immutable after construction.
class GroupStructure {
 public:
  explicit GroupStructure(const Discriminant& d);

  const Discriminant& discriminant() const { return d_; }
  std::int64_t h() const { return static_cast<std::int64_t>(classes_.size()); }
  const std::vector<IdealClass>& classes() const { return classes_; }
  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  const std::vector<IdealClass>& generators() const { return generators_; }

  /// Position of a reduced form in classes(); throws DomainError if absent.
  std::size_t index_of(const IdealClass& x) const;
  std::span<const std::int64_t> coords(std::size_t index) const;
  std::size_t index_of_coords(std::span<const std::int64_t> coords) const;

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  std::size_t principal_index() const { return 0; }

  /// chi(class i) as a unit complex number; conj(chi(A)) == chi(A^{-1})
  /// holds bit-exactly.
  std::complex<double> character_value(const Character& chi, std::size_t i) const;

  /// Characters in mixed-radix order of their exponent vectors; index 0 is
  /// the trivial character.
  Character character_at(std::size_t index) const;
  std::size_t character_index(const Character& chi) const;
  Character conjugate(const Character& chi) const;

 private:
  std::int64_t phase(const Character& chi, std::size_t i) const;

  Discriminant d_;
  std::vector<IdealClass> classes_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::vector<std::int64_t> orders_;
  std::vector<IdealClass> generators_;
  std::vector<std::int64_t> coords_;  // h x r, row-major
  std::vector<std::size_t> by_coords_;
  std::vector<std::size_t> inverse_;
  std::vector<std::complex<double>> roots_;  // exponent-th roots of unity
};

/// Enumerates the reduced forms and computes the cyclic decomposition by
/// element-order analysis. Cost is quadratic in h in the worst case.
GroupStructure class_group(const Discriminant& d);

/// All h characters, trivial first.
std::vector<Character> characters(const GroupStructure& g);

}  // namespace cgl
