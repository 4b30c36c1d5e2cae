#pragma once

#include <cstdint>
#include <vector>

#include "cgl/arith.hpp"
#include "cgl/classgroup.hpp"

namespace cgl {

enum class SplitType { split, inert, ramified };

const char* to_string(SplitType t);

/// A prime ideal above the rational prime p.
///
/// Split primes give two conjugate ideals of norm p with mutually inverse
/// classes; an inert p is principal of norm p^2; a ramified one has norm p
/// and a class of order at most 2.
struct PrimeIdeal {
  std::int64_t p = 0;
  std::int64_t norm = 0;
  SplitType split_type = SplitType::inert;
  IdealClass ideal_class;
  IdealClass conjugate_class;
};

/// The prime ideals above p. For split p the first entry owns the class of
/// (p, b, c) with the smallest admissible b in [0, 2p).
std::vector<PrimeIdeal> splitting(const Discriminant& d, std::int64_t p);

/// Number of integral ideals of norm n: sum over t | n of (-D/t).
std::int64_t lambda_count(const Discriminant& d, std::int64_t n);

/// lambda(n) for n = 0..n_max (entry 0 unused), by Dirichlet convolution.
std::vector<std::int64_t> lambda_table(const Discriminant& d, std::int64_t n_max);

/// c_A(n) for every class A of g, indexed like g.classes(): the number of
/// ideals of norm n in A, i.e. representations of n by the form of A
/// divided by the unit count.
std::vector<std::int64_t> class_counts(const GroupStructure& g, std::int64_t n);

/// Representation count of n by a positive definite form (x, y in Z).
std::int64_t representation_count(const IdealClass& form, std::int64_t n);

/// reps[n] = representations of n by the form, for n = 0..n_max (reps is
/// resized; reps[0] is left at 0).
void representations_upto(const IdealClass& form, std::int64_t n_max, std::vector<std::int32_t>& reps);

/// c_A(n) for all classes and all n <= n_max, stored row-major as
/// [class][n] with n = 0..n_max.
class ClassCountTable {
 public:
  ClassCountTable(const GroupStructure& g, std::int64_t n_max);

  std::int64_t n_max() const { return n_max_; }
  std::int64_t operator()(std::size_t class_index, std::int64_t n) const {
    return counts_[class_index * static_cast<std::size_t>(n_max_ + 1) + static_cast<std::size_t>(n)];
  }

 private:
  std::int64_t n_max_;
  std::vector<std::int32_t> counts_;
};

}  // namespace cgl
