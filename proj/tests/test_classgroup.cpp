#include <Eigen/Dense>
#include <random>

#include "cgl/classgroup.hpp"
#include "cgl/errors.hpp"
#include "cgl/oracles.hpp"
#include "doctest.h"

using namespace cgl;

namespace {

std::vector<Discriminant> fundamentals_upto(std::int64_t hi) {
  std::vector<Discriminant> out;
  for (std::int64_t d = 3; d <= hi; ++d) {
    if (is_fundamental(-d)) out.emplace_back(d);
  }
  return out;
}

IdealClass form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return {a, b, c, d}; }

}  // namespace

TEST_CASE("reduce examples") {
  const Discriminant d(23);
  CHECK(reduce(1, 1, 6, d) == form(1, 1, 6, 23));
  CHECK(reduce(6, 1, 1, d) == form(1, 1, 6, 23));
  CHECK(reduce(3, -1, 2, d) == form(2, 1, 3, 23));
  CHECK_THROWS_AS(reduce(1, 1, 7, d), DiscriminantError);
  CHECK_THROWS_AS(reduce(0, 1, 6, d), DomainError);
  // 2x^2 + 2xy + 2y^2 has discriminant -12 but is not primitive.
  CHECK_THROWS_AS(reduce(2, 2, 2, Discriminant(3)), DiscriminantError);
}

TEST_CASE("reduction undoes random unimodular changes of variable") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> step(0, 2);
  for (const auto& d : fundamentals_upto(800)) {
    for (const auto& f : reduced_forms(d)) {
      // Apply a random word in S = (x, y) -> (-y, x) and T^{+-1} = x -> x +- y.
      __int128 a = f.a, b = f.b, c = f.c;
      for (int k = 0; k < 12; ++k) {
        switch (step(rng)) {
          case 0: {
            std::swap(a, c);
            b = -b;
            break;
          }
          case 1:
            c = a + b + c;
            b = b + 2 * a;
            break;
          default:
            c = a - b + c;
            b = b - 2 * a;
            break;
        }
      }
      CHECK(reduce(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c), d) == f);
    }
  }
}

TEST_CASE("compose examples") {
  const Discriminant d(23);
  CHECK(compose(form(2, 1, 3, 23), form(2, -1, 3, 23)) == form(1, 1, 6, 23));
  CHECK(compose(form(2, 1, 3, 23), form(2, 1, 3, 23)) == form(2, -1, 3, 23));
  CHECK_THROWS_AS(compose(form(2, 1, 3, 23), form(1, 1, 4, 15)), DiscriminantError);
  for (const auto& dd : fundamentals_upto(1000)) {
    const auto one = principal_class(dd);
    for (const auto& f : reduced_forms(dd)) {
      CHECK(compose(one, f) == f);
      CHECK(compose(f, one) == f);
    }
  }
}

TEST_CASE("class_group examples") {
  const auto g23 = class_group(Discriminant(23));
  CHECK(g23.h() == 3);
  CHECK(g23.cyclic_orders() == std::vector<std::int64_t>{3});
  CHECK(g23.classes() == std::vector<IdealClass>{form(1, 1, 6, 23), form(2, -1, 3, 23), form(2, 1, 3, 23)});

  CHECK(class_group(Discriminant(4)).h() == 1);
  CHECK(class_group(Discriminant(4)).cyclic_orders().empty());

  const auto g15 = class_group(Discriminant(15));
  CHECK(g15.h() == 2);
  CHECK(g15.cyclic_orders() == std::vector<std::int64_t>{2});
  CHECK(g15.classes() == std::vector<IdealClass>{form(1, 1, 4, 15), form(2, 1, 2, 15)});

  // A non-cyclic group: -84 has class group (Z/2)^2.
  CHECK(class_group(Discriminant(84)).cyclic_orders() == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("class number agrees with a naive reduced-form count") {
  for (const auto& d : fundamentals_upto(3000)) CHECK(class_group(d).h() == oracle::class_number_by_search(d.value()));
}

TEST_CASE("decomposition invariants") {
  for (const auto& d : fundamentals_upto(4000)) {
    const auto g = class_group(d);
    std::int64_t prod = 1;
    const auto& ord = g.cyclic_orders();
    for (std::size_t j = 0; j < ord.size(); ++j) {
      CHECK(ord[j] > 1);
      if (j > 0) CHECK(ord[j] % ord[j - 1] == 0);
      prod *= ord[j];
    }
    CHECK(prod == g.h());
    // The coordinate map is a homomorphism onto composition.
    for (std::size_t i = 0; i < g.classes().size(); ++i) {
      CHECK(g.index_of(g.classes()[i]) == i);
      const std::size_t j = (i * 7 + 3) % g.classes().size();
      CHECK(g.classes()[g.multiply(i, j)] == compose(g.classes()[i], g.classes()[j]));
    }
  }
}

TEST_CASE("group axioms hold exhaustively for D <= 500") {
  for (const auto& d : fundamentals_upto(500)) {
    const auto forms = reduced_forms(d);
    const auto one = principal_class(d);
    for (const auto& x : forms) {
      CHECK(compose(x, inverse(x)) == one);
      for (const auto& y : forms) {
        const auto xy = compose(x, y);
        CHECK(xy == compose(y, x));
        for (const auto& z : forms) CHECK(compose(xy, z) == compose(x, compose(y, z)));
      }
    }
  }
}

TEST_CASE("every element order divides h") {
  for (const auto& d : fundamentals_upto(1000)) {
    const auto forms = reduced_forms(d);
    const auto h = static_cast<std::int64_t>(forms.size());
    const auto one = principal_class(d);
    for (const auto& x : forms) {
      std::int64_t k = 1;
      auto p = x;
      while (!(p == one)) {
        p = compose(p, x);
        ++k;
      }
      CHECK(h % k == 0);
    }
  }
}

TEST_CASE("characters") {
  const auto g1 = class_group(Discriminant(4));
  const auto c1 = characters(g1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].is_trivial());

  const auto g = class_group(Discriminant(23));
  const auto chis = characters(g);
  REQUIRE(chis.size() == 3);
  CHECK(chis[0].is_trivial());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g.character_value(chis[1], i) == std::conj(g.character_value(chis[2], i)));
  }
  for (std::size_t k = 1; k < 3; ++k) {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += g.character_value(chis[k], i);
    CHECK(std::abs(s) < 1e-14);
  }
  CHECK_THROWS_AS(class_group(Discriminant(23)).character_value(Character{{1, 1}}, 0), DomainError);
}

TEST_CASE("character table is sqrt(h) times a unitary matrix") {
  for (const auto& d : fundamentals_upto(500)) {
    const auto g = class_group(d);
    const auto h = static_cast<Eigen::Index>(g.h());
    Eigen::MatrixXcd table(h, h);
    for (Eigen::Index k = 0; k < h; ++k) {
      const auto chi = g.character_at(static_cast<std::size_t>(k));
      for (Eigen::Index i = 0; i < h; ++i) table(k, i) = g.character_value(chi, static_cast<std::size_t>(i));
    }
    const Eigen::MatrixXcd gram = table * table.adjoint();
    CHECK((gram - static_cast<double>(h) * Eigen::MatrixXcd::Identity(h, h)).norm() < 1e-10 * static_cast<double>(h));
  }
}

TEST_CASE("character values are homomorphisms and conjugation matches inversion") {
  for (std::int64_t dv : {23, 84, 231, 420, 3315, 5460}) {
    if (!is_fundamental(-dv)) continue;
    const auto g = class_group(Discriminant(dv));
    for (const auto& chi : characters(g)) {
      const auto conj = g.conjugate(chi);
      for (std::size_t i = 0; i < g.classes().size(); ++i) {
        CHECK(g.character_value(conj, i) == std::conj(g.character_value(chi, i)));
        CHECK(g.character_value(chi, g.inverse_index(i)) == std::conj(g.character_value(chi, i)));
        const std::size_t j = (i + 1) % g.classes().size();
        CHECK(std::abs(g.character_value(chi, g.multiply(i, j)) -
                       g.character_value(chi, i) * g.character_value(chi, j)) < 1e-13);
      }
      CHECK(g.character_index(chi) < static_cast<std::size_t>(g.h()));
    }
  }
}

TEST_CASE("class number formula at small D") {
  for (const auto& d : fundamentals_upto(300)) {
    const double hf = oracle::class_number_formula(d.value(), 1'000'000);
    CHECK(std::abs(hf - static_cast<double>(class_group(d).h())) < 0.4);
  }
}

TEST_CASE("unit counts") {
  CHECK(unit_count(Discriminant(3)) == 6);
  CHECK(unit_count(Discriminant(4)) == 4);
  CHECK(unit_count(Discriminant(7)) == 2);
}
