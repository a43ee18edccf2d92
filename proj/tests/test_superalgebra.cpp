#include <doctest.h>

#include "csg/axioms.hpp"
#include "csg/constructions.hpp"
#include "csg/search.hpp"

using namespace csg;

namespace {

// Every n x n matrix over a finite field, as column images.
std::vector<Matrix> all_matrices(const Field& f, std::size_t n) {
  std::vector<Matrix> out;
  for (const Vec& flat : all_vectors(f, n * n)) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = flat[i];
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_SUITE("superalgebra") {
  TEST_CASE("split2 over GF(2): automorphisms by brute force over 16 maps") {
    const Field& f = Field::prime(2);
    AlgebraPtr a = split_hurwitz(2, f);
    std::size_t brute = 0;
    for (const Matrix& m : all_matrices(f, 2)) {
      if (!inverse(m)) continue;
      brute += !morphism_failure(Morphism{a, a, m, 0}, AlgebraHom).has_value();
    }
    CHECK(brute == 2);
    AutomorphismList l = enumerate_automorphisms(a, std::nullopt);
    CHECK(l.complete);
    CHECK(l.maps.size() == brute);
  }

  TEST_CASE("B(1,2) over GF(3): automorphisms are SL2 on the odd part") {
    const Field& f = Field::prime(3);
    AlgebraPtr a = b12(f);
    std::size_t brute = 0;
    for (const Matrix& odd : all_matrices(f, 2)) {
      Matrix m = Matrix::identity(f, 3);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(1 + i, 1 + j) = odd(i, j);
      if (!inverse(m)) continue;
      brute += !morphism_failure(Morphism{a, a, m, 0}, AlgebraHom | Isometry | ParityPreserving).has_value();
    }
    CHECK(brute == 24);
    CHECK(enumerate_automorphisms(a, std::nullopt).maps.size() == 24);
  }

  TEST_CASE("multiplication, unit and conjugation") {
    const Field& f = Field::prime(3);
    AlgebraPtr a = b12(f);
    REQUIRE(a->unit().has_value());
    CHECK(*a->unit() == a->basis("1"));
    Vec u = a->basis("u"), v = a->basis("v");
    CHECK(a->mul(u, v) == a->basis("1"));
    CHECK(a->mul(v, u) == -a->basis("1"));
    CHECK(a->conjugate(u) == -u);
    CHECK(a->format(u + f.from_int(2) * v) == "u + 2*v");
    CHECK_THROWS_AS(a->q0(u), Error);
  }

  TEST_CASE("mixed algebras are rejected") {
    AlgebraPtr a = split_hurwitz(2, Field::prime(2)), b = split_hurwitz(2, Field::prime(2));
    CHECK_THROWS_AS(multiply(Element{a, a->basis(0)}, Element{b, b->basis(0)}), Error);
    CHECK(multiply(Element{a, a->basis(0)}, Element{a, a->basis(0)}).str() == "e1");
  }

  TEST_CASE("invalid structure constants are rejected") {
    AlgebraPtr a = b12(Field::prime(3));
    // even * odd landing in the even part
    CHECK_THROWS_AS(a->mutated(0, 1, a->basis(0)), Error);
  }

  TEST_CASE("regular superforms") {
    CHECK(is_regular_superform(*b42(Field::prime(3))));
    CHECK(is_regular_superform(*split_hurwitz(8, Field::prime(2))));
  }

  TEST_CASE("morphism composition and powers") {
    const Field& f = Field::prime(2);
    AlgebraPtr a = split_hurwitz(2, f);
    Morphism swap = Morphism::from_images(a, a, {a->basis(1), a->basis(0)});
    CHECK(power(swap, 2).matrix == Matrix::identity(f, 2));
    CHECK(compose(swap, swap).matrix == Matrix::identity(f, 2));
    CHECK(is_morphism(swap, AllChecks).has(AlgebraHom));
    Morphism bad = Morphism::from_images(a, a, {a->basis(0), a->basis(0)});
    CHECK(morphism_failure(bad, AlgebraHom).has_value());
    CHECK_THROWS_AS(is_morphism(bad, AlgebraHom), Error);
  }
}
