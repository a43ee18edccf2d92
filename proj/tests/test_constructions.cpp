#include <doctest.h>

#include "csg/axioms.hpp"
#include "csg/constructions.hpp"
#include "csg/search.hpp"

using namespace csg;

TEST_SUITE("constructions") {
  TEST_CASE("dimensions and parities") {
    struct Case {
      const char* id;
      const char* field;
      std::size_t even, odd;
    };
    for (const Case& c : std::vector<Case>{{"split2", "GF(2)", 2, 0},
                                           {"split8", "GF(3)", 8, 0},
                                           {"super-cayley", "GF(2)", 4, 4},
                                           {"cd2", "GF(2)", 2, 2},
                                           {"cd4", "GF(4)", 4, 4},
                                           {"b12", "GF(3)", 1, 2},
                                           {"b42", "GF(9)", 4, 2},
                                           {"okubo-nst", "GF(2)", 4, 4},
                                           {"okubo-omega", "GF(4)", 4, 4},
                                           {"p8", "GF(7)", 8, 0}}) {
      CAPTURE(c.id);
      AlgebraPtr a = build_construction(c.id, Field::parse(c.field));
      CHECK(a->dim(Parity::Even) == c.even);
      CHECK(a->dim(Parity::Odd) == c.odd);
    }
  }

  TEST_CASE("field conditions") {
    CHECK_THROWS_AS(b12(Field::prime(2)), Error);
    CHECK_THROWS_AS(build_construction("okubo-omega", Field::prime(2)), Error);
    CHECK_THROWS_AS(super_split_cayley(Field::prime(3)), Error);
    CHECK_THROWS_AS(build_construction("cd4", Field::prime(2), {"0", "1", "nst"}), Error);
    CHECK_THROWS_AS(build_construction("nope", Field::prime(2)), Error);
  }

  TEST_CASE("standard canonical basis realizes the table") {
    for (std::size_t n : {2u, 4u, 8u})
      for (const Field* f : {&Field::prime(2), &Field::prime(3), &Field::rationals()})
        CHECK_FALSE(canonical_table_failure(standard_canonical_basis(split_hurwitz(n, *f))).has_value());
  }

  TEST_CASE("para-Hurwitz product is conj(x) conj(y)") {
    const Field& f = Field::prime(3);
    AlgebraPtr c = b42(f), p = para_hurwitz(c);
    for (std::size_t i = 0; i < c->dim(); ++i)
      for (std::size_t j = 0; j < c->dim(); ++j)
        CHECK(p->mul(c->basis(i), c->basis(j)) == c->mul(c->conjugate(c->basis(i)), c->conjugate(c->basis(j))));
  }

  TEST_CASE("Petersson twist by tau_st") {
    const Field& f = Field::prime(7);
    AlgebraPtr c = split_hurwitz(8, f);
    Morphism t = tau_st(standard_canonical_basis(c));
    CHECK(power(t, 3).matrix == Matrix::identity(f, 8));
    AlgebraPtr s = petersson_twist(c, t);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        Vec x = c->basis(i), y = c->basis(j);
        CHECK(s->mul(x, y) == c->mul(t.apply(c->conjugate(x)), power(t, 2).apply(c->conjugate(y))));
      }
    CHECK(check_symmetric(*s).pass);
  }

  TEST_CASE("Okubo twists are automorphisms of order 3") {
    for (auto [variant, field] : {std::pair{"nst", "GF(2)"}, std::pair{"omega", "GF(4)"}}) {
      OkuboSuper o = okubo_super(Field::parse(field), variant);
      CHECK_FALSE(morphism_failure(o.phi, AlgebraHom | Isometry | ParityPreserving).has_value());
      CHECK_FALSE(morphism_failure(o.phi_s, AlgebraHom | Isometry | ParityPreserving).has_value());
      CHECK(power(o.phi, 3).matrix == Matrix::identity(o.c->field(), 8));
      CHECK_FALSE(o.s->unit().has_value());
    }
  }

  TEST_CASE("CD(split4) is the split Cayley algebra once parity is forgotten") {
    const Field& f = Field::prime(2);
    SearchResult r = find_algebra_isomorphism(build_construction("cd4", f), split_hurwitz(8, f));
    CHECK(r.status == SearchStatus::Found);
  }

  TEST_CASE("adapted and homogeneous canonical bases") {
    const Field& f = Field::gf4();
    OkuboSuper o = okubo_super(f, "omega");
    AdaptedBasis ab = adapt_basis_to_automorphism(o.c, o.phi);
    CHECK(ab.label == "omega");
    CHECK_FALSE(canonical_table_failure(ab.basis).has_value());
    CHECK_FALSE(canonical_table_failure(homogeneous_canonical_basis(build_construction("cd4", f))).has_value());
    CHECK_FALSE(canonical_table_failure(homogeneous_canonical_basis(build_construction("cd2", f))).has_value());
  }

  TEST_CASE("canonical_basis_find rejects anisotropic seeds") {
    AlgebraPtr c = split_hurwitz(8, Field::prime(2));
    Vec one = *c->unit();
    CHECK_THROWS_AS(canonical_basis_find(c, one), Error);
  }

  TEST_CASE("Peirce decomposition of the split Cayley algebra") {
    AlgebraPtr c = split_hurwitz(8, Field::prime(3));
    PeirceDecomposition p = peirce(c, c->basis("e1"));
    CHECK(p.u.rows() == 3);
    CHECK(p.v.rows() == 3);
    CHECK(p.e2 == c->basis("e2"));
  }
}
