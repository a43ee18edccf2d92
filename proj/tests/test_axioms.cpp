#include <doctest.h>

#include "csg/axioms.hpp"
#include "csg/catalog.hpp"
#include "csg/constructions.hpp"

using namespace csg;

TEST_SUITE("axioms") {
  TEST_CASE("Hurwitz superalgebras pass exhaustively") {
    for (auto [id, field] : {std::pair{"split4", "GF(3)"}, std::pair{"b12", "GF(3)"}, std::pair{"cd2", "GF(4)"}}) {
      CAPTURE(id);
      AlgebraPtr a = build_construction(id, Field::parse(field));
      AxiomReport h = check_hurwitz(*a);
      CHECK(h.pass);
      CHECK(h.mode == "exhaustive");
      CHECK(check_composition_super(*a).pass);
    }
  }

  TEST_CASE("large even parts fall back to the polarized check") {
    AxiomReport r = check_hurwitz(*split_hurwitz(8, Field::gf4()));
    CHECK(r.pass);
    CHECK(r.mode == "polarized");
  }

  TEST_CASE("a mutated product is caught with a witness") {
    const Field& f = Field::prime(3);
    AlgebraPtr a = split_hurwitz(4, f);
    AlgebraPtr bad = a->mutated(a->index_of("u1"), a->index_of("v1"), a->basis("e2"));
    AxiomReport r = check_hurwitz(*bad);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.has_value());
    CHECK_FALSE(check_composition_super(*bad).pass);
  }

  TEST_CASE("unital algebras are not symmetric compositions") {
    CHECK_FALSE(check_symmetric(*split_hurwitz(4, Field::prime(3))).pass);
    CHECK(check_symmetric(*para_hurwitz(split_hurwitz(4, Field::prime(3)))).pass);
  }

  TEST_CASE("para-units") {
    AlgebraPtr c = split_hurwitz(8, Field::prime(3));
    AlgebraPtr s = para_hurwitz(c);
    auto units = find_para_units(*s);
    REQUIRE(units.size() == 1);
    CHECK(units.front() == *c->unit());
    CHECK(find_para_units(*s, ParaUnitMode::Algebraic) == units);
    CHECK(check_para_reconstruction(*s, *c, units.front()).pass);
    CHECK_FALSE(check_para_reconstruction(*s, *c, c->basis("e1")).pass);
  }

  TEST_CASE("Okubo superalgebras have no para-unit") {
    OkuboSuper o = okubo_super(Field::prime(2), "nst");
    CHECK(find_para_units(*o.s).empty());
    CHECK(check_remark_identities(*o.s, *o.c, o.phi).pass);
  }

  TEST_CASE("orthogonality detects an unpaired component") {
    const Field& f = Field::prime(3);
    AlgebraPtr a = split_hurwitz(2, f);
    AbGroup z = AbGroup::integers();
    Grading g{a, z, {{AbElement(z, {1}), Matrix::from_rows(f, 2, {a->basis(0)})},
                     {AbElement(z, {0}), Matrix::from_rows(f, 2, {a->basis(1)})}}};
    CHECK_FALSE(check_orthogonality(g).pass);
    CHECK(check_orthogonality(main_grading(b42(f))).pass);
  }
}
