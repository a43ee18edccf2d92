#include <doctest.h>

#include "csg/axioms.hpp"
#include "csg/constructions.hpp"
#include "csg/search.hpp"

#include <set>

using namespace csg;

namespace {

Grading z6(const AlgebraPtr& a, std::int64_t k) { return gamma_grading_b12(a, AbElement(AbGroup::cyclic(6), {k})); }

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("Gamma(Z6,1) and Gamma(Z6,5) on B(1,2) are isomorphic") {
    AlgebraPtr a = b12(Field::prime(3));
    Grading g1 = z6(a, 1), g5 = z6(a, 5);
    SearchResult r = find_graded_map(g1, g5, MapMode::Isomorphism);
    REQUIRE(r.status == SearchStatus::Found);
    REQUIRE(r.map.has_value());
    CHECK_FALSE(morphism_failure(*r.map, AlgebraHom | Isometry | ParityPreserving).has_value());
    CHECK_FALSE(graded_map_failure(*r.map, g1, g5, MapMode::Isomorphism).has_value());
    auto inv = inverse(r.map->matrix);
    REQUIRE(inv.has_value());
    Morphism back{a, a, *inv, 0};
    CHECK_FALSE(morphism_failure(back, AlgebraHom).has_value());
    CHECK_FALSE(graded_map_failure(back, g5, g1, MapMode::Isomorphism).has_value());
  }

  TEST_CASE("Gamma(Z6,1) and Gamma(Z6,2) are not") {
    AlgebraPtr a = b12(Field::prime(3));
    SearchResult r = find_graded_map(z6(a, 1), z6(a, 2), MapMode::Isomorphism);
    CHECK(r.status == SearchStatus::ProvenNone);
    CHECK(find_graded_map(z6(a, 2), z6(a, 1), MapMode::Isomorphism).status == SearchStatus::ProvenNone);
  }

  TEST_CASE("equivalence ignores labels") {
    AlgebraPtr a = b12(Field::prime(3));
    CHECK(find_graded_map(z6(a, 1), z6(a, 2), MapMode::Equivalence).status == SearchStatus::Found);
  }

  TEST_CASE("every grading is isomorphic to itself") {
    AlgebraPtr a = b42(Field::prime(3));
    Grading g = main_grading(a);
    SearchResult r = find_graded_map(g, g, MapMode::Isomorphism);
    CHECK(r.status == SearchStatus::Found);
  }

  TEST_CASE("graded automorphisms of the Z-grading of B(1,2) are diagonal") {
    const Field& f = Field::prime(3);
    AlgebraPtr a = b12(f);
    AutomorphismList l = enumerate_automorphisms(a, gamma_grading_b12(a, AbElement(AbGroup::integers(), {1})));
    CHECK(l.complete);
    REQUIRE(l.maps.size() == 2);
    for (const Morphism& m : l.maps) {
      Scalar lam = m.image(1)[1];
      CHECK(m.image(1) == lam * a->basis("u"));
      CHECK(m.image(2) == lam.inv() * a->basis("v"));
    }
  }

  TEST_CASE("tau_nst is among the automorphisms preserving the Cartan components") {
    OkuboSuper o = okubo_super(Field::prime(2), "nst");
    CanonicalBasis cb = standard_canonical_basis(o.c);
    AbGroup z2 = AbGroup::integers(2);
    Grading cartan = gamma_grading_dim8(
        cb, z2, make_triple(AbElement(z2, {1, 0}), AbElement(z2, {0, 1}), AbElement(z2, {-1, -1})));
    AutomorphismList l = enumerate_automorphisms(o.c, std::nullopt);
    bool seen = false;
    for (const Morphism& m : l.maps) seen = seen || m.matrix == o.phi.matrix;
    CHECK(l.complete);
    CHECK(seen);
    CHECK(validate(cartan));
  }

  TEST_CASE("budget exhaustion is reported separately") {
    AlgebraPtr c = split_hurwitz(8, Field::prime(2));
    AutomorphismList l = enumerate_automorphisms(c, std::nullopt, SearchBudget{10});
    CHECK_FALSE(l.complete);
    GradingList g = enumerate_all_gradings(b12(Field::prime(3)), SearchBudget{2});
    CHECK(g.status == SearchStatus::BudgetExhausted);
  }

  TEST_CASE("all gradings of a one-dimensional algebra") {
    const Field& f = Field::prime(3);
    Table t{{Vec{f.one()}}};
    Matrix polar(f, 1, 1);
    polar(0, 0) = f.from_int(2);
    AlgebraPtr a = make_algebra(f, "F", {"1"}, {Parity::Even}, t, Vec{f.one()}, polar);
    GradingList l = enumerate_all_gradings(a);
    CHECK(l.status == SearchStatus::ProvenNone);
    REQUIRE(l.gradings.size() == 1);
    CHECK(l.gradings.front().group.is_trivial());
  }

  TEST_CASE("all gradings of B(1,2) over GF(3)") {
    AlgebraPtr a = b12(Field::prime(3));
    GradingList l = enumerate_all_gradings(a);
    REQUIRE(l.status == SearchStatus::ProvenNone);
    std::vector<Grading> model = coarsenings_enum(gamma_grading_b12(a, AbElement(AbGroup::integers(), {1})));
    std::set<std::string> keys;
    for (const Grading& g : l.gradings) keys.insert(decomposition_key(decomposition(g)));
    for (const Grading& g : l.gradings) {
      bool covered = false;
      for (const Grading& m : model) covered = covered || find_graded_map(g, m, MapMode::Equivalence).status == SearchStatus::Found;
      CHECK(covered);
      for (const Grading& c : coarsenings_enum(g)) CHECK(keys.count(decomposition_key(decomposition(c))) == 1);
    }
    CHECK_THROWS_AS(enumerate_all_gradings(b42(Field::prime(3))), Error);
  }

  TEST_CASE("fine checks") {
    AlgebraPtr a = b12(Field::prime(3));
    FineResult t = fine_check(trivial_grading(a));
    CHECK(t.status == SearchStatus::Found);
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->comps.size() == 2);
    CHECK(fine_check(gamma_grading_b12(a, AbElement(AbGroup::integers(), {1}))).status == SearchStatus::ProvenNone);
  }

  TEST_CASE("two-piece splits of a plane over GF(2)") {
    CHECK(two_piece_splits(Matrix::identity(Field::prime(2), 2)).size() == 8);
  }
}
