#include <doctest.h>

#include <set>

#include "csg/catalog.hpp"

using namespace csg;

TEST_SUITE("catalog") {
  TEST_CASE("every labeled display is present once") {
    std::set<std::string> ids;
    for (const auto& e : catalog_entries()) ids.insert(e.id);
    CHECK(ids.size() == catalog_entries().size());
    std::vector<std::string> expected = {"eq1", "eq2", "eq3", "eq4", "eq5", "eq6", "eq7", "cor1eq3"};
    for (int i = 5; i <= 13; ++i) expected.push_back("cor1eq" + std::to_string(i));
    for (int i = 1; i <= 12; ++i) expected.push_back("okuboeq" + std::to_string(i));
    CHECK(ids == std::set<std::string>(expected.begin(), expected.end()));
    for (const auto& a : catalog_algebras()) {
      CHECK_NOTHROW(catalog_entry("main-" + a));
      CHECK_NOTHROW(catalog_entry("trivial-" + a));
    }
    CHECK_THROWS_AS(catalog_entry("eq99"), Error);
  }

  TEST_CASE("eq4 is the Z3-grading, a coarsening of eq2") {
    EntryReport r = verify_entry("eq4", Field::prime(3));
    CHECK(r.pass);
    CHECK(r.group == "Z3");
    bool coarsening = false;
    for (const auto& c : r.checks) coarsening = coarsening || (c.name == "coarsening-of-eq2" && c.pass);
    CHECK(coarsening);
  }

  TEST_CASE("a wrong claimed group is a mismatch") {
    EntryReport r = verify_entry("eq4", Field::prime(3), std::string("Z4"));
    CHECK_FALSE(r.pass);
  }

  TEST_CASE("reductions of eq2 give eq3 and eq4") {
    const Field& f = Field::prime(3);
    Grading g = build_entry("eq2", f).grading;
    for (auto [n, id] : {std::pair{4, "eq3"}, std::pair{3, "eq4"}}) {
      Grading red = induce(g, AbHom::from_matrix(AbGroup::integers(), AbGroup::cyclic(n), {{1}}));
      CHECK(same_decomposition(red, build_entry(id, f).grading));
    }
  }

  TEST_CASE("field conditions") {
    CHECK_THROWS_AS(build_entry("eq1", Field::prime(2)), Error);
    CHECK_THROWS_AS(build_entry("okuboeq3", Field::prime(2)), Error);
    CHECK_NOTHROW(build_entry("okuboeq3", Field::gf4()));
    CHECK(field_condition_failure(catalog_entry("eq5"), Field::prime(2)) == std::nullopt);
  }

  TEST_CASE("Okubo entries are phi-invariant") {
    EntryReport r = verify_entry("okuboeq6", Field::prime(2));
    CHECK(r.pass);
    bool seen = false;
    for (const auto& c : r.checks) seen = seen || (c.name == "phi-invariant" && c.pass);
    CHECK(seen);
  }

  TEST_CASE("explicit maps realize g ~ -g") {
    const Field& f = Field::prime(3);
    BuiltEntry b = build_entry("eq1", f);
    Morphism m = b12_sign_map(b.alg);
    AbGroup z4 = AbGroup::cyclic(4);
    Grading g = gamma_grading_b12(b.alg, AbElement(z4, {1})), h = gamma_grading_b12(b.alg, AbElement(z4, {3}));
    CHECK_FALSE(graded_map_failure(m, g, h, MapMode::Isomorphism).has_value());
    Morphism n = b42_sign_map(build_entry("eq2", f).alg);
    CHECK_FALSE(morphism_failure(n, AlgebraHom | Isometry | ParityPreserving).has_value());
  }

  TEST_CASE("B(1,2) isomorphism classes over GF(3)") {
    IsoReport r = verify_iso_theorems("b12", Field::prime(3));
    CHECK(r.pass());
    CHECK(r.cases.size() > 0);
  }

  TEST_CASE("non-instantiable items are flagged") {
    CHECK(non_instantiable_items().size() >= 2);
    for (const auto& n : non_instantiable_items()) CHECK_FALSE(n.reason.empty());
  }
}
