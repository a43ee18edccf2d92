#include <doctest.h>

#include "csg/io.hpp"

using namespace csg;

TEST_SUITE("io") {
  TEST_CASE("algebra round trip") {
    for (auto [id, field] : {std::pair{"okubo-omega", "GF(4)"}, std::pair{"b42", "GF(9)"}, std::pair{"split4", "Q"}}) {
      CAPTURE(id);
      AlgebraPtr a = build_construction(id, Field::parse(field));
      AlgebraPtr b = algebra_from_json(to_json(*a));
      CHECK(b->table() == a->table());
      CHECK(b->q0_values() == a->q0_values());
      CHECK(b->polar() == a->polar());
      CHECK(b->parities() == a->parities());
      CHECK(to_json(*b).dump() == to_json(*a).dump());
    }
  }

  TEST_CASE("grading round trip") {
    BuiltEntry e = build_entry("okuboeq3", Field::gf4());
    Json j = to_json(e.grading);
    AlgebraPtr a = algebra_from_json(to_json(*e.alg));
    Grading g = grading_from_json(a, j);
    CHECK(same_decomposition(Grading{e.alg, g.group, g.comps}, e.grading));
    CHECK(to_json(g).dump() == j.dump());
    CHECK(j["group"] == "Z^2");
  }

  TEST_CASE("malformed input") {
    Json missing = {{"field", "GF(2)"}};
    Json bad_field = {{"field", "GF(8)"}, {"dim", 1}};
    CHECK_THROWS_AS(algebra_from_json(missing), Error);
    CHECK_THROWS_AS(algebra_from_json(bad_field), Error);
    BuiltEntry e = build_entry("eq1", Field::prime(3));
    Json j = to_json(e.grading);
    j["components"][1]["coords"] = {5};
    CHECK_THROWS_AS(grading_from_json(e.alg, j), Error);
  }

  TEST_CASE("reports serialize deterministically") {
    EntryReport r = verify_entry("eq7", Field::prime(2));
    CHECK(to_json(r).dump() == to_json(verify_entry("eq7", Field::prime(2))).dump());
    CHECK(to_json(r)["pass"] == true);
  }
}
