#include <doctest.h>

#include "csg/constructions.hpp"
#include "csg/gradings.hpp"

using namespace csg;

namespace {

AbElement z(std::int64_t k) { return AbElement(AbGroup::integers(), {k}); }

}  // namespace

TEST_SUITE("gradings") {
  TEST_CASE("Z-grading of B(1,2)") {
    AlgebraPtr a = b12(Field::prime(3));
    Grading g = gamma_grading_b12(a, z(1));
    CHECK(validate(g));
    CHECK(support(g).size() == 3);
    UniversalGroup u = universal_group(g);
    CHECK(u.group.str() == "Z");
    CHECK(u.injective);
  }

  TEST_CASE("inconsistent degrees are rejected") {
    AlgebraPtr a = b12(Field::prime(3));
    CHECK_THROWS_AS(from_named_degrees(a, AbGroup::integers(), {{"1", z(0)}, {"u", z(1)}, {"v", z(1)}}), Error);
    const Field& f = a->field();
    AbGroup zz = AbGroup::integers();
    Grading g{a, zz, {{z(0), Matrix::from_rows(f, 3, {a->basis("1")})},
                      {z(1), Matrix::from_rows(f, 3, {a->basis("u"), a->basis("v")})}}};
    CHECK(grading_failure(g).has_value());
    CHECK_FALSE(validate(g));
    CHECK_THROWS_AS(require_valid(g), Error);
  }

  TEST_CASE("main and trivial gradings") {
    AlgebraPtr a = b42(Field::prime(3));
    CHECK(universal_group(main_grading(a)).group.str() == "Z2");
    CHECK(universal_group(trivial_grading(a)).group.str() == "0");
    CHECK(is_refinement(main_grading(a), trivial_grading(a)));
    CHECK_FALSE(is_refinement(trivial_grading(a), main_grading(a)));
  }

  TEST_CASE("Cartan grading of the super split Cayley algebra") {
    AlgebraPtr c = super_split_cayley(Field::prime(2));
    CanonicalBasis cb = homogeneous_canonical_basis(c);
    AbGroup z2 = AbGroup::integers(2);
    Grading g = gamma_grading_dim8(cb, z2, make_triple(AbElement(z2, {1, 0}), AbElement(z2, {0, 1}), AbElement(z2, {-1, -1})));
    CHECK(validate(g));
    UniversalGroup u = universal_group(g);
    CHECK(u.group.str() == "Z^2");
    CHECK(u.injective);
    CHECK(is_refinement(g, main_grading(c)));
  }

  TEST_CASE("induced gradings and coarsenings") {
    AlgebraPtr a = b12(Field::prime(3));
    Grading g = gamma_grading_b12(a, z(1));
    AbGroup z2 = AbGroup::cyclic(2);
    Grading m = induce(g, AbHom::from_matrix(AbGroup::integers(), z2, {{1}}));
    CHECK(same_decomposition(m, main_grading(a)));
    std::vector<Grading> cs = coarsenings_enum(g);
    CHECK(cs.size() == 3);
    for (const Grading& c : cs) CHECK(is_refinement(g, c));
  }

  TEST_CASE("triples and their equivalence") {
    AbGroup z4 = AbGroup::cyclic(4);
    auto e = [&](std::int64_t k) { return AbElement(z4, {k}); };
    CHECK_THROWS_AS(make_triple(e(1), e(1), e(1)), Error);
    GradingTriple a = make_triple(e(1), e(2), e(1));
    CHECK(gamma_equiv(a, make_triple(e(2), e(1), e(1))));
    CHECK(gamma_equiv(a, make_triple(e(3), e(2), e(3))));
    CHECK_FALSE(gamma_equiv(make_triple(e(1), e(1), e(2)), a));
    CHECK(gamma_equiv(make_triple(z(1), z(-1), z(0)), make_triple(z(-1), z(1), z(0))));
  }

  TEST_CASE("decomposition keys ignore order and labels") {
    AlgebraPtr a = b12(Field::prime(3));
    Grading g = gamma_grading_b12(a, z(1));
    Grading h = gamma_grading_b12(a, z(-1));
    CHECK(decomposition_key(decomposition(g)) == decomposition_key(decomposition(h)));
    CHECK(same_decomposition(g, h));
  }

  TEST_CASE("product targets need a direct sum") {
    AlgebraPtr a = b12(Field::prime(3));
    Decomposition d = decomposition(main_grading(a));
    auto t = product_targets(*a, d);
    REQUIRE(t.has_value());
    d.pop_back();
    CHECK_FALSE(product_targets(*a, d).has_value());
  }
}
