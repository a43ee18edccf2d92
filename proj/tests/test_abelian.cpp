#include <doctest.h>

#include "csg/abelian.hpp"

using namespace csg;

namespace {

bool unimodular(const IntMatrix& m) {
  auto d = int_determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_SUITE("abelian") {
  TEST_CASE("Smith normal form of a textbook matrix") {
    IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(m);
    CHECK(s.invariants == std::vector<std::int64_t>{2, 6, 12});
    CHECK(int_multiply(int_multiply(s.u, m), s.v) == s.d);
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
  }

  TEST_CASE("invariants are a divisibility chain") {
    IntMatrix m = {{4, 0, 0}, {0, 6, 0}, {0, 0, 0}};
    SmithForm s = smith_normal_form(m);
    CHECK(s.invariants == std::vector<std::int64_t>{2, 12});
  }

  TEST_CASE("canonical group forms") {
    CHECK(AbGroup::make(0, {2, 3}).str() == "Z6");
    CHECK(AbGroup::make(1, {4, 6}).str() == "Z x Z2 x Z12");
    CHECK(AbGroup::make(0, {1}).str() == "0");
    CHECK(AbGroup::make(0, {0}) == AbGroup::integers());
    CHECK(AbGroup::parse("Z2^2") == AbGroup::make(0, {2, 2}));
    CHECK(AbGroup::parse("Z x Z2").str() == "Z x Z2");
    CHECK(AbGroup::parse("Z^2").rank() == 2);
    CHECK(AbGroup::make(0, {3, 3}).order() == 9);
  }

  TEST_CASE("presentations") {
    Presentation p = presentation_to_group(2, {{2, 0}, {0, 3}});
    CHECK(p.group.str() == "Z6");
    CHECK(p.projection[0].order() == 2);
    CHECK(p.projection[1].order() == 3);
    Presentation free = presentation_to_group(2, {});
    CHECK(free.group == AbGroup::integers(2));
    // u + v = 0 and 2u = 0 inside Z^2
    Presentation q = presentation_to_group(2, {{1, 1}, {2, 0}});
    CHECK(q.group.str() == "Z2");
  }

  TEST_CASE("element arithmetic") {
    AbGroup g = AbGroup::make(1, {4});
    AbElement a(g, {1, 3}), b(g, {-1, 2});
    CHECK((a + b) == AbElement(g, {0, 1}));
    CHECK((-a).coords() == std::vector<std::int64_t>{-1, 1});
    CHECK(AbElement(g, {0, 2}).order() == 2);
    CHECK(a.order() == 0);
    CHECK(AbElement(AbGroup::cyclic(4), {5}).str() == "1 mod 4");
  }

  TEST_CASE("homomorphisms") {
    AbGroup z2 = AbGroup::integers(2), z4 = AbGroup::cyclic(4);
    AbHom h = AbHom::from_matrix(z2, z4, {{1}, {2}});
    CHECK(h.apply(AbElement(z2, {1, 1})) == AbElement(z4, {3}));
    CHECK(h.apply(AbElement(z2, {2, 1})).is_zero());
  }

  TEST_CASE("overflow is detected") {
    std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(int_multiply({{big}}, {{4}}), Error);
  }
}
