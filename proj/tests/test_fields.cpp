#include <doctest.h>

#include "csg/field.hpp"

using namespace csg;

namespace {

// GF(4) = GF(2)[x]/(x^2+x+1) by hand: elements a0 + a1 x coded a0 + 2 a1.
int gf4_mul(int a, int b) {
  int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
  int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
  c0 += c2;  // x^2 = x + 1
  c1 += c2;
  return (c0 & 1) | ((c1 & 1) << 1);
}

// GF(9) = GF(3)[x]/(x^2+1): code a0 + 3 a1.
int gf9_mul(int a, int b) {
  int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
  int c0 = a0 * b0 - a1 * b1, c1 = a0 * b1 + a1 * b0;
  return ((c0 % 3 + 3) % 3) + 3 * ((c1 % 3 + 3) % 3);
}

}  // namespace

TEST_SUITE("fields") {
  TEST_CASE("GF(4) multiplication matches polynomial arithmetic") {
    const Field& f = Field::gf4();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        CHECK((f.element(a) * f.element(b)).code() == gf4_mul(a, b));
        CHECK((f.element(a) + f.element(b)).code() == (a ^ b));
      }
  }

  TEST_CASE("GF(9) multiplication matches polynomial arithmetic") {
    const Field& f = Field::gf9();
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b) CHECK((f.element(a) * f.element(b)).code() == gf9_mul(a, b));
    Scalar x = f.generator();
    CHECK(x * x == -f.one());
  }

  TEST_CASE("inverses by brute force") {
    for (const Field* f : {&Field::prime(2), &Field::prime(3), &Field::prime(7), &Field::gf4(), &Field::gf9()})
      for (const Scalar& a : f->elements()) {
        if (a.is_zero()) continue;
        int hits = 0;
        for (const Scalar& b : f->elements()) hits += (a * b).is_one();
        CHECK(hits == 1);
        CHECK((a * a.inv()).is_one());
      }
  }

  TEST_CASE("orders and characteristic") {
    CHECK(Field::gf4().order() == 4);
    CHECK(Field::gf9().characteristic() == 3);
    CHECK(Field::parse("GF(5)").order() == 5);
    CHECK_THROWS_AS(Field::rationals().order(), Error);
  }

  TEST_CASE("primitive cube roots") {
    CHECK_FALSE(Field::prime(2).primitive_cube_root().has_value());
    auto w = Field::gf4().primitive_cube_root();
    REQUIRE(w.has_value());
    CHECK(*w * *w + *w + Field::gf4().one() == Field::gf4().zero());
    CHECK(Field::prime(7).primitive_cube_root().has_value());
    CHECK_FALSE(Field::prime(3).primitive_cube_root().has_value());
  }

  TEST_CASE("rationals stay reduced") {
    const Field& q = Field::rationals();
    Scalar a = q.fraction(2, 4), b = q.fraction(-1, 3);
    CHECK(a == q.fraction(1, 2));
    CHECK((a + b) == q.fraction(1, 6));
    CHECK((a / b) == q.fraction(-3, 2));
    CHECK(q.fraction(3, -6).den() == 2);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Field::prime(2).zero().inv(), Error);
    CHECK_THROWS_AS(Field::prime(2).one() + Field::prime(3).one(), Error);
    CHECK_THROWS_AS(Field::parse("GF(8)"), Error);
    CHECK_THROWS_AS(Field::parse("R"), Error);
  }

  TEST_CASE("parse and str round trip") {
    for (const Field* f : {&Field::prime(3), &Field::gf4(), &Field::gf9()})
      for (const Scalar& a : f->elements()) CHECK(f->parse_scalar(a.str()) == a);
    const Field& q = Field::rationals();
    CHECK(q.parse_scalar(q.fraction(-7, 3).str()) == q.fraction(-7, 3));
    CHECK(&Field::parse("GF(4)") == &Field::gf4());
  }
}
