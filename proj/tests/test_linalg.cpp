#include <doctest.h>

#include "csg/linalg.hpp"

using namespace csg;

namespace {

// Gaussian binomial [n choose k]_q.
std::uint64_t gaussian(std::uint64_t q, int n, int k) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int j = 0; j < n - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

Matrix rows_of(const Field& f, std::size_t n, std::vector<std::vector<int>> r) {
  std::vector<Vec> v;
  for (auto& row : r) {
    Vec x;
    for (int c : row) x.push_back(f.from_int(c));
    v.push_back(x);
  }
  return Matrix::from_rows(f, n, v);
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("subspace counts match Gaussian binomials") {
    for (const Field* f : {&Field::prime(2), &Field::prime(3), &Field::gf4()})
      for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
          CHECK(all_subspaces(*f, n, k).size() == gaussian(f->order(), n, k));
  }

  TEST_CASE("rank, nullspace and solve") {
    const Field& f = Field::prime(3);
    Matrix m = rows_of(f, 3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    CHECK(rank(m) == 2);
    Matrix n = nullspace(m);
    REQUIRE(n.rows() == 1);
    CHECK(is_zero(m.apply(n.row(0))));
    Vec b = m.apply(Vec{f.one(), f.zero(), f.from_int(2)});
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
    CHECK(determinant(m).is_zero());
  }

  TEST_CASE("inverse") {
    const Field& f = Field::gf9();
    Matrix m(f, 2, 2);
    m(0, 0) = f.generator();
    m(0, 1) = f.one();
    m(1, 0) = f.zero();
    m(1, 1) = f.from_int(2);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(f, 2));
  }

  TEST_CASE("row spaces") {
    const Field& f = Field::prime(2);
    Matrix a = rows_of(f, 3, {{1, 1, 0}, {0, 1, 1}});
    Matrix b = rows_of(f, 3, {{1, 0, 1}, {1, 1, 0}});
    CHECK(same_row_space(a, b));
    CHECK(row_space_contains(a, rows_of(f, 3, {{1, 0, 1}})));
    CHECK_FALSE(in_row_space(a, Vec{f.one(), f.zero(), f.zero()}));
    CHECK(all_vectors(f, 3).size() == 8);
  }
}
