#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csg/field.hpp"

namespace csg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over one field. Collections of vectors are stored
/// as the rows of a matrix throughout the library.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return *field_; }
  bool has_field() const { return field_ != nullptr; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec col_vec(std::size_t c) const;
  std::vector<Vec> row_list() const;
  void set_row(std::size_t r, std::span<const Scalar> v);
  void append_row(std::span<const Scalar> v);

  Matrix transpose() const;
  Vec apply(std::span<const Scalar> v) const;  // this * v
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per row of `reduced`
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
/// Some x with m x = b, if the system is consistent.
std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Canonical basis (reduced echelon rows) of the row space.
Matrix row_space(const Matrix& rows);
bool in_row_space(const Matrix& rows, std::span<const Scalar> v);
/// Row spaces equal as subspaces.
bool same_row_space(const Matrix& a, const Matrix& b);
/// Row space of a is contained in the row space of b.
bool row_space_contains(const Matrix& b, const Matrix& a);
/// Rows of a stacked on top of rows of b.
Matrix stack(const Matrix& a, const Matrix& b);

/// All q^n vectors of F^n in lexicographic code order (finite fields only).
std::vector<Vec> all_vectors(const Field& f, std::size_t n);
/// Every k-dimensional subspace of F^n, each once, as its reduced echelon basis.
std::vector<Matrix> all_subspaces(const Field& f, std::size_t n, std::size_t k);

}  // namespace csg
