#include "csg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace csg {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::string to_string(std::span<const Scalar> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, 0, cols);
  for (const Vec& r : rows) m.append_row(r);
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
  return out;
}

void Matrix::set_row(std::size_t r, std::span<const Scalar> v) {
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::append_row(std::span<const Scalar> v) {
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  Vec out = zero_vec(*field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix m(*a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << to_string(row(r));
  }
  os << "]";
  return os.str();
}

Echelon rref(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    Scalar inv = m(r, c).inv();
    for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(input.field(), 0, cols);
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(m.row(i));
  return {reduced, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(f, 0, m.cols());
  for (std::size_t freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    Vec v = zero_vec(f, m.cols());
    v[freec] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, freec);
    basis.append_row(v);
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b) {
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  Vec x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

Scalar determinant(const Matrix& input) {
  Matrix m = input;
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Scalar det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return f.zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    Scalar inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(f, 0, 0);
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix row_space(const Matrix& rows) { return rref(rows).reduced; }

bool in_row_space(const Matrix& rows, std::span<const Scalar> v) {
  Matrix m = rows;
  std::size_t before = rank(m);
  m.append_row(v);
  return rank(m) == before;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
  return m;
}

bool row_space_contains(const Matrix& b, const Matrix& a) {
  return rank(stack(b, a)) == rank(b);
}

bool same_row_space(const Matrix& a, const Matrix& b) { return row_space(a) == row_space(b); }

std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  const std::uint64_t q = f.order();
  std::vector<Scalar> elems = f.elements();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<Vec> out;
  out.reserve(total);
  Vec cur = zero_vec(f, n);
  std::vector<std::uint64_t> digits(n, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    out.push_back(cur);
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < q) {
        cur[i] = elems[digits[i]];
        break;
      }
      digits[i] = 0;
      cur[i] = elems[0];
    }
  }
  return out;
}

std::vector<Matrix> all_subspaces(const Field& f, std::size_t n, std::size_t k) {
  std::vector<Matrix> out;
  if (k > n) return out;
  if (k == 0) {
    out.emplace_back(f, 0, n);
    return out;
  }
  std::vector<Scalar> elems = f.elements();
  const std::size_t q = elems.size();
  // choose pivot columns, then fill the free entries right of each pivot
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    std::vector<std::size_t> digits(free.size(), 0);
    while (true) {
      Matrix m(f, k, n);
      for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = f.one();
      for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = elems[digits[t]];
      out.push_back(std::move(m));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size()) break;
    }
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

}  // namespace csg
