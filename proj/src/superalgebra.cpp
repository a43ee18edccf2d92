#include "csg/superalgebra.hpp"

#include <sstream>

namespace csg {

namespace {

std::string pair_name(const SuperAlgebra& a, std::size_t i, std::size_t j) {
  return "(" + a.basis_names()[i] + "," + a.basis_names()[j] + ")";
}

}  // namespace

SuperAlgebra::SuperAlgebra(const Field& f, std::string name, std::vector<std::string> basis_names,
                           std::vector<Parity> parity, Table table, Vec q0_values, Matrix polar)
    : field_(&f),
      name_(std::move(name)),
      names_(std::move(basis_names)),
      parity_(std::move(parity)),
      table_(std::move(table)),
      q0_(std::move(q0_values)),
      polar_(std::move(polar)) {
  const std::size_t n = parity_.size();
  if (names_.size() != n || table_.size() != n || q0_.size() != n || polar_.rows() != n || polar_.cols() != n)
    throw Error(ErrorKind::InvalidAlgebra, name_ + ": inconsistent sizes");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorKind::InvalidAlgebra, name_ + ": product table is not square");
    for (const auto& v : row)
      if (v.size() != n) throw Error(ErrorKind::InvalidAlgebra, name_ + ": product vector has wrong length");
  }
  sparse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!table_[i][j][k].is_zero()) sparse_[i * n + j].emplace_back(k, table_[i][j][k]);
  validate();
  find_unit();
}

void SuperAlgebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [k, c] : sparse(i, j))
        if (parity_[k] != parity_[i] + parity_[j])
          throw Error(ErrorKind::InvalidAlgebra, name_ + ": product " + pair_name(*this, i, j) + " violates parity");
  const Scalar two = field_->from_int(2);
  for (std::size_t i = 0; i < n; ++i) {
    if (parity_[i] == Parity::Odd && !q0_[i].is_zero())
      throw Error(ErrorKind::InvalidAlgebra, name_ + ": q0 given on odd vector " + names_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& bij = polar_(i, j);
      if (parity_[i] != parity_[j]) {
        if (!bij.is_zero()) throw Error(ErrorKind::InvalidAlgebra, name_ + ": b is not even at " + pair_name(*this, i, j));
      } else if (parity_[i] == Parity::Even) {
        if (bij != polar_(j, i)) throw Error(ErrorKind::InvalidAlgebra, name_ + ": even block not symmetric");
        if (i == j && bij != two * q0_[i])
          throw Error(ErrorKind::InvalidAlgebra, name_ + ": b(x,x) != 2q0(x) at " + names_[i]);
      } else {
        if (bij != -polar_(j, i) || (i == j && !bij.is_zero()))
          throw Error(ErrorKind::InvalidAlgebra, name_ + ": odd block not alternating at " + pair_name(*this, i, j));
      }
    }
  }
}

void SuperAlgebra::find_unit() {
  // e b_i = b_i = b_i e, linear in the coordinates of e
  const std::size_t n = dim();
  Matrix sys(*field_, 0, n);
  Vec rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      Vec left(n), right(n);
      for (std::size_t k = 0; k < n; ++k) {
        left[k] = table_[k][i][l];
        right[k] = table_[i][k][l];
      }
      Scalar target = i == l ? field_->one() : field_->zero();
      sys.append_row(left);
      rhs.push_back(target);
      sys.append_row(right);
      rhs.push_back(target);
    }
  if (n == 0) return;
  unit_ = solve(sys, rhs);
}

std::vector<std::size_t> SuperAlgebra::indices(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity_[i] == p) out.push_back(i);
  return out;
}

std::size_t SuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw Error(ErrorKind::InvalidAlgebra, name_ + " has no basis vector '" + name + "'");
}

Vec SuperAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = sparse(i, j);
      if (terms.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, s] : terms) r[k] += c * s;
    }
  }
  return r;
}

Scalar SuperAlgebra::q0(const Vec& x) const {
  const std::size_t n = dim();
  Scalar s = field_->zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    if (parity_[i] == Parity::Odd) throw Error(ErrorKind::OddArgument, "q0 of a vector with odd component " + names_[i]);
    if (!q0_[i].is_zero()) s += x[i] * x[i] * q0_[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!x[j].is_zero() && !polar_(i, j).is_zero()) s += x[i] * x[j] * polar_(i, j);
  }
  return s;
}

Scalar SuperAlgebra::b(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Scalar s = field_->zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!y[j].is_zero() && !polar_(i, j).is_zero()) s += x[i] * y[j] * polar_(i, j);
  }
  return s;
}

bool SuperAlgebra::is_homogeneous(const Vec& x, Parity p) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity_[i] != p && !x[i].is_zero()) return false;
  return true;
}

Vec SuperAlgebra::conjugate(const Vec& x) const {
  if (!unit_) throw Error(ErrorKind::NoUnit, name_ + " is not unital");
  return b(x, *unit_) * *unit_ - x;
}

std::string SuperAlgebra::format(const Vec& x) const {
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (!x[i].is_one()) s += x[i].str() + "*";
    s += names_[i];
  }
  return s.empty() ? "0" : s;
}

AlgebraPtr SuperAlgebra::with_product(std::string name, Table table) const {
  return make_algebra(*field_, std::move(name), names_, parity_, std::move(table), q0_, polar_);
}

AlgebraPtr SuperAlgebra::mutated(std::size_t i, std::size_t j, Vec product) const {
  Table t = table_;
  t[i][j] = std::move(product);
  return make_algebra(*field_, name_ + "-mutated", names_, parity_, std::move(t), q0_, polar_);
}

AlgebraPtr make_algebra(const Field& f, std::string name, std::vector<std::string> basis_names,
                        std::vector<Parity> parity, Table table, Vec q0_values, Matrix polar) {
  return std::make_shared<const SuperAlgebra>(f, std::move(name), std::move(basis_names), std::move(parity),
                                              std::move(table), std::move(q0_values), std::move(polar));
}

Element multiply(const Element& x, const Element& y) {
  if (x.alg != y.alg) throw Error(ErrorKind::MixedAlgebras, "operands belong to different algebras");
  return {x.alg, x.alg->mul(x.coords, y.coords)};
}

bool is_regular_superform(const SuperAlgebra& a) {
  const Field& f = a.field();
  auto odd = a.indices(Parity::Odd);
  auto even = a.indices(Parity::Even);
  Matrix ob(f, odd.size(), odd.size());
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j) ob(i, j) = a.polar()(odd[i], odd[j]);
  if (!odd.empty() && determinant(ob).is_zero()) return false;
  Matrix eb(f, even.size(), even.size());
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j) eb(i, j) = a.polar()(even[i], even[j]);
  if (even.empty()) return true;
  Matrix rad = nullspace(eb);
  if (rad.rows() == 0) return true;
  if (rad.rows() > 1) return false;
  Vec g = a.zero();
  for (std::size_t i = 0; i < even.size(); ++i) g[even[i]] = rad(0, i);
  return !a.q0(g).is_zero();
}

std::string check_names(unsigned checks) {
  std::vector<std::string> parts;
  if (checks & AlgebraHom) parts.push_back("algebra-hom");
  if (checks & Isometry) parts.push_back("isometry");
  if (checks & ParityPreserving) parts.push_back("parity-preserving");
  if (checks & InvolutionCommuting) parts.push_back("involution-commuting");
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

Morphism Morphism::identity(const AlgebraPtr& a) {
  return {a, a, Matrix::identity(a->field(), a->dim()), 0};
}

Morphism Morphism::from_images(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<Vec>& images) {
  Matrix m(source->field(), target->dim(), source->dim());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < target->dim(); ++i) m(i, j) = images[j][i];
  return {source, target, m, 0};
}

Morphism compose(const Morphism& g, const Morphism& f) { return {f.source, g.target, g.matrix * f.matrix, 0}; }

Morphism power(const Morphism& f, int k) {
  Morphism r = Morphism::identity(f.source);
  for (int i = 0; i < k; ++i) r = compose(f, r);
  return r;
}

std::optional<std::string> morphism_failure(const Morphism& f, unsigned checks) {
  const SuperAlgebra& s = *f.source;
  const SuperAlgebra& t = *f.target;
  const std::size_t n = s.dim();
  if (f.matrix.cols() != n || f.matrix.rows() != t.dim()) return "dimension mismatch";
  std::vector<Vec> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = f.image(j);
  if (checks & ParityPreserving)
    for (std::size_t i = 0; i < n; ++i)
      if (!t.is_homogeneous(img[i], s.parity(i))) return "parity-preserving fails at " + s.basis_names()[i];
  if (checks & AlgebraHom)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (f.apply(s.table()[i][j]) != t.mul(img[i], img[j]))
          return "algebra-hom fails at " + pair_name(s, i, j);
  if (checks & Isometry) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (t.b(img[i], img[j]) != s.polar()(i, j)) return "isometry fails on b at " + pair_name(s, i, j);
      if (s.parity(i) == Parity::Even) {
        if (!t.is_homogeneous(img[i], Parity::Even)) return "isometry fails: odd image of even " + s.basis_names()[i];
        if (t.q0(img[i]) != s.q0_values()[i]) return "isometry fails on q0 at " + s.basis_names()[i];
      }
    }
  }
  if (checks & InvolutionCommuting)
    for (std::size_t i = 0; i < n; ++i)
      if (f.apply(s.conjugate(s.basis(i))) != t.conjugate(img[i]))
        return "involution-commuting fails at " + s.basis_names()[i];
  return std::nullopt;
}

Morphism is_morphism(Morphism f, unsigned checks) {
  if (auto fail = morphism_failure(f, checks)) throw Error(ErrorKind::CheckFailed, *fail);
  f.verified |= checks;
  return f;
}

}  // namespace csg
