#include "csg/constructions.hpp"

#include "csg/axioms.hpp"

#include <functional>

namespace csg {

namespace {

enum class Kind { E, U, V };

struct Slot {
  Kind kind;
  int index;  // 1-based
};

Slot slot(std::size_t size, std::size_t i) {
  const std::size_t m = (size - 2) / 2;
  if (i < 2) return {Kind::E, static_cast<int>(i) + 1};
  if (i < 2 + m) return {Kind::U, static_cast<int>(i - 1)};
  return {Kind::V, static_cast<int>(i - 1 - m)};
}

std::size_t index_of(std::size_t size, Kind k, int i) {
  const std::size_t m = (size - 2) / 2;
  if (k == Kind::E) return static_cast<std::size_t>(i - 1);
  if (k == Kind::U) return 1 + static_cast<std::size_t>(i);
  return 1 + static_cast<std::size_t>(i) + m;
}

// sign of the permutation (a,b,c) of (1,2,3), 0 if not a permutation
int epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return 1;
  return -1;
}

Vec combination(const Field& f, std::size_t n, const std::vector<std::pair<int, std::size_t>>& terms,
                const std::vector<Vec>& vectors) {
  Vec r = zero_vec(f, n);
  for (auto& [c, k] : terms) r = r + f.from_int(c) * vectors[k];
  return r;
}

void require_char(const Field& f, int p, const std::string& what) {
  if (f.characteristic() != p)
    throw Error(ErrorKind::WrongCharacteristic, what + " needs characteristic " + std::to_string(p) + ", got " + f.name());
}

Matrix linear_conditions(const SuperAlgebra& c, const std::vector<std::function<Vec(const Vec&)>>& maps,
                         const std::vector<std::size_t>& cols) {
  // column k holds the stacked images of basis vector cols[k]
  const std::size_t n = c.dim();
  Matrix m(c.field(), maps.size() * n, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    Vec x = c.basis(cols[k]);
    for (std::size_t t = 0; t < maps.size(); ++t) {
      Vec y = maps[t](x);
      for (std::size_t r = 0; r < n; ++r) m(t * n + r, k) = y[r];
    }
  }
  return m;
}

Matrix embed_rows(const SuperAlgebra& c, const Matrix& rows, const std::vector<std::size_t>& cols) {
  Matrix out(c.field(), 0, c.dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    Vec v = c.zero();
    for (std::size_t k = 0; k < cols.size(); ++k) v[cols[k]] = rows(r, k);
    out.append_row(v);
  }
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Peirce space {x : e x = x = x f, f x = 0 = x e} restricted to the given columns.
Matrix peirce_space(const SuperAlgebra& c, const Vec& e, const Vec& f, const std::vector<std::size_t>& cols) {
  std::vector<std::function<Vec(const Vec&)>> maps = {
      [&](const Vec& x) { return c.mul(e, x) - x; },
      [&](const Vec& x) { return c.mul(x, f) - x; },
      [&](const Vec& x) { return c.mul(f, x); },
      [&](const Vec& x) { return c.mul(x, e); },
  };
  return row_space(embed_rows(c, nullspace(linear_conditions(c, maps, cols)), cols));
}

Morphism verified_automorphism(const AlgebraPtr& a, const Matrix& m) {
  Morphism f{a, a, m, 0};
  f = is_morphism(f, AlgebraHom | Isometry);
  for (unsigned extra : {ParityPreserving, InvolutionCommuting})
    if (!morphism_failure(f, extra)) f.verified |= extra;
  return f;
}

std::vector<Vec> even_vectors(const SuperAlgebra& c) {
  auto idx = c.indices(Parity::Even);
  std::vector<Vec> out;
  for (const Vec& coords : all_vectors(c.field(), idx.size())) {
    Vec v = c.zero();
    for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = coords[k];
    out.push_back(v);
  }
  return out;
}

Vec nontrivial_even_idempotent(const SuperAlgebra& c) {
  const Vec& one = *c.unit();
  if (c.basis_names()[0] == "e1") {
    Vec e = c.basis(0);
    if (c.parity(0) == Parity::Even && c.mul(e, e) == e) return e;
  }
  for (const Vec& x : even_vectors(c))
    if (!is_zero(x) && x != one && c.mul(x, x) == x) return x;
  throw Error(ErrorKind::NotSplit, c.name() + ": even part has no nontrivial idempotent");
}

CanonicalBasis finish_dim8(const AlgebraPtr& c, Vec e1, Vec u1, Vec u2, Vec u3) {
  const SuperAlgebra& a = *c;
  Vec e2 = *a.unit() - e1;
  Vec v1 = a.mul(u2, u3), v2 = a.mul(u3, u1), v3 = a.mul(u1, u2);
  CanonicalBasis cb{c, {e1, e2, u1, u2, u3, v1, v2, v3}};
  if (auto fail = canonical_table_failure(cb)) throw Error(ErrorKind::CheckFailed, "canonical basis: " + *fail);
  return cb;
}

}  // namespace

std::vector<std::string> CanonicalBasis::names(std::size_t size) {
  if (size == 2) return {"e1", "e2"};
  if (size == 4) return {"e1", "e2", "u1", "v1"};
  return {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};
}

std::vector<std::pair<int, std::size_t>> canonical_product(std::size_t size, std::size_t i, std::size_t j) {
  Slot a = slot(size, i), b = slot(size, j);
  auto at = [&](Kind k, int idx) { return index_of(size, k, idx); };
  switch (a.kind) {
    case Kind::E:
      if (b.kind == Kind::E) return a.index == b.index ? std::vector<std::pair<int, std::size_t>>{{1, i}} : std::vector<std::pair<int, std::size_t>>{};
      if (b.kind == Kind::U && a.index == 1) return {{1, j}};
      if (b.kind == Kind::V && a.index == 2) return {{1, j}};
      return {};
    case Kind::U:
      if (b.kind == Kind::E) return b.index == 2 ? std::vector<std::pair<int, std::size_t>>{{1, i}} : std::vector<std::pair<int, std::size_t>>{};
      if (b.kind == Kind::V) return a.index == b.index ? std::vector<std::pair<int, std::size_t>>{{-1, at(Kind::E, 1)}} : std::vector<std::pair<int, std::size_t>>{};
      if (size == 8) {
        int k = 6 - a.index - b.index;
        int s = epsilon(a.index, b.index, k);
        if (s) return {{s, at(Kind::V, k)}};
      }
      return {};
    case Kind::V:
      if (b.kind == Kind::E) return b.index == 1 ? std::vector<std::pair<int, std::size_t>>{{1, i}} : std::vector<std::pair<int, std::size_t>>{};
      if (b.kind == Kind::U) return a.index == b.index ? std::vector<std::pair<int, std::size_t>>{{-1, at(Kind::E, 2)}} : std::vector<std::pair<int, std::size_t>>{};
      if (size == 8) {
        int k = 6 - a.index - b.index;
        int s = epsilon(a.index, b.index, k);
        if (s) return {{s, at(Kind::U, k)}};
      }
      return {};
  }
  return {};
}

namespace {

// expected polar value on canonical vectors i, j
int canonical_polar(std::size_t size, std::size_t i, std::size_t j) {
  Slot a = slot(size, i), b = slot(size, j);
  if (a.kind == Kind::E && b.kind == Kind::E) return a.index != b.index ? 1 : 0;
  if (a.kind != Kind::E && b.kind != Kind::E && a.kind != b.kind && a.index == b.index) return 1;
  return 0;
}

}  // namespace

std::optional<std::string> canonical_table_failure(const CanonicalBasis& cb) {
  const SuperAlgebra& a = *cb.alg;
  const Field& f = a.field();
  const std::size_t s = cb.size();
  auto names = CanonicalBasis::names(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Vec expect = combination(f, a.dim(), canonical_product(s, i, j), cb.vectors);
      if (a.mul(cb.vectors[i], cb.vectors[j]) != expect)
        return "product " + names[i] + "*" + names[j] + " = " + a.format(a.mul(cb.vectors[i], cb.vectors[j])) +
               ", expected " + a.format(expect);
      Scalar bexp = f.from_int(canonical_polar(s, i, j));
      // the odd block is alternating, so b(v_i, u_i) = -1 there
      bool odd_pair = a.is_homogeneous(cb.vectors[i], Parity::Odd) && a.is_homogeneous(cb.vectors[j], Parity::Odd);
      if (odd_pair && slot(s, i).kind == Kind::V) bexp = -bexp;
      if (a.b(cb.vectors[i], cb.vectors[j]) != bexp) return "polar form at (" + names[i] + "," + names[j] + ")";
    }
  for (std::size_t i = 0; i < s; ++i)
    if (a.is_homogeneous(cb.vectors[i], Parity::Even) && !a.q0(cb.vectors[i]).is_zero())
      return "q0(" + names[i] + ") != 0";
    else if (!a.is_homogeneous(cb.vectors[i], Parity::Even) && !a.is_homogeneous(cb.vectors[i], Parity::Odd))
      return names[i] + " is not homogeneous";
  return std::nullopt;
}

namespace {

AlgebraPtr split_on_canonical(std::size_t dim, const Field& f, const std::string& name, const std::vector<Parity>& parity) {
  auto names = CanonicalBasis::names(dim);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vec(f, dim, i));
  Table t(dim, std::vector<Vec>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t[i][j] = combination(f, dim, canonical_product(dim, i, j), basis);
  Matrix polar(f, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) polar(i, j) = f.from_int(canonical_polar(dim, i, j));
  return make_algebra(f, name, names, parity, t, zero_vec(f, dim), polar);
}

}  // namespace

AlgebraPtr split_hurwitz(std::size_t dim, const Field& f) {
  if (dim != 2 && dim != 4 && dim != 8) throw Error(ErrorKind::Unsupported, "split Hurwitz algebras have dimension 2, 4 or 8");
  return split_on_canonical(dim, f, "split" + std::to_string(dim), std::vector<Parity>(dim, Parity::Even));
}

CanonicalBasis standard_canonical_basis(const AlgebraPtr& a) {
  auto names = CanonicalBasis::names(a->dim());
  CanonicalBasis cb{a, {}};
  for (const auto& n : names) cb.vectors.push_back(a->basis(n));
  if (auto fail = canonical_table_failure(cb)) throw Error(ErrorKind::CheckFailed, a->name() + ": " + *fail);
  return cb;
}

AlgebraPtr super_split_cayley(const Field& f) {
  require_char(f, 2, "the super split Cayley algebra");
  const Parity E = Parity::Even, O = Parity::Odd;
  return split_on_canonical(8, f, "super-cayley", {E, E, O, O, E, O, O, E});
}

AlgebraPtr nonsplit_quadratic(const Field& f) {
  if (f.is_finite())
    for (const Scalar& x : f.elements())
      if ((x * x + x + f.one()).is_zero())
        throw Error(ErrorKind::FieldConditionUnmet, "X^2+X+1 splits over " + f.name());
  const Scalar z = f.zero(), o = f.one(), m = -f.one();
  Table t = {{{o, z}, {z, o}}, {{z, o}, {m, m}}};
  Matrix polar(f, 2, 2);
  polar(0, 0) = f.from_int(2);
  polar(1, 1) = f.from_int(2);
  polar(0, 1) = m;
  polar(1, 0) = m;
  return make_algebra(f, "nonsplit2", {"1", "w"}, {Parity::Even, Parity::Even}, t, {o, o}, polar);
}

AlgebraPtr cayley_dickson_super(const AlgebraPtr& q, const Scalar& alpha) {
  const Field& f = q->field();
  if (alpha.is_zero()) throw Error(ErrorKind::ZeroAlpha, "alpha must be nonzero");
  require_char(f, 2, "the Cayley-Dickson superalgebra");
  const std::size_t n = q->dim();
  if ((n != 2 && n != 4) || q->dim(Parity::Odd) != 0 || !q->unit())
    throw Error(ErrorKind::NotHurwitz, q->name() + " is not a Hurwitz algebra of dimension 2 or 4");
  if (!check_hurwitz(*q).pass) throw Error(ErrorKind::NotHurwitz, q->name() + " fails the Hurwitz axioms");
  const std::size_t N = 2 * n;
  auto lift = [&](const Vec& x, bool odd) {
    Vec r = zero_vec(f, N);
    for (std::size_t i = 0; i < n; ++i) r[odd ? n + i : i] = x[i];
    return r;
  };
  std::vector<std::string> names = q->basis_names();
  for (std::size_t i = 0; i < n; ++i) names.push_back(q->basis_names()[i] + "u");
  std::vector<Parity> parity(n, Parity::Even);
  parity.resize(N, Parity::Odd);
  Table t(N, std::vector<Vec>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const bool io = i >= n, jo = j >= n;
      Vec x = q->basis(i % n), y = q->basis(j % n);
      // (a + bu)(c + du) = (ac - alpha conj(d) b) + (da + b conj(c)) u
      if (!io && !jo) t[i][j] = lift(q->mul(x, y), false);
      if (!io && jo) t[i][j] = lift(q->mul(y, x), true);
      if (io && !jo) t[i][j] = lift(q->mul(x, q->conjugate(y)), true);
      if (io && jo) t[i][j] = lift(-alpha * q->mul(q->conjugate(y), x), false);
    }
  Vec q0 = zero_vec(f, N);
  Matrix polar(f, N, N);
  for (std::size_t i = 0; i < n; ++i) {
    q0[i] = q->q0_values()[i];
    for (std::size_t j = 0; j < n; ++j) {
      polar(i, j) = q->polar()(i, j);
      polar(n + i, n + j) = -alpha * q->polar()(i, j);
    }
  }
  return make_algebra(f, "cd(" + q->name() + "," + alpha.str() + ")", names, parity, t, q0, polar);
}

AlgebraPtr b12(const Field& f) {
  require_char(f, 3, "B(1,2)");
  const Scalar z = f.zero(), o = f.one(), m = -f.one();
  Vec one = {o, z, z}, u = {z, o, z}, v = {z, z, o}, zero = {z, z, z};
  Table t = {{one, u, v}, {u, zero, one}, {v, -one, zero}};
  Matrix polar(f, 3, 3);
  polar(0, 0) = f.from_int(2);
  polar(1, 2) = o;
  polar(2, 1) = m;
  return make_algebra(f, "b12", {"1", "u", "v"}, {Parity::Even, Parity::Odd, Parity::Odd}, t, {o, z, z}, polar);
}

AlgebraPtr b42(const Field& f) {
  require_char(f, 3, "B(4,2)");
  const std::size_t n = 6;
  enum { E1, E2, X, Y, U, V };
  auto vec = [&](std::initializer_list<std::pair<int, int>> terms) {
    Vec r = zero_vec(f, n);
    for (auto [c, k] : terms) r[static_cast<std::size_t>(k)] += f.from_int(c);
    return r;
  };
  Table t(n, std::vector<Vec>(n, zero_vec(f, n)));
  // End(V) = M2(F) with e1 = E11, e2 = E22, x = E12, y = E21
  t[E1][E1] = vec({{1, E1}});
  t[E1][X] = vec({{1, X}});
  t[E2][E2] = vec({{1, E2}});
  t[E2][Y] = vec({{1, Y}});
  t[X][E2] = vec({{1, X}});
  t[X][Y] = vec({{1, E1}});
  t[Y][E1] = vec({{1, Y}});
  t[Y][X] = vec({{1, E2}});
  // w . phi = phi(w) with u = (1,0), v = (0,1)
  t[U][E1] = vec({{1, U}});
  t[U][Y] = vec({{1, V}});
  t[V][E2] = vec({{1, V}});
  t[V][X] = vec({{1, U}});
  // phi . w = conj(phi)(w)
  t[E1][V] = vec({{1, V}});
  t[E2][U] = vec({{1, U}});
  t[X][V] = vec({{-1, U}});
  t[Y][U] = vec({{-1, V}});
  // u . v = (-, u) v
  t[U][U] = vec({{-1, X}});
  t[V][V] = vec({{1, Y}});
  t[U][V] = vec({{-1, E2}});
  t[V][U] = vec({{1, E1}});
  Matrix polar(f, n, n);
  polar(E1, E2) = f.one();
  polar(E2, E1) = f.one();
  polar(X, Y) = -f.one();
  polar(Y, X) = -f.one();
  polar(U, V) = f.one();
  polar(V, U) = -f.one();
  const Parity E = Parity::Even, O = Parity::Odd;
  return make_algebra(f, "b42", {"e1", "e2", "x", "y", "u", "v"}, {E, E, E, E, O, O}, t, zero_vec(f, n), polar);
}

AlgebraPtr para_hurwitz(const AlgebraPtr& c) {
  if (!c->unit()) throw Error(ErrorKind::NotHurwitz, c->name() + " is not unital");
  const std::size_t n = c->dim();
  Table t(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = c->mul(c->conjugate(c->basis(i)), c->conjugate(c->basis(j)));
  return c->with_product("para-" + c->name(), t);
}

AlgebraPtr petersson_twist(const AlgebraPtr& c, const Morphism& phi, const std::string& name) {
  if (auto fail = morphism_failure(phi, AlgebraHom | ParityPreserving))
    throw Error(ErrorKind::BadAutomorphism, *fail);
  Morphism phi2 = compose(phi, phi);
  if (compose(phi, phi2).matrix != Matrix::identity(c->field(), c->dim()))
    throw Error(ErrorKind::BadAutomorphism, "phi^3 is not the identity");
  const std::size_t n = c->dim();
  Table t(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = c->mul(phi.apply(c->conjugate(c->basis(i))), phi2.apply(c->conjugate(c->basis(j))));
  return c->with_product(name.empty() ? "petersson-" + c->name() : name, t);
}

Morphism map_on_canonical_basis(const CanonicalBasis& cb, const std::vector<std::vector<Scalar>>& images) {
  const SuperAlgebra& a = *cb.alg;
  const Field& f = a.field();
  if (cb.size() != a.dim()) throw Error(ErrorKind::Unsupported, "canonical basis does not span the algebra");
  Matrix p(f, a.dim(), a.dim());
  Matrix img(f, a.dim(), a.dim());
  for (std::size_t k = 0; k < cb.size(); ++k)
    for (std::size_t r = 0; r < a.dim(); ++r) {
      p(r, k) = cb.vectors[k][r];
      img(r, k) = images[k][r];
    }
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::CheckFailed, "canonical vectors are dependent");
  return verified_automorphism(cb.alg, p * img * *pinv);
}

namespace {

std::vector<std::vector<Scalar>> identity_images(const Field& f, std::size_t n) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(f, n, i));
  return out;
}

void require_size8(const CanonicalBasis& cb) {
  if (cb.size() != 8) throw Error(ErrorKind::Unsupported, "order-3 automorphisms need a dimension-8 canonical basis");
}

}  // namespace

Morphism tau_st(const CanonicalBasis& cb) {
  require_size8(cb);
  const Field& f = cb.alg->field();
  auto img = identity_images(f, 8);
  for (int i = 1; i <= 3; ++i) {
    int j = i % 3 + 1;
    img[index_of(8, Kind::U, i)] = unit_vec(f, 8, index_of(8, Kind::U, j));
    img[index_of(8, Kind::V, i)] = unit_vec(f, 8, index_of(8, Kind::V, j));
  }
  return map_on_canonical_basis(cb, img);
}

Morphism tau_nst(const CanonicalBasis& cb) {
  require_size8(cb);
  const Field& f = cb.alg->field();
  auto img = identity_images(f, 8);
  auto u = [&](int i) { return unit_vec(f, 8, index_of(8, Kind::U, i)); };
  auto v = [&](int i) { return unit_vec(f, 8, index_of(8, Kind::V, i)); };
  img[index_of(8, Kind::U, 1)] = u(2);
  img[index_of(8, Kind::U, 2)] = -u(1) - u(2);
  img[index_of(8, Kind::V, 1)] = -v(1) + v(2);
  img[index_of(8, Kind::V, 2)] = -v(1);
  return map_on_canonical_basis(cb, img);
}

Morphism tau_omega(const CanonicalBasis& cb) {
  require_size8(cb);
  const Field& f = cb.alg->field();
  auto w = f.primitive_cube_root();
  if (!w) throw Error(ErrorKind::NoCubeRoot, f.name() + " has no primitive cube root of 1");
  auto img = identity_images(f, 8);
  for (int i = 1; i <= 3; ++i) {
    img[index_of(8, Kind::U, i)] = w->pow(i) * unit_vec(f, 8, index_of(8, Kind::U, i));
    img[index_of(8, Kind::V, i)] = w->pow(-i) * unit_vec(f, 8, index_of(8, Kind::V, i));
  }
  return map_on_canonical_basis(cb, img);
}

Morphism b12_phi(const AlgebraPtr& a, const Scalar& lambda) {
  Vec u = a->basis("u"), v = a->basis("v");
  return verified_automorphism(a, Morphism::from_images(a, a, {a->basis("1"), u, lambda * u + v}).matrix);
}

AlgebraPtr b12_lambda(const Scalar& lambda) {
  AlgebraPtr a = b12(lambda.field());
  return petersson_twist(a, b12_phi(a, lambda), "b12lambda(" + lambda.str() + ")");
}

OkuboSuper okubo_super(const Field& f, const std::string& variant) {
  require_char(f, 2, "the Okubo superalgebra");
  AlgebraPtr c = super_split_cayley(f);
  CanonicalBasis cb = standard_canonical_basis(c);
  Morphism phi;
  if (variant == "nst")
    phi = tau_nst(cb);
  else if (variant == "omega")
    phi = tau_omega(cb);
  else
    throw Error(ErrorKind::Parse, "unknown Okubo variant '" + variant + "' (nst or omega)");
  AlgebraPtr s = petersson_twist(c, phi, "okubo-" + variant);
  Morphism phi_s = is_morphism(Morphism{s, s, phi.matrix, 0}, AlgebraHom | Isometry | ParityPreserving);
  return {s, c, phi, phi_s, variant};
}

AlgebraPtr pseudo_octonions(const Field& f) {
  AlgebraPtr c = split_hurwitz(8, f);
  return petersson_twist(c, tau_st(standard_canonical_basis(c)), "p8");
}

PeirceDecomposition peirce(const AlgebraPtr& c, const Vec& e1) {
  const SuperAlgebra& a = *c;
  if (!a.unit()) throw Error(ErrorKind::NoUnit, a.name() + " is not unital");
  Vec e2 = *a.unit() - e1;
  auto all = all_indices(a.dim());
  PeirceDecomposition p{e1, e2, Matrix::from_rows(a.field(), a.dim(), {e1, e2}), peirce_space(a, e1, e2, all),
                        peirce_space(a, e2, e1, all)};
  return p;
}

CanonicalBasis canonical_basis_find(const AlgebraPtr& c, const Vec& a) {
  const SuperAlgebra& alg = *c;
  if (alg.dim() != 8 || alg.dim(Parity::Odd) != 0 || !alg.unit())
    throw Error(ErrorKind::Unsupported, alg.name() + " is not a Cayley algebra with trivial odd part");
  if (is_zero(a) || !alg.q0(a).is_zero()) throw Error(ErrorKind::NotIsotropic, "seed " + alg.format(a) + " is not a nonzero isotropic vector");
  const Field& f = alg.field();
  std::optional<Vec> b;
  for (const Vec& x : all_vectors(f, 8))
    if (alg.b(a, alg.conjugate(x)).is_one()) {
      b = x;
      break;
    }
  if (!b) throw Error(ErrorKind::NotSplit, "no b with q(a, conj b) = 1");
  Vec e1 = alg.mul(a, *b);
  PeirceDecomposition p = peirce(c, e1);
  if (p.u.rows() != 3 || p.v.rows() != 3) throw Error(ErrorKind::NotSplit, "Peirce spaces are not 3-dimensional");
  Vec u1 = p.u.row_vec(0), u2 = p.u.row_vec(1);
  Vec w = alg.mul(u1, u2);
  for (const Vec& coef : all_vectors(f, 3)) {
    Vec u3 = coef[0] * p.u.row_vec(0) + coef[1] * p.u.row_vec(1) + coef[2] * p.u.row_vec(2);
    if (alg.b(w, u3).is_one()) return finish_dim8(c, e1, u1, u2, u3);
  }
  throw Error(ErrorKind::NotSplit, "no u3 with q(u1u2, u3) = 1");
}

AdaptedBasis adapt_basis_to_automorphism(const AlgebraPtr& c, const Morphism& phi) {
  const SuperAlgebra& a = *c;
  const Field& f = a.field();
  if (a.dim() != 8 || a.dim(Parity::Odd) != 4 || !a.unit())
    throw Error(ErrorKind::Unsupported, a.name() + " is not a super split Cayley algebra");
  if (auto fail = morphism_failure(phi, AlgebraHom | ParityPreserving)) throw Error(ErrorKind::BadAutomorphism, *fail);
  const Matrix id = Matrix::identity(f, 8);
  if (power(phi, 3).matrix != id) throw Error(ErrorKind::BadAutomorphism, "phi^3 is not the identity");
  auto even = a.indices(Parity::Even), odd = a.indices(Parity::Odd);
  for (auto i : even)
    if (phi.image(i) != a.basis(i)) throw Error(ErrorKind::BadAutomorphism, "phi is not the identity on the even part");
  Matrix fix(f, 8, odd.size());
  for (std::size_t k = 0; k < odd.size(); ++k) {
    Vec d = phi.image(odd[k]) - a.basis(odd[k]);
    for (std::size_t r = 0; r < 8; ++r) fix(r, k) = d[r];
  }
  if (nullspace(fix).rows() != 0) throw Error(ErrorKind::BadAutomorphism, "phi has nonzero fixed points on the odd part");

  Vec e1 = nontrivial_even_idempotent(a);
  Vec e2 = *a.unit() - e1;
  Matrix u_odd = peirce_space(a, e1, e2, odd);
  Matrix u_even = peirce_space(a, e1, e2, even);
  if (u_odd.rows() != 2 || u_even.rows() != 1) throw Error(ErrorKind::NotSplit, "unexpected Peirce space dimensions");

  std::string label;
  Vec u1, u2;
  if (auto w = f.primitive_cube_root()) {
    label = "omega";
    auto eigen = [&](const Scalar& lambda) -> Vec {
      for (const Vec& coef : all_vectors(f, 2)) {
        Vec x = coef[0] * u_odd.row_vec(0) + coef[1] * u_odd.row_vec(1);
        if (!is_zero(x) && phi.apply(x) == lambda * x) return x;
      }
      throw Error(ErrorKind::BadAutomorphism, "phi is not diagonalizable on the odd Peirce space");
    };
    u1 = eigen(*w);
    u2 = eigen(*w * *w);
  } else {
    label = "nst";
    u1 = u_odd.row_vec(0);
    u2 = phi.apply(u1);
  }
  Vec a3 = u_even.row_vec(0);
  Scalar s = a.b(a.mul(u1, u2), a3);
  if (s.is_zero()) throw Error(ErrorKind::CheckFailed, "q(u1u2, U_even) = 0");
  CanonicalBasis cb = finish_dim8(c, e1, u1, u2, s.inv() * a3);
  Morphism expected = label == "nst" ? tau_nst(cb) : tau_omega(cb);
  if (expected.matrix != phi.matrix) throw Error(ErrorKind::BadAutomorphism, "phi does not act as tau_" + label);
  return {cb, label};
}

CanonicalBasis homogeneous_canonical_basis(const AlgebraPtr& c) {
  const SuperAlgebra& a = *c;
  if (!a.unit()) throw Error(ErrorKind::NoUnit, a.name() + " is not unital");
  auto even = a.indices(Parity::Even), odd = a.indices(Parity::Odd);
  Vec e1 = nontrivial_even_idempotent(a);
  Vec e2 = *a.unit() - e1;
  if (a.dim() == 4 && odd.size() == 2) {
    Matrix u = peirce_space(a, e1, e2, odd), v = peirce_space(a, e2, e1, odd);
    if (u.rows() != 1 || v.rows() != 1) throw Error(ErrorKind::NotSplit, "unexpected Peirce space dimensions");
    Vec u1 = u.row_vec(0), v1 = v.row_vec(0);
    Scalar s = a.b(u1, v1);
    CanonicalBasis cb{c, {e1, e2, u1, s.inv() * v1}};
    if (auto fail = canonical_table_failure(cb)) throw Error(ErrorKind::CheckFailed, *fail);
    return cb;
  }
  if (a.dim() == 8 && odd.size() == 4) {
    Matrix u_odd = peirce_space(a, e1, e2, odd), u_even = peirce_space(a, e1, e2, even);
    if (u_odd.rows() != 2 || u_even.rows() != 1) throw Error(ErrorKind::NotSplit, "unexpected Peirce space dimensions");
    Vec u1 = u_odd.row_vec(0), u2 = u_odd.row_vec(1), a3 = u_even.row_vec(0);
    Scalar s = a.b(a.mul(u1, u2), a3);
    return finish_dim8(c, e1, u1, u2, s.inv() * a3);
  }
  throw Error(ErrorKind::Unsupported, a.name() + " has no homogeneous canonical basis of this shape");
}

std::vector<std::string> construction_ids() {
  return {"split2", "split4", "split8", "super-cayley", "nonsplit2", "cd", "cd2", "cd4", "cdns2", "b12", "b42",
          "para", "petersson", "b12lambda", "okubo-nst", "okubo-omega", "p8"};
}

AlgebraPtr build_construction(const std::string& id, const Field& f, const BuildOptions& opts) {
  if (id == "split2") return split_hurwitz(2, f);
  if (id == "split4") return split_hurwitz(4, f);
  if (id == "split8") return split_hurwitz(8, f);
  if (id == "super-cayley") return super_split_cayley(f);
  if (id == "nonsplit2") return nonsplit_quadratic(f);
  if (id == "cd" || id == "cd4") return cayley_dickson_super(split_hurwitz(4, f), f.parse_scalar(opts.alpha));
  if (id == "cd2") return cayley_dickson_super(split_hurwitz(2, f), f.parse_scalar(opts.alpha));
  if (id == "cdns2") return cayley_dickson_super(nonsplit_quadratic(f), f.parse_scalar(opts.alpha));
  if (id == "b12") return b12(f);
  if (id == "b42") return b42(f);
  if (id == "para") return para_hurwitz(split_hurwitz(8, f));
  if (id.rfind("para-", 0) == 0) return para_hurwitz(build_construction(id.substr(5), f, opts));
  if (id == "petersson") {
    AlgebraPtr c = split_hurwitz(8, f);
    CanonicalBasis cb = standard_canonical_basis(c);
    return petersson_twist(c, opts.variant == "omega" ? tau_omega(cb) : tau_nst(cb), "petersson-" + opts.variant);
  }
  if (id == "b12lambda") return b12_lambda(f.parse_scalar(opts.lambda));
  if (id == "okubo-nst") return okubo_super(f, "nst").s;
  if (id == "okubo-omega") return okubo_super(f, "omega").s;
  if (id == "okubo") return okubo_super(f, opts.variant).s;
  if (id == "p8") return pseudo_octonions(f);
  throw Error(ErrorKind::Parse, "unknown construction '" + id + "'");
}

}  // namespace csg
