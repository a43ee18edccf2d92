#include "csg/axioms.hpp"

#include <algorithm>

namespace csg {

namespace {

std::string pair_witness(const SuperAlgebra& a, const char* what, std::initializer_list<Vec> xs) {
  std::string s = what;
  const char* names[] = {"x", "y", "z", "t"};
  std::size_t i = 0;
  for (const Vec& x : xs) {
    s += std::string(i ? ", " : ": ") + names[i] + " = " + a.format(x);
    ++i;
  }
  return s;
}

std::vector<Vec> even_elements(const SuperAlgebra& a) {
  auto idx = a.indices(Parity::Even);
  std::vector<Vec> out;
  for (const Vec& c : all_vectors(a.field(), idx.size())) {
    Vec v = a.zero();
    for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = c[k];
    out.push_back(v);
  }
  return out;
}

// basis vectors of the even part and their pairwise sums; a quadratic form
// vanishes on the even part iff it vanishes on this set
std::vector<Vec> polarization_set(const SuperAlgebra& a) {
  auto idx = a.indices(Parity::Even);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(a.basis(idx[i]));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) out.push_back(a.basis(idx[i]) + a.basis(idx[j]));
  return out;
}

bool exhaustive_ok(const SuperAlgebra& a) {
  if (!a.field().is_finite()) return false;
  std::uint64_t q = a.field().order(), n = 1;
  for (std::size_t i = 0; i < 2 * a.dim(Parity::Even); ++i) {
    n *= q;
    if (n > kExhaustiveLimit) return false;
  }
  return true;
}

// q0(xy) = q0(x) q0(y) on the even part
void check_multiplicative(const SuperAlgebra& a, AxiomReport& r) {
  const bool full = exhaustive_ok(a);
  r.mode = full ? "exhaustive" : "polarized";
  std::vector<Vec> xs = full ? even_elements(a) : polarization_set(a);
  std::vector<Scalar> q(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) q[i] = a.q0(xs[i]);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      ++r.count;
      if (a.q0(a.mul(xs[i], xs[j])) != q[i] * q[j]) {
        r.pass = false;
        r.witness = pair_witness(a, "i) q0(xy) != q0(x)q0(y)", {xs[i], xs[j]});
        return;
      }
    }
}

int sign(bool negative) { return negative ? -1 : 1; }

}  // namespace

AxiomReport check_hurwitz(const SuperAlgebra& a) {
  AxiomReport r{"hurwitz", true, "", std::nullopt, 0};
  if (!a.unit()) {
    r.pass = false;
    r.witness = "no unit element";
    return r;
  }
  if (!is_regular_superform(a)) {
    r.pass = false;
    r.witness = "superform is not regular";
    return r;
  }
  check_multiplicative(a, r);
  return r;
}

AxiomReport check_composition_super(const SuperAlgebra& a) {
  AxiomReport r{"composition", true, "", std::nullopt, 0};
  if (!is_regular_superform(a)) {
    r.pass = false;
    r.witness = "superform is not regular";
    return r;
  }
  check_multiplicative(a, r);
  if (!r.pass) return r;
  const std::size_t n = a.dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis(i));
  // ii) is quadratic in x0 and bilinear in y, z
  for (const Vec& x : polarization_set(a)) {
    Scalar qx = a.q0(x);
    for (const Vec& y : basis)
      for (const Vec& z : basis) {
        ++r.count;
        Scalar rhs = qx * a.b(y, z);
        if (a.b(a.mul(x, y), a.mul(x, z)) != rhs || a.b(a.mul(y, x), a.mul(z, x)) != rhs) {
          r.pass = false;
          r.witness = pair_witness(a, "ii) fails", {x, y, z});
          return r;
        }
      }
  }
  // iii) is multilinear
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          ++r.count;
          const bool px = a.parity(x) == Parity::Odd, py = a.parity(y) == Parity::Odd, pz = a.parity(z) == Parity::Odd;
          const Field& f = a.field();
          Scalar lhs = a.b(a.mul(basis[x], basis[y]), a.mul(basis[z], basis[t])) +
                       f.from_int(sign((px && py) != ((px && pz) != (py && pz)))) *
                           a.b(a.mul(basis[z], basis[y]), a.mul(basis[x], basis[t]));
          Scalar rhs = f.from_int(sign(py && pz)) * a.b(basis[x], basis[z]) * a.b(basis[y], basis[t]);
          if (lhs != rhs) {
            r.pass = false;
            r.witness = pair_witness(a, "iii) fails", {basis[x], basis[y], basis[z], basis[t]});
            return r;
          }
        }
  return r;
}

AxiomReport check_symmetric(const SuperAlgebra& a) {
  AxiomReport r{"symmetric", true, "basis", std::nullopt, 0};
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++r.count;
        Vec bx = a.basis(x), by = a.basis(y), bz = a.basis(z);
        if (a.b(a.mul(bx, by), bz) != a.b(bx, a.mul(by, bz))) {
          r.pass = false;
          r.witness = pair_witness(a, "b(xy,z) != b(x,yz)", {bx, by, bz});
          return r;
        }
      }
  return r;
}

namespace {

bool is_para_unit(const SuperAlgebra& s, const Vec& e) {
  if (is_zero(e) || s.mul(e, e) != e) return false;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec x = s.basis(i);
    Vec rhs = s.b(e, x) * e - x;
    if (s.mul(e, x) != rhs || s.mul(x, e) != rhs) return false;
  }
  return true;
}

}  // namespace

std::vector<Vec> find_para_units(const SuperAlgebra& s, ParaUnitMode mode) {
  std::vector<Vec> out;
  if (mode == ParaUnitMode::Exhaustive) {
    for (const Vec& e : even_elements(s))
      if (is_para_unit(s, e)) out.push_back(e);
    return out;
  }
  // a para-unit commutes with every element; solve inside that subspace
  auto even = s.indices(Parity::Even);
  const std::size_t n = s.dim();
  Matrix m(s.field(), n * n, even.size());
  for (std::size_t k = 0; k < even.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Vec d = s.mul(s.basis(even[k]), s.basis(i)) - s.mul(s.basis(i), s.basis(even[k]));
      for (std::size_t r = 0; r < n; ++r) m(i * n + r, k) = d[r];
    }
  Matrix z = nullspace(m);
  std::vector<Vec> span;
  for (std::size_t r = 0; r < z.rows(); ++r) {
    Vec v = s.zero();
    for (std::size_t k = 0; k < even.size(); ++k) v[even[k]] = z(r, k);
    span.push_back(v);
  }
  if (span.empty()) return out;
  if (span.size() == 1) {
    // (lambda z)^2 = lambda z forces z*z = mu z and lambda = 1/mu
    Vec zz = s.mul(span[0], span[0]);
    std::size_t p = 0;
    while (span[0][p].is_zero()) ++p;
    Scalar mu = zz[p] / span[0][p];
    if (mu.is_zero() || zz != mu * span[0]) return out;
    Vec e = mu.inv() * span[0];
    if (is_para_unit(s, e)) out.push_back(e);
    return out;
  }
  if (!s.field().is_finite())
    throw Error(ErrorKind::Unsupported, "para-unit search over Q needs a one-dimensional commuting even part");
  for (const Vec& c : all_vectors(s.field(), span.size())) {
    Vec e = s.zero();
    for (std::size_t k = 0; k < span.size(); ++k) e = e + c[k] * span[k];
    if (is_para_unit(s, e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AxiomReport check_para_reconstruction(const SuperAlgebra& s, const SuperAlgebra& c, const Vec& e) {
  AxiomReport r{"para-reconstruction", true, "basis", std::nullopt, 0};
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      ++r.count;
      Vec x = s.basis(i), y = s.basis(j);
      if (c.mul(x, y) != s.mul(s.mul(e, x), s.mul(y, e))) {
        r.pass = false;
        r.witness = pair_witness(s, "x.y != (e*x)*(y*e)", {x, y});
        return r;
      }
    }
  return r;
}

AxiomReport check_remark_identities(const SuperAlgebra& s, const SuperAlgebra& c, const Morphism& phi) {
  AxiomReport r{"twist-identities", true, "basis", std::nullopt, 0};
  if (!c.unit()) throw Error(ErrorKind::NoUnit, c.name() + " is not unital");
  const Vec& one = *c.unit();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec x = s.basis(i);
    ++r.count;
    if (phi.apply(x) != s.mul(c.conjugate(x), one)) {
      r.pass = false;
      r.witness = pair_witness(s, "phi(x) != conj(x)*1", {x});
      return r;
    }
    for (std::size_t j = 0; j < s.dim(); ++j) {
      ++r.count;
      Vec y = s.basis(j);
      if (c.mul(x, y) != s.mul(s.mul(one, x), s.mul(y, one))) {
        r.pass = false;
        r.witness = pair_witness(s, "x.y != (1*x)*(y*1)", {x, y});
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_orthogonality(const Grading& g) {
  AxiomReport r{"orthogonality", true, "basis", std::nullopt, 0};
  const SuperAlgebra& a = *g.alg;
  for (std::size_t i = 0; i < g.comps.size(); ++i)
    for (std::size_t j = 0; j < g.comps.size(); ++j) {
      const Matrix& x = g.comps[i].basis;
      const Matrix& y = g.comps[j].basis;
      Matrix pairing(a.field(), x.rows(), y.rows());
      for (std::size_t p = 0; p < x.rows(); ++p)
        for (std::size_t q = 0; q < y.rows(); ++q) pairing(p, q) = a.b(x.row_vec(p), y.row_vec(q));
      ++r.count;
      const std::string where = " (degrees " + g.comps[i].degree.str() + ", " + g.comps[j].degree.str() + ")";
      if (!(g.comps[i].degree + g.comps[j].degree).is_zero()) {
        for (std::size_t p = 0; p < pairing.rows(); ++p)
          for (std::size_t q = 0; q < pairing.cols(); ++q)
            if (!pairing(p, q).is_zero()) {
              r.pass = false;
              r.witness = "b(C^g, C^h) != 0 with g + h != 0" + where;
              return r;
            }
      } else if (pairing.rows() != pairing.cols() || determinant(pairing).is_zero()) {
        r.pass = false;
        r.witness = "C^g and C^-g are not paired nondegenerately" + where;
        return r;
      }
    }
  for (const auto& c : g.comps)
    if (!g.find(-c.degree)) {
      r.pass = false;
      r.witness = "C^-g = 0 for g = " + c.degree.str();
      return r;
    }
  return r;
}

}  // namespace csg
