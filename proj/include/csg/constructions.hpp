#pragma once

#include <string>
#include <vector>

#include "csg/superalgebra.hpp"

namespace csg {

/// Vectors e1, e2, u1.., v1.. of a split Hurwitz (super)algebra realizing the
/// canonical multiplication table. Sizes 2 ({e1,e2}), 4 ({e1,e2,u1,v1}) or 8
/// ({e1,e2,u1,u2,u3,v1,v2,v3}).
struct CanonicalBasis {
  AlgebraPtr alg;
  std::vector<Vec> vectors;

  std::size_t size() const { return vectors.size(); }
  const Vec& e(int i) const { return vectors[static_cast<std::size_t>(i - 1)]; }
  const Vec& u(int i) const { return vectors[1 + static_cast<std::size_t>(i)]; }
  const Vec& v(int i) const { return vectors[1 + static_cast<std::size_t>(i) + (size() - 2) / 2]; }
  static std::vector<std::string> names(std::size_t size);
};

struct PeirceDecomposition {
  Vec e1;
  Vec e2;
  Matrix k;  // span{e1, e2}
  Matrix u;  // (e1 C) e2
  Matrix v;  // (e2 C) e1
};

/// Expected product of canonical vectors i and j as (coefficient, index) terms.
std::vector<std::pair<int, std::size_t>> canonical_product(std::size_t size, std::size_t i, std::size_t j);
/// Empty when the table and the norm relations hold, else the first mismatch.
std::optional<std::string> canonical_table_failure(const CanonicalBasis& cb);

/// Split Hurwitz algebra of dimension 2, 4 or 8 on its canonical basis.
AlgebraPtr split_hurwitz(std::size_t dim, const Field& f);
CanonicalBasis standard_canonical_basis(const AlgebraPtr& a);

/// Split Cayley algebra over a field of characteristic 2 as a superalgebra
/// with even part span{e1,e2,u3,v3}.
AlgebraPtr super_split_cayley(const Field& f);

/// 2-dimensional Hurwitz algebra F1 + Fw with w^2 + w + 1 = 0, a field when
/// X^2 + X + 1 is irreducible over F.
AlgebraPtr nonsplit_quadratic(const Field& f);

/// CD(Q, alpha) as a superalgebra with even part Q and odd part Qu
/// (characteristic 2). Basis: Q's basis, then each name suffixed by "u".
AlgebraPtr cayley_dickson_super(const AlgebraPtr& q, const Scalar& alpha);

AlgebraPtr b12(const Field& f);
AlgebraPtr b42(const Field& f);

AlgebraPtr para_hurwitz(const AlgebraPtr& c);
/// x*y = phi(conj x) phi^2(conj y); phi must be a parity-preserving
/// automorphism with phi^3 = 1.
AlgebraPtr petersson_twist(const AlgebraPtr& c, const Morphism& phi, const std::string& name = "");

Morphism tau_st(const CanonicalBasis& cb);
Morphism tau_nst(const CanonicalBasis& cb);
Morphism tau_omega(const CanonicalBasis& cb);
/// Linear map given on a canonical basis by images expressed in the same basis.
Morphism map_on_canonical_basis(const CanonicalBasis& cb, const std::vector<std::vector<Scalar>>& images);

/// The automorphism u -> u, v -> lambda u + v, 1 -> 1 of B(1,2).
Morphism b12_phi(const AlgebraPtr& b12alg, const Scalar& lambda);
AlgebraPtr b12_lambda(const Scalar& lambda);

struct OkuboSuper {
  AlgebraPtr s;       // (S, *)
  AlgebraPtr c;       // the super split Cayley algebra (S, .)
  Morphism phi;       // on C
  Morphism phi_s;     // the same map as an automorphism of S
  std::string label;  // "nst" or "omega"
};
OkuboSuper okubo_super(const Field& f, const std::string& variant);

/// Pseudo-octonion algebra: the tau_st twist of the split Cayley algebra.
AlgebraPtr pseudo_octonions(const Field& f);

PeirceDecomposition peirce(const AlgebraPtr& c, const Vec& e1);

/// Canonical basis of a split Cayley algebra with even vectors only, from an
/// isotropic seed a. Picks the first b (enumeration order) with
/// b(a, conj b) = 1, sets e1 = ab, and completes from the Peirce spaces.
CanonicalBasis canonical_basis_find(const AlgebraPtr& c, const Vec& a);

struct AdaptedBasis {
  CanonicalBasis basis;
  std::string label;
};
/// Canonical basis of homogeneous vectors of a super split Cayley algebra in
/// which phi acts as tau_nst, or as tau_omega when omega lies in F.
AdaptedBasis adapt_basis_to_automorphism(const AlgebraPtr& c, const Morphism& phi);

/// Canonical basis of homogeneous vectors with e1, e2 (and u3, v3 in
/// dimension 8) even, for CD(split2, a) and CD(split4, a).
CanonicalBasis homogeneous_canonical_basis(const AlgebraPtr& c);

/// Construction ids: split2, split4, split8, super-cayley, nonsplit2, cd2,
/// cd4, cdns2, b12, b42, para-<id>, b12lambda, okubo-nst, okubo-omega, p8.
struct BuildOptions {
  std::string alpha = "1";
  std::string lambda = "1";
  std::string variant = "nst";
};
AlgebraPtr build_construction(const std::string& id, const Field& f, const BuildOptions& opts = {});
std::vector<std::string> construction_ids();

}  // namespace csg
