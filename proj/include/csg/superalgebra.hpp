#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csg/linalg.hpp"

namespace csg {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// (product table, row i column j) = coordinates of b_i b_j.
using Table = std::vector<std::vector<Vec>>;

/// Finite-dimensional superalgebra with a quadratic superform (q0, b).
///
/// q0 is recorded on the even basis vectors together with the full polar
/// matrix; in characteristic 2 the polar form does not determine q0.
class SuperAlgebra {
 public:
  /// Validates parity compatibility of the product, evenness of b, the
  /// relation b(x,x) = 2 q0(x) on even basis vectors and the alternating odd
  /// block. Throws InvalidAlgebra with the first violation.
  SuperAlgebra(const Field& f, std::string name, std::vector<std::string> basis_names,
               std::vector<Parity> parity, Table table, Vec q0_values, Matrix polar);

  const Field& field() const { return *field_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const { return parity_; }
  std::vector<std::size_t> indices(Parity p) const;
  std::size_t dim(Parity p) const { return indices(p).size(); }

  const std::vector<std::string>& basis_names() const { return names_; }
  /// Throws InvalidAlgebra for unknown names.
  std::size_t index_of(const std::string& name) const;
  Vec basis(std::size_t i) const { return unit_vec(*field_, dim(), i); }
  Vec basis(const std::string& name) const { return basis(index_of(name)); }
  Vec zero() const { return zero_vec(*field_, dim()); }

  const Table& table() const { return table_; }
  const std::vector<std::pair<std::size_t, Scalar>>& sparse(std::size_t i, std::size_t j) const {
    return sparse_[i * dim() + j];
  }
  const Vec& q0_values() const { return q0_; }
  const Matrix& polar() const { return polar_; }

  Vec mul(const Vec& x, const Vec& y) const;
  /// Throws OddArgument unless x lies in the even part.
  Scalar q0(const Vec& x) const;
  Scalar b(const Vec& x, const Vec& y) const;

  bool is_homogeneous(const Vec& x, Parity p) const;

  const std::optional<Vec>& unit() const { return unit_; }
  /// b(x,1)1 - x. Throws NoUnit.
  Vec conjugate(const Vec& x) const;

  /// Human-readable combination of basis names, e.g. "e1 + 2*u3".
  std::string format(const Vec& x) const;

  /// Same space, parity and superform with a different product.
  std::shared_ptr<const SuperAlgebra> with_product(std::string name, Table table) const;
  /// Same algebra with one structure constant replaced (mutation fixtures).
  std::shared_ptr<const SuperAlgebra> mutated(std::size_t i, std::size_t j, Vec product) const;

 private:
  void validate() const;
  void find_unit();

  const Field* field_;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Parity> parity_;
  Table table_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
  Vec q0_;
  Matrix polar_;
  std::optional<Vec> unit_;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

AlgebraPtr make_algebra(const Field& f, std::string name, std::vector<std::string> basis_names,
                        std::vector<Parity> parity, Table table, Vec q0_values, Matrix polar);

/// An element tied to its algebra.
struct Element {
  AlgebraPtr alg;
  Vec coords;
  std::string str() const { return alg->format(coords); }
};

/// Throws MixedAlgebras when the operands live in different algebras.
Element multiply(const Element& x, const Element& y);

/// q0 is regular (radical of the even polar block of dimension at most 1 and
/// q0 nonzero on it) and the odd block of b is nondegenerate.
bool is_regular_superform(const SuperAlgebra& a);

enum MorphismCheck : unsigned {
  AlgebraHom = 1,
  Isometry = 2,
  ParityPreserving = 4,
  InvolutionCommuting = 8,
  AllChecks = 15,
};

std::string check_names(unsigned checks);

/// Linear map recorded by its matrix: column j holds the image of basis vector j.
struct Morphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;
  unsigned verified = 0;

  Vec apply(const Vec& x) const { return matrix.apply(x); }
  Vec image(std::size_t j) const { return matrix.col_vec(j); }
  bool has(MorphismCheck c) const { return (verified & c) != 0; }

  static Morphism identity(const AlgebraPtr& a);
  /// Builds the matrix from the images of the basis vectors.
  static Morphism from_images(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<Vec>& images);
};

/// Composition g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism power(const Morphism& f, int k);

/// Empty when every requested check holds on all basis pairs, else a
/// description of the first failing check and basis pair.
std::optional<std::string> morphism_failure(const Morphism& f, unsigned checks);
/// Verifies the requested checks and records them. Throws CheckFailed.
Morphism is_morphism(Morphism f, unsigned checks);

}  // namespace csg
