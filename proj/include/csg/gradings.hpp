#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/abelian.hpp"
#include "csg/constructions.hpp"
#include "csg/superalgebra.hpp"

namespace csg {

/// Homogeneous component: rows of `basis` are parity-homogeneous vectors.
struct Component {
  AbElement degree;
  Matrix basis;

  std::size_t dim() const { return basis.rows(); }
};

/// G-grading A = (+) A^g, compatible with the parity.
struct Grading {
  AlgebraPtr alg;
  AbGroup group;
  std::vector<Component> comps;

  /// Component index of a degree, if present.
  std::optional<std::size_t> find(const AbElement& g) const;
  /// Rows of component i with the given parity.
  Matrix part(std::size_t i, Parity p) const;
  std::size_t dim(std::size_t i, Parity p) const { return part(i, p).rows(); }
};

/// Empty when the grading is valid, else the first violated condition.
std::optional<std::string> grading_failure(const Grading& g);
bool validate(const Grading& g);
/// Throws InvalidGrading with the failure message.
void require_valid(const Grading& g);

std::vector<AbElement> support(const Grading& g);

/// A decomposition into subspaces (rows homogeneous), ignoring labels.
using Decomposition = std::vector<Matrix>;
Decomposition decomposition(const Grading& g);

/// targets[s][t]: components met by products of components s and t. Empty
/// when the pieces do not form a direct sum of the whole algebra.
using ProductTargets = std::vector<std::vector<std::vector<std::size_t>>>;
std::optional<ProductTargets> product_targets(const SuperAlgebra& a, const Decomposition& d);

struct UniversalGroup {
  AbGroup group;
  std::vector<AbElement> degrees;  // per component, in order
  bool injective = false;
  std::optional<Grading> grading;  // over `group`, when injective
};

/// Universal group of a decomposition whose component products each lie in
/// a single component. Empty when some product spreads over several.
std::optional<UniversalGroup> universal_group(const AlgebraPtr& alg, const Decomposition& d);
UniversalGroup universal_group(const Grading& g);

Grading induce(const Grading& g, const AbHom& alpha);
/// Every component of `fine` lies inside some component of `coarse`.
bool is_refinement(const Grading& fine, const Grading& coarse);
/// Same set of component subspaces.
bool same_decomposition(const Grading& a, const Grading& b);
/// Key that identifies a decomposition regardless of order and labels.
std::string decomposition_key(const Decomposition& d);

/// Each coarsening (support partition) that is a set grading with injective
/// universal group, over that group; lexicographic partition order.
std::vector<Grading> coarsenings_enum(const Grading& g);

/// Groups homogeneous vectors with equal degrees into components.
Grading from_degrees(const AlgebraPtr& alg, const AbGroup& group, const std::vector<Vec>& vectors,
                     const std::vector<AbElement>& degrees);
/// Convenience: degrees given per basis vector name.
Grading from_named_degrees(const AlgebraPtr& alg, const AbGroup& group,
                           const std::vector<std::pair<std::string, AbElement>>& degrees);

Grading main_grading(const AlgebraPtr& alg);
Grading trivial_grading(const AlgebraPtr& alg);

/// deg 1 = 0, deg u = g, deg v = -g.
Grading gamma_grading_b12(const AlgebraPtr& alg, const AbElement& g);
/// deg e = 0, deg u = g, deg v = -g, deg x = 2g, deg y = -2g.
Grading gamma_grading_b42(const AlgebraPtr& alg, const AbElement& g);
/// deg e_j = 0, deg u1 = g, deg v1 = -g.
Grading gamma_grading_dim4(const CanonicalBasis& cb, const AbElement& g);

struct GradingTriple {
  AbElement g1, g2, g3;
  std::string str() const;
};
/// Throws TripleNotZeroSum.
GradingTriple make_triple(const AbElement& g1, const AbElement& g2, const AbElement& g3);
/// deg e_j = 0, deg u_i = g_i, deg v_i = -g_i.
Grading gamma_grading_dim8(const CanonicalBasis& cb, const AbGroup& group, const GradingTriple& t);
bool gamma_equiv(const GradingTriple& a, const GradingTriple& b);

}  // namespace csg
