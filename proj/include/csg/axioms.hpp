#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/gradings.hpp"
#include "csg/superalgebra.hpp"

namespace csg {

/// Outcome of one decision procedure. `mode` is "exhaustive", "polarized" or
/// "basis"; `count` is the number of instances evaluated.
struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::string mode;
  std::optional<std::string> witness;
  std::size_t count = 0;
};

/// Pairs of even elements are enumerated exhaustively up to this many.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 26;

/// Unit, regular superform, q0(xy) = q0(x) q0(y) on the even part.
AxiomReport check_hurwitz(const SuperAlgebra& a);
/// Items i) to iii) of a composition superalgebra.
AxiomReport check_composition_super(const SuperAlgebra& a);
/// b(xy, z) = b(x, yz) on basis triples.
AxiomReport check_symmetric(const SuperAlgebra& a);

enum class ParaUnitMode { Exhaustive, Algebraic };
/// Even idempotents e with e*x = x*e = b(e,x)e - x for all x.
std::vector<Vec> find_para_units(const SuperAlgebra& s, ParaUnitMode mode = ParaUnitMode::Exhaustive);
/// x.y = (e*x)*(y*e) on basis pairs, where `c` carries the product ".".
AxiomReport check_para_reconstruction(const SuperAlgebra& s, const SuperAlgebra& c, const Vec& e);

/// x.y = (1*x)*(y*1) and phi(x) = conj(x)*1, with (S,*) a twist of (C,.) by phi.
AxiomReport check_remark_identities(const SuperAlgebra& s, const SuperAlgebra& c, const Morphism& phi);

/// b(C^g, C^h) = 0 for g + h != 0 and C^g, C^-g paired nondegenerately.
AxiomReport check_orthogonality(const Grading& g);

}  // namespace csg
