#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/gradings.hpp"
#include "csg/search.hpp"

namespace csg {

enum class FieldNeed { Char3, Char2, Char2Omega };
const char* to_string(FieldNeed n);

struct CatalogEntry {
  std::string id;
  std::string label;         // short description of the display
  std::string construction;  // construction id of the graded algebra
  FieldNeed need;
  std::string claimed_group;
  std::vector<std::string> coarsening_of;  // entries this one coarsens
  bool okubo = false;                      // components must be phi-invariant
  std::string default_field;
};

/// The labeled gradings, in display order.
const std::vector<CatalogEntry>& catalog_entries();
/// Algebras that carry a "main-<alg>" and "trivial-<alg>" entry.
const std::vector<std::string>& catalog_algebras();
/// Labeled ids followed by the main/trivial ids.
std::vector<std::string> catalog_ids();
/// Throws Parse for an unknown id.
CatalogEntry catalog_entry(const std::string& id);

/// Empty when the field satisfies the entry's conditions.
std::optional<std::string> field_condition_failure(const CatalogEntry& e, const Field& f);

struct BuiltEntry {
  CatalogEntry entry;
  AlgebraPtr alg;
  Grading grading;
  std::optional<Morphism> phi;  // the Okubo twist automorphism, on alg
  AlgebraPtr hurwitz;           // the Hurwitz algebra behind alg, if any
};
/// Throws FieldConditionUnmet.
BuiltEntry build_entry(const std::string& id, const Field& f);

struct EntryCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};
struct EntryReport {
  std::string id;
  std::string field;
  std::string claimed_group;
  std::string group;
  bool pass = true;
  std::vector<EntryCheck> checks;
};
/// Validation, universal group against the claim (or `claimed_override`),
/// coarsening claims, phi-invariance (Okubo), conjugation invariance and
/// para-Hurwitz transfer (Hurwitz), orthogonality.
EntryReport verify_entry(const std::string& id, const Field& f,
                         const std::optional<std::string>& claimed_override = std::nullopt);

struct NonInstantiable {
  std::string id;
  std::string claim;
  std::string reason;
};
/// Classification items whose hypotheses cannot be met over a finite field.
const std::vector<NonInstantiable>& non_instantiable_items();

struct IsoCase {
  std::string algebra;
  std::string group;
  std::string source;  // g or a triple
  std::string target;
  bool expected = false;
  bool isomorphic = false;
  std::string via;  // "identity", "explicit map", "search", "none"
  SearchStatus status = SearchStatus::ProvenNone;
  std::uint64_t nodes = 0;
};
struct IsoReport {
  std::vector<IsoCase> cases;
  std::vector<IsoCase> mismatches;
  bool pass() const { return mismatches.empty(); }
};
/// Isomorphism classes of Gamma(G, g) on b12/b42 or Gamma(G, triple) on
/// super-cayley/okubo-omega, checked against g = +-h or gamma_equiv, for G
/// among Z4, Z6, Z2 x Z2, Z3 x Z3, Z2 x Z4.
IsoReport verify_iso_theorems(const std::string& algebra, const Field& f, const SearchBudget& budget = {});
std::vector<AbGroup> iso_test_groups();

/// Explicit maps realizing the "if" directions on the canonical basis.
Morphism cayley_swap_map(const CanonicalBasis& cb);  // u1<->u2, v1<->v2, u3,v3 -> -u3,-v3
Morphism cayley_sign_map(const CanonicalBasis& cb);  // e1<->e2, ui<->vi
Morphism b12_sign_map(const AlgebraPtr& a);          // u -> v, v -> -u
Morphism b42_sign_map(const AlgebraPtr& a);          // and e1<->e2, x -> -y, y -> -x

}  // namespace csg
