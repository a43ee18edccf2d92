#pragma once

#include <functional>
#include <string>
#include <vector>

#include "csg/io.hpp"

namespace csg {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  Json detail;
};

/// Fields the acceptance suite runs an entry on: its default field and the
/// quadratic extension.
std::vector<const Field*> entry_fields(const CatalogEntry& e);

CriterionResult criterion_axioms();
CriterionResult criterion_canonical_basis();
CriterionResult criterion_catalog();
CriterionResult criterion_coarsenings();
CriterionResult criterion_b12_lambda_uniqueness();
CriterionResult criterion_isomorphisms();
CriterionResult criterion_okubo_facts();
CriterionResult criterion_para_units();
CriterionResult criterion_fineness();
CriterionResult criterion_orthogonality();

/// Criteria 1..10 in order. `progress` is called after each one.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& progress = {});
Json to_json(const CriterionResult& r);

}  // namespace csg
