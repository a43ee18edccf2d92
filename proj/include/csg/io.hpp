#pragma once

#include <json.hpp>

#include "csg/axioms.hpp"
#include "csg/catalog.hpp"
#include "csg/search.hpp"

namespace csg {

using Json = nlohmann::ordered_json;

/// {field, name, dim, basis, parity, structure: [[i, j, k, c], ...], q0_values, polar}
Json to_json(const SuperAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j);

Json to_json(const Vec& v);
Vec vec_from_json(const Field& f, const Json& j);

/// {group, components: [{degree, coords, even: [...], odd: [...]}]}
Json to_json(const Grading& g);
Grading grading_from_json(const AlgebraPtr& alg, const Json& j);

Json to_json(const Morphism& m);
Json to_json(const AxiomReport& r);
Json to_json(const SearchResult& r);
Json to_json(const AutomorphismList& r);
Json to_json(const GradingList& r);
Json to_json(const FineResult& r);
Json to_json(const UniversalGroup& u);
Json to_json(const EntryReport& r);
Json to_json(const IsoCase& c);
Json to_json(const IsoReport& r);

}  // namespace csg
