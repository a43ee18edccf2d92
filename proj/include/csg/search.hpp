#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csg/gradings.hpp"

namespace csg {

enum class SearchStatus { Found, ProvenNone, BudgetExhausted };
const char* to_string(SearchStatus s);

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
};

/// Isomorphism: A^g -> B^g for every g. Equivalence: components onto
/// components. Ungraded: plain algebra isomorphism, parity ignored.
enum class MapMode { Isomorphism, Equivalence, Ungraded };

struct SearchResult {
  SearchStatus status = SearchStatus::ProvenNone;
  std::optional<Morphism> map;
  std::uint64_t nodes = 0;
  std::string note;
};

/// Empty when phi maps every component of `a` onto the component of `b` with
/// the same degree (Isomorphism) or onto some component (Equivalence).
std::optional<std::string> graded_map_failure(const Morphism& phi, const Grading& a, const Grading& b, MapMode mode);

/// Backtracking search for a (graded) isomorphism A -> B. Images are
/// assigned on the homogeneous basis of the source grading, the unit (or a
/// unique para-unit) first; products with a single unknown term are forced.
SearchResult find_graded_map(const Grading& a, const Grading& b, MapMode mode, const SearchBudget& budget = {});
/// Plain algebra isomorphism (parity ignored), e.g. between a superalgebra
/// and an ordinary algebra.
SearchResult find_algebra_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, const SearchBudget& budget = {});

struct AutomorphismList {
  bool complete = true;
  std::vector<Morphism> maps;
  std::uint64_t nodes = 0;
};
/// Every automorphism preserving each component of `constraints` (or every
/// superalgebra automorphism when none is given).
AutomorphismList enumerate_automorphisms(const AlgebraPtr& a, const std::optional<Grading>& constraints,
                                         const SearchBudget& budget = {});

struct GradingList {
  SearchStatus status = SearchStatus::ProvenNone;  // ProvenNone: the list is complete
  std::vector<Grading> gradings;
  std::uint64_t nodes = 0;
};
/// All gradings of an algebra of dimension <= 4 over a finite field, each
/// over its universal group, one per decomposition.
GradingList enumerate_all_gradings(const AlgebraPtr& a, const SearchBudget& budget = {});

struct FineResult {
  SearchStatus status = SearchStatus::ProvenNone;  // ProvenNone: fine, Found: refinable
  std::optional<Grading> witness;
  std::uint64_t nodes = 0;
  int depth = 1;
};
/// Tries every split of `depth` components (1 or 2) into two nonzero
/// parity-homogeneous pieces; a split is accepted when the refined
/// decomposition is a grading with injective universal group.
FineResult fine_check(const Grading& g, const SearchBudget& budget = {}, int depth = 1);

/// Every decomposition V = X (+) Y of the row space of `rows` (X or Y may be 0).
std::vector<std::pair<Matrix, Matrix>> two_piece_splits(const Matrix& rows);

}  // namespace csg
