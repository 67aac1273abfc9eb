#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lingres/hedge_algebra.hpp"
#include "lingres/logic.hpp"

namespace lingres::testing {

/// Domain terms other than W; labels from this pool keep refutation complete.
std::vector<Term> w_free_terms(const AlgebraSignature& sig);

std::vector<std::string> atom_names(std::size_t count);

struct ClauseShape {
  std::size_t max_atoms = 4;
  std::size_t max_clauses = 6;
  std::size_t max_literals = 3;
};

/// Between 1 and max_clauses non-empty clauses over the first 1..max_atoms
/// atom names, labels drawn uniformly from `labels`.
std::vector<Clause> random_clauses(std::mt19937& rng, const std::vector<Term>& labels,
                                   const ClauseShape& shape);

struct FormulaShape {
  std::size_t atoms = 3;
  std::size_t max_depth = 4;
  bool constants = true;  // allow Constant leaves and constant atoms
};

Formula random_formula(std::mt19937& rng, const std::vector<Term>& labels,
                       const FormulaShape& shape);

}  // namespace lingres::testing
