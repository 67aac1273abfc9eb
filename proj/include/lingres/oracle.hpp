#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lingres/hedge_algebra.hpp"
#include "lingres/logic.hpp"
#include "lingres/resolution.hpp"

namespace lingres::oracle {

// Brute-force reference checks. Everything here is computed by exhaustive
// enumeration and shares no inference code with the resolution engine; only
// the truth-value operations are common.

struct Caps {
  std::size_t max_atoms = 4;
  int max_depth = 2;
  std::size_t max_interpretations = 200'000;
  std::size_t max_steps = 50'000;
};

enum class Verdict { Sat, Unsat };

struct Report {
  Verdict verdict = Verdict::Sat;
  /// Satisfies every clause (value > W) when the verdict is Sat.
  std::optional<Interpretation> witness;
  std::size_t interpretations_checked = 0;
};

/// Unsat iff every interpretation gives some clause a value <= W.
Report brute_unsat(const AlgebraSignature& sig, const std::vector<Clause>& clauses,
                   const Caps& caps = {});

/// Closure under resolution keeping every (clause, reliability) pair; maps each
/// derivable clause to the largest reliability any derivation reaches.
std::map<Clause, Term> naive_saturate_all(const AlgebraSignature& sig,
                                          const std::vector<ReliableClause>& seeds,
                                          const Caps& caps = {},
                                          MergeMode merge = MergeMode::Off);

struct Mismatch {
  Clause clause;
  std::optional<Term> engine;  // reliability in the saturated store
  std::optional<Term> oracle;  // maximum over all derivations
};

struct Agreement {
  bool agrees = true;
  std::size_t clauses_checked = 0;
  std::optional<Term> empty_clause;  // reliability of the refutation, if any
  std::vector<Mismatch> mismatches;
};

/// Runs the alpha strategy to saturation and compares every stored
/// reliability with the naive closure's maximum for the same clause, in both
/// directions. Throws ResourceLimit when either side hits the step cap.
Agreement max_reliability_agrees(const AlgebraSignature& sig,
                                 const std::vector<ReliableClause>& seeds,
                                 const Caps& caps = {}, MergeMode merge = MergeMode::Off);

nlohmann::json to_json(const AlgebraSignature& sig, const Report& report);
nlohmann::json to_json(const AlgebraSignature& sig, const Agreement& agreement);

}  // namespace lingres::oracle
