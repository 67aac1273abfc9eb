#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingres/hedge_algebra.hpp"
#include "lingres/logic.hpp"
#include "lingres/resolution.hpp"

namespace lingres {

// Problem files are line oriented; `%` starts a comment.
//
//   hedges: H+ = V < M ; H- = P < L
//   maxdepth: 2
//   clause: A^MFalse | B^False | C^VMTrue.
//   clause: A^True @ VTrue.
//   formula: (A^True -> B^MTrue) & !C^LFalse.
//   option: merge_duplicates = max_label
//
// Hedge lists are in ascending strength; without a `hedges:` line the default
// V < M ; P < L applies. Clauses without `@` get reliability
// Top. Formula operators bind `!` > `&` > `|` > `->` (right assoc) > `<->`.

using ProblemInput = std::variant<ReliableClause, Formula>;

struct Problem {
  AlgebraSignature signature = default_signature();
  std::vector<ProblemInput> inputs;
  std::map<std::string, std::string> directives;

  /// Clause inputs verbatim; formula inputs converted to CNF at reliability Top.
  std::vector<ReliableClause> seed_clauses() const;
  std::vector<std::string> variables() const;
};

Problem parse_problem(std::string_view text);
Formula parse_formula(const AlgebraSignature& sig, std::string_view text);
/// Accepts format_clause output: "A^True | B^LFalse" or "[]".
Clause parse_clause(const AlgebraSignature& sig, std::string_view text);

std::string format_literal(const AlgebraSignature& sig, const Literal& lit);
/// "A^MFalse | B^False"; the empty clause is "[]".
std::string format_clause(const AlgebraSignature& sig, const Clause& c);
std::string format_formula(const AlgebraSignature& sig, const Formula& f);
/// Canonical problem text; parse_problem accepts it back unchanged.
std::string serialize_problem(const Problem& problem);

MergeMode merge_mode_from_string(std::string_view s);
Strategy strategy_from_string(std::string_view s);
std::string_view to_string(MergeMode m);
std::string_view to_string(Strategy s);

}  // namespace lingres
