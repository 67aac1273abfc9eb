#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lingres/hedge_algebra.hpp"

namespace lingres {

/// A propositional variable, or a truth constant used in atom position.
class Atom {
 public:
  static Atom variable(std::string name);
  static Atom constant(Term value);

  bool is_constant() const { return constant_.has_value(); }
  const std::string& name() const { return name_; }
  const Term& value() const { return *constant_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  /// Variables sort by name before constants.
  friend auto operator<=>(const Atom& a, const Atom& b) {
    if (a.is_constant() != b.is_constant()) return a.is_constant() <=> b.is_constant();
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return a.constant_ <=> b.constant_;
  }

 private:
  std::string name_;
  std::optional<Term> constant_;
};

/// `atom^label`
struct Literal {
  Atom atom;
  Term label;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of literals, kept sorted with duplicates removed so that two
/// clauses with the same literal set compare equal. Empty is the empty clause.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

class Formula {
 public:
  enum class Kind { Literal, Constant, Not, Or, And, Implies, Iff };

  static Formula literal(Literal lit);
  static Formula constant(Term value);
  static Formula negation(Formula operand);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  bool is_binary() const;
  const Literal& lit() const { return *node_->literal; }
  const Term& constant_value() const { return *node_->constant; }
  /// Operand of Not, left child of binary nodes.
  const Formula& lhs() const { return node_->children.at(0); }
  const Formula& rhs() const { return node_->children.at(1); }

  std::size_t depth() const;
  void collect_variables(std::set<std::string>& out) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::optional<Literal> literal;
    std::optional<Term> constant;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Interpretation = std::map<std::string, Term>;

Term evaluate_literal(const AlgebraSignature& sig, const Interpretation& interp,
                      const Literal& lit);
Term evaluate_formula(const AlgebraSignature& sig, const Interpretation& interp,
                      const Formula& f);
/// Join over literals; the empty clause evaluates to Bot.
Term evaluate_clause(const AlgebraSignature& sig, const Interpretation& interp,
                     const Clause& c);
/// Meet over clauses; the empty conjunction evaluates to Top.
Term evaluate_cnf(const AlgebraSignature& sig, const Interpretation& interp,
                  const std::vector<Clause>& cnf);

/// Value strictly above W.
bool satisfies(const AlgebraSignature& sig, const Interpretation& interp,
               const Formula& f);
/// Value at or below W.
bool falsifies(const AlgebraSignature& sig, const Interpretation& interp,
               const Formula& f);

/// A^a -> A^(negate a). Its value is the negation of the original's value
/// under every interpretation.
Literal negate_literal(const Literal& lit);

std::vector<Clause> to_cnf(const AlgebraSignature& sig, const Formula& f);

struct EnumerationOptions {
  std::size_t max_interpretations = 200'000;
  /// When false, atoms range over the domain without W.
  bool include_neutral = true;
};

/// Calls `visit` for every total assignment of `atoms` over the domain until it
/// returns false. Throws ResourceLimit if the count exceeds the cap.
/// Returns the number of interpretations visited.
template <typename Visit>
std::size_t for_each_interpretation(const AlgebraSignature& sig,
                                    const std::vector<std::string>& atoms,
                                    const EnumerationOptions& options, Visit&& visit);

std::size_t interpretation_count(const AlgebraSignature& sig, std::size_t atoms,
                                 const EnumerationOptions& options);

bool entails(const AlgebraSignature& sig, const Formula& a, const Formula& b,
             const EnumerationOptions& options = {});
bool equivalent(const AlgebraSignature& sig, const Formula& a, const Formula& b,
                const EnumerationOptions& options = {});
bool tautology(const AlgebraSignature& sig, const Formula& f,
               const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------

std::vector<Term> interpretation_range(const AlgebraSignature& sig,
                                       const EnumerationOptions& options);

template <typename Visit>
std::size_t for_each_interpretation(const AlgebraSignature& sig,
                                    const std::vector<std::string>& atoms,
                                    const EnumerationOptions& options, Visit&& visit) {
  const auto range = interpretation_range(sig, options);
  (void)interpretation_count(sig, atoms.size(), options);  // cap check
  Interpretation interp;
  for (const auto& a : atoms) interp[a] = range.front();
  std::vector<std::size_t> digits(atoms.size(), 0);
  std::size_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(static_cast<const Interpretation&>(interp))) return visited;
    std::size_t k = 0;
    for (; k < atoms.size(); ++k) {
      if (++digits[k] < range.size()) {
        interp[atoms[k]] = range[digits[k]];
        break;
      }
      digits[k] = 0;
      interp[atoms[k]] = range.front();
    }
    if (k == atoms.size()) return visited;
  }
}

}  // namespace lingres
