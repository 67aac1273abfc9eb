#include "lingres/logic.hpp"

#include <algorithm>

#include "lingres/error.hpp"

namespace lingres {

Atom Atom::variable(std::string name) {
  Atom a;
  a.name_ = std::move(name);
  return a;
}

Atom Atom::constant(Term value) {
  Atom a;
  a.constant_ = std::move(value);
  return a;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::literal(Literal lit) {
  return Formula(std::make_shared<const Node>(Node{Kind::Literal, std::move(lit), {}, {}}));
}

Formula Formula::constant(Term value) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Constant, {}, std::move(value), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, {}, {}, {std::move(operand)}}));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{kind, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Kind::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return binary(Kind::Iff, std::move(lhs), std::move(rhs));
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff:
      return true;
    default:
      return false;
  }
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

void Formula::collect_variables(std::set<std::string>& out) const {
  if (kind() == Kind::Literal && !lit().atom.is_constant()) out.insert(lit().atom.name());
  for (const auto& c : node_->children) c.collect_variables(out);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Literal: return a.lit() == b.lit();
    case Formula::Kind::Constant: return a.constant_value() == b.constant_value();
    default: return a.node_->children == b.node_->children;
  }
}

// ---------------------------------------------------------------------------
// Semantics

Term evaluate_literal(const AlgebraSignature& sig, const Interpretation& interp,
                      const Literal& lit) {
  Term value;
  if (lit.atom.is_constant()) {
    value = lit.atom.value();
  } else {
    auto it = interp.find(lit.atom.name());
    if (it == interp.end()) {
      throw Error(ErrorCode::UnassignedAtom, "atom '" + lit.atom.name() + "' is unassigned");
    }
    value = it->second;
  }
  const Term& label = lit.label;
  const bool value_high = above_neutral(sig, value);
  const bool label_high = above_neutral(sig, label);
  if (value_high && label_high) return meet(sig, value, label);
  if (!value_high && !label_high) return negate(join(sig, value, label));
  if (value_high) return join(sig, negate(value), label);
  return join(sig, value, negate(label));
}

Term evaluate_formula(const AlgebraSignature& sig, const Interpretation& interp,
                      const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Literal: return evaluate_literal(sig, interp, f.lit());
    case K::Constant: return f.constant_value();
    case K::Not: return negate(evaluate_formula(sig, interp, f.lhs()));
    default: break;
  }
  const Term l = evaluate_formula(sig, interp, f.lhs());
  const Term r = evaluate_formula(sig, interp, f.rhs());
  switch (f.kind()) {
    case K::Or: return join(sig, l, r);
    case K::And: return meet(sig, l, r);
    case K::Implies: return implies_value(sig, l, r);
    case K::Iff: return meet(sig, implies_value(sig, l, r), implies_value(sig, r, l));
    default: break;
  }
  return l;  // unreachable
}

Term evaluate_clause(const AlgebraSignature& sig, const Interpretation& interp,
                     const Clause& c) {
  Term acc = Term::bottom();
  for (const auto& lit : c.literals()) acc = join(sig, acc, evaluate_literal(sig, interp, lit));
  return acc;
}

Term evaluate_cnf(const AlgebraSignature& sig, const Interpretation& interp,
                  const std::vector<Clause>& cnf) {
  Term acc = Term::top();
  for (const auto& c : cnf) acc = meet(sig, acc, evaluate_clause(sig, interp, c));
  return acc;
}

bool satisfies(const AlgebraSignature& sig, const Interpretation& interp,
               const Formula& f) {
  return above_neutral(sig, evaluate_formula(sig, interp, f));
}

bool falsifies(const AlgebraSignature& sig, const Interpretation& interp,
               const Formula& f) {
  return !satisfies(sig, interp, f);
}

Literal negate_literal(const Literal& lit) { return Literal{lit.atom, negate(lit.label)}; }

// ---------------------------------------------------------------------------
// CNF

namespace {

using K = Formula::Kind;

// Negation normal form: only And/Or over Literal/Constant leaves.
Formula to_nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case K::Literal:
      return negated ? Formula::literal(negate_literal(f.lit())) : f;
    case K::Constant:
      return negated ? Formula::constant(negate(f.constant_value())) : f;
    case K::Not:
      return to_nnf(f.lhs(), !negated);
    case K::Or:
    case K::And: {
      const bool conj = (f.kind() == K::And) != negated;
      auto l = to_nnf(f.lhs(), negated);
      auto r = to_nnf(f.rhs(), negated);
      return conj ? Formula::conjunction(std::move(l), std::move(r))
                  : Formula::disjunction(std::move(l), std::move(r));
    }
    case K::Implies:
      return to_nnf(Formula::disjunction(Formula::negation(f.lhs()), f.rhs()), negated);
    case K::Iff:
      return to_nnf(Formula::conjunction(Formula::implication(f.lhs(), f.rhs()),
                                         Formula::implication(f.rhs(), f.lhs())),
                    negated);
  }
  return f;
}

using RawClauses = std::vector<std::vector<Literal>>;

// Leaves with a fixed value either vanish from their clause (<= W) or make the
// clause always satisfied (> W).
RawClauses fixed_leaf(const AlgebraSignature& sig, const Term& value) {
  if (above_neutral(sig, value)) return {};
  return {{}};
}

RawClauses nnf_to_clauses(const AlgebraSignature& sig, const Formula& f) {
  switch (f.kind()) {
    case K::Literal:
      if (f.lit().atom.is_constant()) {
        return fixed_leaf(sig, evaluate_literal(sig, {}, f.lit()));
      }
      return {{f.lit()}};
    case K::Constant:
      return fixed_leaf(sig, f.constant_value());
    case K::And: {
      auto out = nnf_to_clauses(sig, f.lhs());
      auto rhs = nnf_to_clauses(sig, f.rhs());
      out.insert(out.end(), std::make_move_iterator(rhs.begin()),
                 std::make_move_iterator(rhs.end()));
      return out;
    }
    case K::Or: {
      const auto lhs = nnf_to_clauses(sig, f.lhs());
      const auto rhs = nnf_to_clauses(sig, f.rhs());
      RawClauses out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& a : lhs) {
        for (const auto& b : rhs) {
          auto merged = a;
          merged.insert(merged.end(), b.begin(), b.end());
          out.push_back(std::move(merged));
        }
      }
      return out;
    }
    default:
      break;
  }
  throw Error(ErrorCode::MalformedTerm, "formula is not in negation normal form");
}

}  // namespace

std::vector<Clause> to_cnf(const AlgebraSignature& sig, const Formula& f) {
  std::vector<Clause> out;
  for (auto& raw : nnf_to_clauses(sig, to_nnf(f, false))) out.emplace_back(std::move(raw));
  return out;
}

// ---------------------------------------------------------------------------
// Entailment by enumeration

std::vector<Term> interpretation_range(const AlgebraSignature& sig,
                                       const EnumerationOptions& options) {
  auto domain = enumerate_domain(sig);
  if (!options.include_neutral) {
    std::erase(domain, Term::neutral());
  }
  return domain;
}

std::size_t interpretation_count(const AlgebraSignature& sig, std::size_t atoms,
                                 const EnumerationOptions& options) {
  std::size_t base = sig.domain_size() - (options.include_neutral ? 0 : 1);
  std::size_t count = 1;
  for (std::size_t i = 0; i < atoms; ++i) {
    if (count > options.max_interpretations / base) {
      throw Error(ErrorCode::ResourceLimit,
                  std::to_string(atoms) + " atoms over a " + std::to_string(base) +
                      "-term domain exceed the interpretation cap of " +
                      std::to_string(options.max_interpretations));
    }
    count *= base;
  }
  if (count > options.max_interpretations) {
    throw Error(ErrorCode::ResourceLimit, "interpretation cap exceeded");
  }
  return count;
}

namespace {

std::vector<std::string> variables_of(std::initializer_list<const Formula*> fs) {
  std::set<std::string> vars;
  for (const auto* f : fs) f->collect_variables(vars);
  return {vars.begin(), vars.end()};
}

}  // namespace

bool entails(const AlgebraSignature& sig, const Formula& a, const Formula& b,
             const EnumerationOptions& options) {
  bool holds = true;
  for_each_interpretation(sig, variables_of({&a, &b}), options,
                          [&](const Interpretation& interp) {
                            if (satisfies(sig, interp, a) && !satisfies(sig, interp, b)) {
                              holds = false;
                            }
                            return holds;
                          });
  return holds;
}

bool equivalent(const AlgebraSignature& sig, const Formula& a, const Formula& b,
                const EnumerationOptions& options) {
  return entails(sig, a, b, options) && entails(sig, b, a, options);
}

bool tautology(const AlgebraSignature& sig, const Formula& f,
               const EnumerationOptions& options) {
  bool holds = true;
  for_each_interpretation(sig, variables_of({&f}), options,
                          [&](const Interpretation& interp) {
                            holds = satisfies(sig, interp, f);
                            return holds;
                          });
  return holds;
}

}  // namespace lingres
