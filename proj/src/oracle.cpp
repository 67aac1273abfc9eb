#include "lingres/oracle.hpp"

#include <set>

#include "lingres/error.hpp"
#include "lingres/frontend.hpp"

namespace lingres::oracle {

namespace {

void check_signature(const AlgebraSignature& sig, const Caps& caps) {
  if (sig.max_depth() > caps.max_depth) {
    throw Error(ErrorCode::ResourceLimit, "hedge depth " + std::to_string(sig.max_depth()) +
                                              " exceeds oracle cap " +
                                              std::to_string(caps.max_depth));
  }
}

std::vector<std::string> variables_of(const std::vector<Clause>& clauses) {
  std::set<std::string> vars;
  for (const auto& c : clauses) {
    for (const auto& lit : c.literals()) {
      if (!lit.atom.is_constant()) vars.insert(lit.atom.name());
    }
  }
  return {vars.begin(), vars.end()};
}

}  // namespace

Report brute_unsat(const AlgebraSignature& sig, const std::vector<Clause>& clauses,
                   const Caps& caps) {
  check_signature(sig, caps);
  const auto atoms = variables_of(clauses);
  if (atoms.size() > caps.max_atoms) {
    throw Error(ErrorCode::ResourceLimit, std::to_string(atoms.size()) +
                                              " atoms exceed oracle cap " +
                                              std::to_string(caps.max_atoms));
  }
  EnumerationOptions options;
  options.max_interpretations = caps.max_interpretations;

  Report report;
  report.verdict = Verdict::Unsat;
  report.interpretations_checked =
      for_each_interpretation(sig, atoms, options, [&](const Interpretation& interp) {
        for (const auto& c : clauses) {
          if (!above_neutral(sig, evaluate_clause(sig, interp, c))) return true;
        }
        report.verdict = Verdict::Sat;
        report.witness = interp;
        return false;
      });
  return report;
}

std::map<Clause, Term> naive_saturate_all(const AlgebraSignature& sig,
                                          const std::vector<ReliableClause>& seeds,
                                          const Caps& caps, MergeMode merge) {
  check_signature(sig, caps);
  std::vector<std::pair<Clause, Term>> items;
  std::set<std::pair<Clause, Term>> seen;
  for (const auto& s : seeds) {
    if (seen.emplace(s.clause, s.reliability).second) items.emplace_back(s.clause, s.reliability);
  }

  std::size_t derived = 0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    for (std::size_t m = 0; m < k; ++m) {
      // Copies: `items` may grow inside the loop.
      const Clause left = items[m].first;
      const Term left_rel = items[m].second;
      const Clause right = items[k].first;
      const Term right_rel = items[k].second;
      if (left == right) continue;  // self-resolution never raises a maximum
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
          const Literal& a = left[i];
          const Literal& b = right[j];
          if (a.atom != b.atom) continue;
          const Term low = meet(sig, a.label, b.label);
          const Term high = join(sig, a.label, b.label);
          if (!(compare(sig, low, Term::neutral()) < 0) ||
              !(compare(sig, high, Term::neutral()) > 0)) {
            continue;
          }
          Term reliability = left_rel;
          for (const Term& t : {right_rel, negate(low), high}) reliability = meet(sig, reliability, t);

          std::vector<Literal> rest;
          for (std::size_t x = 0; x < left.size(); ++x) {
            if (x != i) rest.push_back(left[x]);
          }
          for (std::size_t x = 0; x < right.size(); ++x) {
            if (x != j) rest.push_back(right[x]);
          }
          if (merge == MergeMode::MaxLabel) {
            std::map<Atom, Term> by_atom;
            for (const auto& lit : rest) {
              auto [it, fresh] = by_atom.emplace(lit.atom, lit.label);
              if (!fresh) it->second = join(sig, it->second, lit.label);
            }
            rest.clear();
            for (const auto& [atom, label] : by_atom) rest.push_back(Literal{atom, label});
          }
          Clause resolvent(std::move(rest));
          if (seen.emplace(resolvent, reliability).second) {
            if (++derived > caps.max_steps) {
              throw Error(ErrorCode::ResourceLimit,
                          "naive closure exceeded " + std::to_string(caps.max_steps) + " steps");
            }
            items.emplace_back(std::move(resolvent), reliability);
          }
        }
      }
    }
  }

  std::map<Clause, Term> best;
  for (const auto& [clause, reliability] : items) {
    auto [it, fresh] = best.emplace(clause, reliability);
    if (!fresh && compare(sig, it->second, reliability) < 0) it->second = reliability;
  }
  return best;
}

Agreement max_reliability_agrees(const AlgebraSignature& sig,
                                 const std::vector<ReliableClause>& seeds, const Caps& caps,
                                 MergeMode merge) {
  const auto reference = naive_saturate_all(sig, seeds, caps, merge);

  ClauseStore store = ClauseStore::seeded(sig, Strategy::Alpha, seeds);
  SaturationOptions options;
  options.merge = merge;
  options.limits.max_steps = caps.max_steps;
  if (saturate(store, options).status != SaturationResult::Status::Saturated) {
    throw Error(ErrorCode::ResourceLimit, "alpha saturation exceeded the step cap");
  }

  Agreement out;
  std::map<Clause, Term> engine;
  for (ClauseId id : store.live_ids()) {
    const auto& rc = store.entry(id).rc;
    engine.emplace(rc.clause, rc.reliability);
  }
  auto record = [&](const Clause& c, std::optional<Term> e, std::optional<Term> o) {
    out.agrees = false;
    out.mismatches.push_back(Mismatch{c, std::move(e), std::move(o)});
  };
  for (const auto& [clause, reliability] : engine) {
    ++out.clauses_checked;
    auto it = reference.find(clause);
    if (it == reference.end()) {
      record(clause, reliability, std::nullopt);
    } else if (it->second != reliability) {
      record(clause, reliability, it->second);
    }
  }
  for (const auto& [clause, reliability] : reference) {
    if (!engine.contains(clause)) record(clause, std::nullopt, reliability);
  }
  if (auto it = engine.find(Clause{}); it != engine.end()) out.empty_clause = it->second;
  return out;
}

nlohmann::json to_json(const AlgebraSignature& sig, const Report& report) {
  nlohmann::json j{
      {"verdict", report.verdict == Verdict::Unsat ? "unsat" : "sat"},
      {"interpretations", report.interpretations_checked},
      {"witness", nullptr},
  };
  if (report.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [atom, value] : *report.witness) w[atom] = format_term(sig, value);
    j["witness"] = std::move(w);
  }
  return j;
}

nlohmann::json to_json(const AlgebraSignature& sig, const Agreement& agreement) {
  auto term_or_null = [&](const std::optional<Term>& t) -> nlohmann::json {
    return t ? nlohmann::json(format_term(sig, *t)) : nlohmann::json(nullptr);
  };
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : agreement.mismatches) {
    mismatches.push_back({{"clause", format_clause(sig, m.clause)},
                          {"engine", term_or_null(m.engine)},
                          {"oracle", term_or_null(m.oracle)}});
  }
  return nlohmann::json{
      {"agrees", agreement.agrees},
      {"clauses_checked", agreement.clauses_checked},
      {"empty_clause", term_or_null(agreement.empty_clause)},
      {"mismatches", std::move(mismatches)},
  };
}

}  // namespace lingres::oracle
