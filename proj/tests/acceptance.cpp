// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lingres/cli.hpp"
#include "lingres/error.hpp"
#include "lingres/frontend.hpp"
#include "lingres/hedge_algebra.hpp"
#include "lingres/logic.hpp"
#include "lingres/oracle.hpp"
#include "lingres/resolution.hpp"
#include "support/random_problems.hpp"

using namespace lingres;

namespace {

// Pinned limits.
constexpr double kOrderingBudgetSeconds = 1e-3;
constexpr double kExampleBudgetSeconds = 1.0;
constexpr double kBatteryBudgetSeconds = 300.0;
constexpr double kLawBudgetSeconds = 30.0;

constexpr std::size_t kBatteryProblems = 1000;
constexpr std::size_t kUnsatProblems = 100;
constexpr std::size_t kUnsatDrawLimit = 20'000;
constexpr std::size_t kFormulas = 200;
constexpr std::size_t kEngineStepCap = 20'000;
constexpr std::size_t kNaiveStepCap = 20'000;
constexpr unsigned kBatterySeed = 20261019;
constexpr unsigned kUnsatSeed = 7;
constexpr unsigned kFormulaSeed = 11;

const testing::ClauseShape kShape{.max_atoms = 4, .max_clauses = 6, .max_literals = 3};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool g_all_pass = true;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  g_all_pass = g_all_pass && pass;
}

// Inference-level reliability bound, accumulated over criteria 3 to 5.
struct InvariantTally {
  std::size_t inferences = 0;
  std::size_t violations = 0;

  void scan(const ClauseStore& store) {
    const auto& sig = store.signature();
    for (std::size_t id = 0; id < store.arena_size(); ++id) {
      const auto& e = store.entry(static_cast<ClauseId>(id));
      if (!e.origin) continue;
      ++inferences;
      const Term& a3 = e.rc.reliability;
      const Term& a1 = store.entry(e.origin->first).rc.reliability;
      const Term& a2 = store.entry(e.origin->second).rc.reliability;
      const bool ok = above_neutral(sig, a3) && !less(sig, a1, a3) && !less(sig, a2, a3);
      if (!ok) ++violations;
    }
  }
};

InvariantTally g_invariant;

std::vector<ReliableClause> at_top(const std::vector<Clause>& clauses) {
  std::vector<ReliableClause> out;
  for (const auto& c : clauses) out.push_back({c, Term::top()});
  return out;
}

AlgebraSignature more_less(int depth) { return AlgebraSignature::build({"More"}, {"Less"}, depth); }

// ---------------------------------------------------------------------------

void ordering() {
  const auto sig = more_less(1);
  const auto t0 = Clock::now();
  const auto domain = enumerate_domain(sig);
  const double elapsed = seconds_since(t0);

  std::vector<std::string> hedged;
  for (const auto& t : domain) {
    if (t.depth() > 0) hedged.push_back(format_term(sig, t));
  }
  const std::vector<std::string> expected{"MoreFalse", "LessFalse", "LessTrue", "MoreTrue"};
  std::vector<std::string> chain;
  for (const auto& t : domain) {
    if (t.depth() > 0 || t == Term::falsity() || t == Term::truth()) {
      chain.push_back(format_term(sig, t));
    }
  }
  const std::vector<std::string> expected_chain{"MoreFalse", "False", "LessFalse",
                                                "LessTrue",  "True",  "MoreTrue"};
  const bool exact = hedged == expected && chain == expected_chain;
  std::ostringstream d;
  d << "chain";
  for (const auto& s : chain) d << ' ' << s;
  d << "; " << elapsed * 1e6 << " us (limit " << kOrderingBudgetSeconds * 1e6 << " us)";
  report(1, exact && elapsed < kOrderingBudgetSeconds, d.str());
}

void connectives() {
  const auto sig = more_less(1);
  const auto T = [&](std::string_view s) { return parse_term(sig, s); };
  const Term j = join(sig, T("LessFalse"), T("False"));
  const Term m = meet(sig, T("MoreTrue"), T("True"));
  const Term lc = luk_tconorm(sig, T("LessFalse"), T("False"), IndexSpace::TruthTerms);
  const Term lt = luk_tnorm(sig, T("MoreTrue"), T("True"), IndexSpace::TruthTerms);
  const bool pass = j == T("LessFalse") && m == T("True") && lc == T("LessTrue") &&
                    lt == T("True") && OrderedDomain(sig, IndexSpace::TruthTerms).size() == 6;
  report(2, pass,
         "join=" + format_term(sig, j) + " meet=" + format_term(sig, m) +
             " luk_tconorm=" + format_term(sig, lc) + " luk_tnorm=" + format_term(sig, lt));
}

void example() {
  const std::string path = std::string(LINGRES_TEST_DATA) + "/five_clauses.lp";
  const auto t0 = Clock::now();

  std::ostringstream out, err;
  const int code = cli::run({.input = path}, out, err);
  const std::string first_line = out.str().substr(0, out.str().find('\n'));
  bool pass = code == cli::kRefuted && first_line == "UNSAT reliability=PTrue";
  std::string detail = "'" + first_line + "'";

  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto problem = parse_problem(text.str());
  const auto& sig = problem.signature;
  const auto seeds = problem.seed_clauses();
  const auto RC = [&](std::string_view clause, std::string_view rel) {
    return ReliableClause{parse_clause(sig, clause), parse_term(sig, rel)};
  };

  auto alpha = ClauseStore::seeded(sig, Strategy::Alpha, seeds);
  pass = pass && saturate(alpha).status == SaturationResult::Status::Saturated;
  g_invariant.scan(alpha);
  const auto proof = refute(alpha);
  bool tree = false;
  if (proof) {
    // Input ids follow file order: clause k has id k-1.
    const auto& root = proof->root();
    const auto* mid = root.origin ? proof->find(root.origin->second) : nullptr;
    const auto* low = mid && mid->origin ? proof->find(mid->origin->second) : nullptr;
    tree = root.rc == RC("[]", "PTrue") && root.origin->first == 2 && mid &&
           mid->rc == RC("A^MFalse", "True") && mid->origin->first == 3 && low &&
           low->rc == RC("A^MFalse | B^False", "VTrue") && low->origin &&
           low->origin->first == 0 && low->origin->second == 4 && proof->nodes.size() == 7;
  }
  pass = pass && tree;
  detail += tree ? "; tree 1,5 -> VTrue, +4 -> True, +3 -> [] PTrue" : "; tree mismatch";

  auto naive = ClauseStore::seeded(sig, Strategy::Naive, seeds);
  const bool naive_done = saturate(naive).status == SaturationResult::Status::Saturated;
  g_invariant.scan(naive);
  bool has_ltrue = false;
  for (ClauseId id : naive.variants(Clause{})) {
    has_ltrue = has_ltrue || naive.entry(id).rc.reliability == parse_term(sig, "LTrue");
  }
  pass = pass && naive_done && has_ltrue;
  detail += has_ltrue ? "; naive has ([], LTrue)" : "; naive lacks ([], LTrue)";

  const double elapsed = seconds_since(t0);
  pass = pass && elapsed < kExampleBudgetSeconds;
  detail += "; " + std::to_string(elapsed) + " s";
  report(3, pass, detail);
}

// Small hedge set; depth 1 for three draws in four, depth 0 otherwise.
struct BatterySignatures {
  AlgebraSignature flat = more_less(0);
  AlgebraSignature one = more_less(1);
  std::vector<Term> flat_labels = testing::w_free_terms(flat);
  std::vector<Term> one_labels = testing::w_free_terms(one);
};

void completeness_battery(const BatterySignatures& sigs) {
  std::mt19937 rng(kBatterySeed);
  std::size_t agree = 0, unsat = 0, capped = 0, capped_unsat_missed = 0;
  const auto t0 = Clock::now();
  for (std::size_t n = 0; n < kBatteryProblems; ++n) {
    const bool deep = rng() % 4 != 0;
    const auto& sig = deep ? sigs.one : sigs.flat;
    const auto clauses = testing::random_clauses(rng, deep ? sigs.one_labels : sigs.flat_labels,
                                                 kShape);
    const bool brute = oracle::brute_unsat(sig, clauses).verdict == oracle::Verdict::Unsat;

    auto store = ClauseStore::seeded(sig, Strategy::Alpha, at_top(clauses));
    const auto run = saturate(store, {.limits = {.max_steps = kEngineStepCap}});
    g_invariant.scan(store);
    // A refutation found before the cap is final; so is a missing one on a
    // satisfiable problem, since inferences are sound.
    const bool refuted = refute(store).has_value();
    if (run.status == SaturationResult::Status::StepLimit) {
      ++capped;
      if (brute && !refuted) ++capped_unsat_missed;
    }
    unsat += brute;
    agree += refuted == brute;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << kBatteryProblems << " agree (" << unsat << " unsat); " << capped
    << " hit the " << kEngineStepCap << "-step cap, " << capped_unsat_missed
    << " of them unsat without a refutation; " << elapsed << " s (limit "
    << kBatteryBudgetSeconds << " s)";
  report(4, agree == kBatteryProblems && elapsed < kBatteryBudgetSeconds, d.str());
}

void reliability_battery(const BatterySignatures& sigs) {
  std::mt19937 rng(kUnsatSeed);
  std::size_t checked = 0, agree = 0, draws = 0, excluded = 0;
  std::string first_mismatch;
  while (checked < kUnsatProblems && draws < kUnsatDrawLimit) {
    ++draws;
    const bool deep = rng() % 4 != 0;
    const auto& sig = deep ? sigs.one : sigs.flat;
    const auto& labels = deep ? sigs.one_labels : sigs.flat_labels;
    const auto clauses = testing::random_clauses(rng, labels, kShape);
    if (oracle::brute_unsat(sig, clauses).verdict != oracle::Verdict::Unsat) continue;

    std::vector<Term> high;
    for (const auto& t : labels) {
      if (above_neutral(sig, t)) high.push_back(t);
    }
    std::vector<ReliableClause> seeds;
    for (const auto& c : clauses) seeds.push_back({c, high[rng() % high.size()]});

    auto store = ClauseStore::seeded(sig, Strategy::Alpha, seeds);
    const auto run = saturate(store, {.limits = {.max_steps = kEngineStepCap}});
    std::map<Clause, Term> closure;
    try {
      closure = oracle::naive_saturate_all(sig, seeds, {.max_steps = kNaiveStepCap});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceLimit) throw;
      ++excluded;
      continue;
    }
    if (run.status != SaturationResult::Status::Saturated) {
      ++excluded;
      continue;
    }
    g_invariant.scan(store);
    ++checked;
    const auto proof = refute(store);
    const auto it = closure.find(Clause{});
    const bool same = proof && it != closure.end() && proof->root().rc.reliability == it->second;
    agree += same;
    if (!same && first_mismatch.empty()) {
      first_mismatch = "; first mismatch at draw " + std::to_string(draws);
    }
  }
  std::ostringstream d;
  d << agree << "/" << checked << " agree over " << draws << " draws; " << excluded
    << " unsat problems excluded by the " << kNaiveStepCap << "-step caps" << first_mismatch;
  report(5, checked == kUnsatProblems && agree == checked, d.str());
}

void monotonicity() {
  const auto sig = AlgebraSignature::build({"V", "M"}, {"P", "L"}, 1);
  const auto domain = enumerate_domain(sig);
  std::vector<Term> high;
  for (const auto& t : domain) {
    if (above_neutral(sig, t)) high.push_back(t);
  }
  std::size_t cases = 0, violations = 0;
  for (const auto& b1 : domain) {
    for (const auto& b2 : domain) {
      if (!resolvable(sig, b1, b2)) continue;
      for (const auto& a : high) {
        for (std::size_t i = 0; i < high.size(); ++i) {
          for (std::size_t k = i + 1; k < high.size(); ++k) {
            // `high` is ascending, so high[i] < high[k].
            const Term g = resolvent_reliability(sig, a, high[i], b1, b2);
            const Term g2 = resolvent_reliability(sig, a, high[k], b1, b2);
            ++cases;
            violations += less(sig, g2, g);
          }
        }
      }
    }
  }
  report(6, cases > 0 && violations == 0,
         std::to_string(cases) + " tuples over " + std::to_string(domain.size()) +
             " terms, " + std::to_string(violations) + " violations");
}

void law_suites() {
  const auto t0 = Clock::now();
  const auto sig = default_signature();
  const auto d = enumerate_domain(sig);
  std::size_t checks = 0, failures = 0;
  const auto expect = [&](bool ok) {
    ++checks;
    failures += !ok;
  };
  const auto leq = [&](const Term& x, const Term& y) { return !less(sig, y, x); };

  for (const auto& x : d) {
    expect(negate(negate(x)) == x);
    for (const auto& y : d) {
      expect(meet(sig, x, y) == meet(sig, y, x));
      expect(join(sig, x, y) == join(sig, y, x));
      expect(negate(meet(sig, x, y)) == join(sig, negate(x), negate(y)));
      expect(negate(join(sig, x, y)) == meet(sig, negate(x), negate(y)));
      expect(less(sig, x, y) == less(sig, negate(y), negate(x)));
      for (const auto& z : d) {
        expect(meet(sig, x, meet(sig, y, z)) == meet(sig, meet(sig, x, y), z));
        expect(join(sig, x, join(sig, y, z)) == join(sig, join(sig, x, y), z));
        expect(meet(sig, x, join(sig, y, z)) == join(sig, meet(sig, x, y), meet(sig, x, z)));
        expect(join(sig, x, meet(sig, y, z)) == meet(sig, join(sig, x, y), join(sig, x, z)));
      }
    }
  }

  // Term-level Lukasiewicz operators follow the same laws on the full chain.
  const OrderedDomain chain(sig);
  for (const auto& x : d) {
    expect(chain.luk_tnorm(x, Term::top()) == x);
    expect(chain.luk_tconorm(x, Term::bottom()) == x);
    for (const auto& y : d) {
      expect(chain.luk_tnorm(x, y) == chain.luk_tnorm(y, x));
      expect(negate(chain.luk_tnorm(x, y)) == chain.luk_tconorm(negate(x), negate(y)));
      for (const auto& z : d) {
        if (leq(y, z)) {
          expect(leq(chain.luk_tnorm(x, y), chain.luk_tnorm(x, z)));
          expect(leq(chain.luk_tconorm(x, y), chain.luk_tconorm(x, z)));
        }
        expect(chain.luk_tnorm(x, chain.luk_tnorm(y, z)) ==
               chain.luk_tnorm(chain.luk_tnorm(x, y), z));
      }
    }
  }

  const std::size_t n0 = d.size() - 1;
  for (auto family : {extended::Family::Godel, extended::Family::Lukasiewicz}) {
    const auto T = [&](std::size_t m, std::size_t n) { return extended::tnorm(family, m, n, n0); };
    const auto S = [&](std::size_t m, std::size_t n) {
      return extended::tconorm(family, m, n, n0);
    };
    for (std::size_t m = 0; m <= n0; ++m) {
      expect(T(m, n0) == m && T(m, 0) == 0);
      expect(S(m, 0) == m && S(m, n0) == n0);
      for (std::size_t n = 0; n <= n0; ++n) {
        expect(T(m, n) == T(n, m) && S(m, n) == S(n, m));
        expect(T(m, n) == n0 - S(n0 - m, n0 - n));
        expect(S(m, n) == n0 - T(n0 - m, n0 - n));
        for (std::size_t k = 0; k <= n0; ++k) {
          if (n <= k) expect(T(m, n) <= T(m, k) && S(m, n) <= S(m, k));
          expect(T(m, T(n, k)) == T(T(m, n), k));
          expect(S(m, S(n, k)) == S(S(m, n), k));
        }
      }
    }
  }

  const double elapsed = seconds_since(t0);
  std::ostringstream out;
  out << checks << " checks over " << d.size() << " terms, " << failures << " failures; "
      << elapsed << " s (limit " << kLawBudgetSeconds << " s)";
  report(7, d.size() == 45 && failures == 0 && elapsed < kLawBudgetSeconds, out.str());
}

void cnf_equivalence() {
  const auto sig = AlgebraSignature::build({"V", "M"}, {"P", "L"}, 1);
  const auto labels = enumerate_domain(sig);
  std::mt19937 rng(kFormulaSeed);
  std::size_t interpretations = 0, violations = 0;
  for (std::size_t n = 0; n < kFormulas; ++n) {
    const auto f = testing::random_formula(rng, labels, {.atoms = 3, .max_depth = 4});
    const auto cnf = to_cnf(sig, f);
    std::set<std::string> vars;
    f.collect_variables(vars);
    for_each_interpretation(sig, {vars.begin(), vars.end()}, {},
                            [&](const Interpretation& interp) {
                              ++interpretations;
                              const bool lhs = satisfies(sig, interp, f);
                              const bool rhs = above_neutral(sig, evaluate_cnf(sig, interp, cnf));
                              violations += lhs != rhs;
                              return true;
                            });
  }
  report(8, violations == 0,
         std::to_string(kFormulas) + " formulas, " + std::to_string(interpretations) +
             " interpretations, " + std::to_string(violations) + " violations");
}

void invariant() {
  report(9, g_invariant.inferences > 0 && g_invariant.violations == 0,
         std::to_string(g_invariant.inferences) + " inferences, " +
             std::to_string(g_invariant.violations) + " violations");
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  const BatterySignatures sigs;
  guarded(1, ordering);
  guarded(2, connectives);
  guarded(3, example);
  guarded(4, [&] { completeness_battery(sigs); });
  guarded(5, [&] { reliability_battery(sigs); });
  guarded(6, monotonicity);
  guarded(7, law_suites);
  guarded(8, cnf_equivalence);
  guarded(9, invariant);
  std::printf("%s\n", g_all_pass ? "ALL PASS" : "SOME CRITERIA FAILED");
  return g_all_pass ? 0 : 1;
}
