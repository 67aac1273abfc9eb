#include "lingres/resolution.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <sstream>

#include "lingres/error.hpp"
#include "lingres/frontend.hpp"
#include "mask_kernel.hpp"

namespace lingres {

// The generator alone fixes which side of W a term lies on, so the meet is
// below W iff either label is, and the join above W iff either label is.
bool resolvable(const AlgebraSignature&, const Term& b1, const Term& b2) {
  auto below = [](const Term& t) { return t.generator() < Generator::W; };
  auto above = [](const Term& t) { return t.generator() > Generator::W; };
  return (below(b1) || below(b2)) && (above(b1) || above(b2));
}

Term resolvent_reliability(const AlgebraSignature& sig, const Term& a1, const Term& a2,
                           const Term& b1, const Term& b2) {
  Term r = meet(sig, a1, a2);
  r = meet(sig, r, negate(meet(sig, b1, b2)));
  return meet(sig, r, join(sig, b1, b2));
}

namespace {

Clause merge_same_atom(const AlgebraSignature& sig, std::vector<Literal> lits) {
  std::map<Atom, Term> merged;
  for (auto& lit : lits) {
    auto [it, inserted] = merged.emplace(lit.atom, lit.label);
    if (!inserted) it->second = join(sig, it->second, lit.label);
  }
  std::vector<Literal> out;
  out.reserve(merged.size());
  for (auto& [atom, label] : merged) out.push_back(Literal{atom, label});
  return Clause(std::move(out));
}

}  // namespace

ReliableClause resolve(const AlgebraSignature& sig, const ReliableClause& first,
                       std::size_t first_index, const ReliableClause& second,
                       std::size_t second_index, MergeMode merge) {
  if (first_index >= first.clause.size() || second_index >= second.clause.size()) {
    throw Error(ErrorCode::NotResolvable, "literal index out of range");
  }
  const Literal& l1 = first.clause[first_index];
  const Literal& l2 = second.clause[second_index];
  if (l1.atom != l2.atom) {
    throw Error(ErrorCode::NotResolvable, "resolved literals are on different atoms");
  }
  if (!less(sig, meet(sig, l1.label, l2.label), Term::neutral())) {
    throw Error(ErrorCode::NotResolvable,
                "b1 ^ b2 = " + format_term(sig, meet(sig, l1.label, l2.label)) +
                    " is not below W");
  }
  if (!above_neutral(sig, join(sig, l1.label, l2.label))) {
    throw Error(ErrorCode::NotResolvable,
                "b1 v b2 = " + format_term(sig, join(sig, l1.label, l2.label)) +
                    " is not above W");
  }

  std::vector<Literal> lits;
  lits.reserve(first.clause.size() + second.clause.size() - 2);
  for (std::size_t i = 0; i < first.clause.size(); ++i) {
    if (i != first_index) lits.push_back(first.clause[i]);
  }
  for (std::size_t i = 0; i < second.clause.size(); ++i) {
    if (i != second_index) lits.push_back(second.clause[i]);
  }
  Clause conclusion = merge == MergeMode::MaxLabel ? merge_same_atom(sig, std::move(lits))
                                                   : Clause(std::move(lits));
  return ReliableClause{
      std::move(conclusion),
      resolvent_reliability(sig, first.reliability, second.reliability, l1.label, l2.label)};
}

// ---------------------------------------------------------------------------
// ClauseStore

ClauseStore::ClauseStore(const AlgebraSignature& sig, Strategy strategy)
    : sig_(&sig), strategy_(strategy) {}

ClauseStore ClauseStore::seeded(const AlgebraSignature& sig, Strategy strategy,
                                const std::vector<ReliableClause>& inputs) {
  ClauseStore store(sig, strategy);
  for (const auto& rc : inputs) {
    if (!above_neutral(sig, rc.reliability)) {
      throw Error(ErrorCode::BadReliability,
                  "input reliability " + format_term(sig, rc.reliability) + " is not above W");
    }
    if (store.improves(rc.clause, rc.reliability)) store.add(rc, std::nullopt);
  }
  store.seed_events_ = store.trace_.size();
  return store;
}

std::vector<ClauseId> ClauseStore::live_ids() const {
  std::vector<ClauseId> out;
  for (ClauseId id = 0; id < arena_.size(); ++id) {
    if (live_[id]) out.push_back(id);
  }
  return out;
}

std::size_t ClauseStore::live_count() const {
  return static_cast<std::size_t>(std::count(live_.begin(), live_.end(), true));
}

std::vector<ClauseId> ClauseStore::variants(const Clause& c) const {
  auto it = by_clause_.find(c);
  return it == by_clause_.end() ? std::vector<ClauseId>{} : it->second;
}

std::optional<Term> ClauseStore::best_reliability(const Clause& c) const {
  std::optional<Term> best;
  auto it = by_clause_.find(c);
  if (it == by_clause_.end()) return best;
  for (ClauseId id : it->second) {
    const Term& r = arena_[id].rc.reliability;
    if (!best || less(*sig_, *best, r)) best = r;
  }
  return best;
}

bool ClauseStore::improves(const Clause& c, const Term& reliability) const {
  auto it = by_clause_.find(c);
  if (it == by_clause_.end()) return true;
  if (strategy_ == Strategy::Alpha) {
    return less(*sig_, *best_reliability(c), reliability);
  }
  return std::none_of(it->second.begin(), it->second.end(), [&](ClauseId id) {
    return arena_[id].rc.reliability == reliability;
  });
}

ClauseId ClauseStore::add(ReliableClause rc, std::optional<InferenceRecord> origin) {
  if (strategy_ == Strategy::Alpha) {
    for (ClauseId old : variants(rc.clause)) remove(old);
  }
  const auto id = static_cast<ClauseId>(arena_.size());
  by_clause_[rc.clause].push_back(id);
  arena_.push_back(ClauseEntry{id, std::move(rc), std::move(origin)});
  live_.push_back(true);
  trace_.push_back(TraceEvent{TraceEvent::Kind::Add, id});
  return id;
}

void ClauseStore::remove(ClauseId id) {
  live_[id] = false;
  auto it = by_clause_.find(arena_[id].rc.clause);
  std::erase(it->second, id);
  if (it->second.empty()) by_clause_.erase(it);
  trace_.push_back(TraceEvent{TraceEvent::Kind::Remove, id});
}

// ---------------------------------------------------------------------------
// Saturation

namespace {

struct Candidate {
  Term key;  // min premise reliability
  ClauseId first;
  ClauseId second;
  std::size_t first_literal;
  std::size_t second_literal;
};

template <typename Emit>
void for_each_resolvable_pair(const AlgebraSignature& sig, const ClauseEntry& a,
                              const ClauseEntry& b, Emit&& emit) {
  const Clause& ca = a.rc.clause;
  const Clause& cb = b.rc.clause;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (ca[i].atom == cb[j].atom && resolvable(sig, ca[i].label, cb[j].label)) emit(i, j);
    }
  }
}

InferenceRecord make_record(const ClauseStore& store, ClauseId a, ClauseId b, std::size_t la,
                            std::size_t lb) {
  const Literal& l1 = store.entry(a).rc.clause[la];
  const Literal& l2 = store.entry(b).rc.clause[lb];
  return InferenceRecord{a, b, la, lb, l1.atom, l1.label, l2.label};
}

SaturationResult saturate_alpha(ClauseStore& store, const SaturationOptions& options) {
  const AlgebraSignature& sig = store.signature();
  // Top of the queue: largest key, then smallest ids and literal positions.
  auto after = [&sig](const Candidate& x, const Candidate& y) {
    if (auto c = compare(sig, x.key, y.key); c != 0) return c < 0;
    return std::tie(x.first, x.second, x.first_literal, x.second_literal) >
           std::tie(y.first, y.second, y.first_literal, y.second_literal);
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(after)> queue(after);

  auto push_pairs = [&](ClauseId newest) {
    for (ClauseId other : store.live_ids()) {
      if (other == newest) continue;
      const ClauseEntry& a = store.entry(std::min(other, newest));
      const ClauseEntry& b = store.entry(std::max(other, newest));
      const Term key = meet(sig, a.rc.reliability, b.rc.reliability);
      for_each_resolvable_pair(sig, a, b, [&](std::size_t i, std::size_t j) {
        queue.push(Candidate{key, a.id, b.id, i, j});
      });
    }
  };

  {
    const auto initial = store.live_ids();
    for (std::size_t x = 0; x < initial.size(); ++x) {
      for (std::size_t y = x + 1; y < initial.size(); ++y) {
        const ClauseEntry& a = store.entry(initial[x]);
        const ClauseEntry& b = store.entry(initial[y]);
        for_each_resolvable_pair(sig, a, b, [&](std::size_t i, std::size_t j) {
          queue.push(Candidate{meet(sig, a.rc.reliability, b.rc.reliability), a.id, b.id, i, j});
        });
      }
    }
  }

  SaturationResult result;
  while (!queue.empty()) {
    Candidate c = queue.top();
    queue.pop();
    if (!store.is_live(c.first) || !store.is_live(c.second)) continue;
    ReliableClause conclusion =
        resolve(sig, store.entry(c.first).rc, c.first_literal, store.entry(c.second).rc,
                c.second_literal, options.merge);
    if (!store.improves(conclusion.clause, conclusion.reliability)) continue;
    if (result.steps >= options.limits.max_steps) {
      result.status = SaturationResult::Status::StepLimit;
      return result;
    }
    const ClauseId id = store.add(
        std::move(conclusion), make_record(store, c.first, c.second, c.first_literal,
                                           c.second_literal));
    ++result.steps;
    push_pairs(id);
  }
  return result;
}

SaturationResult saturate_naive(ClauseStore& store, const SaturationOptions& options) {
  const AlgebraSignature& sig = store.signature();
  std::deque<std::pair<ClauseId, ClauseId>> pairs;
  {
    const auto initial = store.live_ids();
    for (std::size_t y = 0; y < initial.size(); ++y) {
      for (std::size_t x = 0; x < y; ++x) pairs.emplace_back(initial[x], initial[y]);
    }
  }

  SaturationResult result;
  while (!pairs.empty()) {
    const auto [a, b] = pairs.front();
    pairs.pop_front();
    std::vector<std::pair<std::size_t, std::size_t>> lits;
    for_each_resolvable_pair(sig, store.entry(a), store.entry(b),
                             [&](std::size_t i, std::size_t j) { lits.emplace_back(i, j); });
    for (const auto& [i, j] : lits) {
      ReliableClause conclusion =
          resolve(sig, store.entry(a).rc, i, store.entry(b).rc, j, options.merge);
      if (!store.improves(conclusion.clause, conclusion.reliability)) continue;
      if (result.steps >= options.limits.max_steps) {
        result.status = SaturationResult::Status::StepLimit;
        return result;
      }
      const ClauseId id = store.add(std::move(conclusion), make_record(store, a, b, i, j));
      ++result.steps;
      for (ClauseId other : store.live_ids()) {
        if (other != id) pairs.emplace_back(other, id);
      }
    }
  }
  return result;
}

}  // namespace

SaturationResult saturate(ClauseStore& store, const SaturationOptions& options) {
  if (options.interned) {
    if (auto kernel = detail::MaskKernel::build(store, options.merge)) {
      return store.strategy() == Strategy::Alpha
                 ? kernel->saturate_alpha(store, options.limits.max_steps)
                 : kernel->saturate_naive(store, options.limits.max_steps);
    }
  }
  return store.strategy() == Strategy::Alpha ? saturate_alpha(store, options)
                                             : saturate_naive(store, options);
}

// ---------------------------------------------------------------------------
// Proofs

const ProofNode* ProofTree::find(ClauseId id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

ProofTree extract_proof(const ClauseStore& store, ClauseId root) {
  std::set<ClauseId> seen;
  std::vector<ClauseId> stack{root};
  while (!stack.empty()) {
    const ClauseId id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) continue;
    if (const auto& origin = store.entry(id).origin) {
      stack.push_back(origin->first);
      stack.push_back(origin->second);
    }
  }
  ProofTree tree;
  for (ClauseId id : seen) {
    const auto& e = store.entry(id);
    tree.nodes.push_back(ProofNode{id, e.rc, e.origin});
  }
  return tree;
}

std::optional<ProofTree> refute(const ClauseStore& store) {
  std::optional<ClauseId> best;
  for (ClauseId id : store.variants(Clause{})) {
    if (!best ||
        less(store.signature(), store.entry(*best).rc.reliability, store.entry(id).rc.reliability)) {
      best = id;
    }
  }
  if (!best) return std::nullopt;
  return extract_proof(store, *best);
}

SaturationCheck check_saturated(const ClauseStore& store, MergeMode merge) {
  if (auto kernel = detail::MaskKernel::build(store, merge)) return kernel->check();
  const AlgebraSignature& sig = store.signature();
  const auto live = store.live_ids();
  SaturationCheck check;
  for (std::size_t x = 0; x < live.size() && check.saturated; ++x) {
    for (std::size_t y = x + 1; y < live.size() && check.saturated; ++y) {
      const ClauseEntry& a = store.entry(live[x]);
      const ClauseEntry& b = store.entry(live[y]);
      for_each_resolvable_pair(sig, a, b, [&](std::size_t i, std::size_t j) {
        if (!check.saturated) return;
        ReliableClause conclusion = resolve(sig, a.rc, i, b.rc, j, merge);
        const auto best = store.best_reliability(conclusion.clause);
        if (!best || less(sig, *best, conclusion.reliability)) {
          check.saturated = false;
          check.witness = make_record(store, a.id, b.id, i, j);
          check.witness_conclusion = std::move(conclusion);
        }
      });
    }
  }
  return check;
}

std::string format_trace(const ClauseStore& store) {
  const AlgebraSignature& sig = store.signature();
  std::ostringstream out;
  for (const auto& ev : store.trace()) {
    const auto& e = store.entry(ev.id);
    if (ev.kind == TraceEvent::Kind::Remove) {
      out << "remove " << ev.id << '\n';
      continue;
    }
    out << "add " << ev.id << ' ' << format_clause(sig, e.rc.clause) << " @ "
        << format_term(sig, e.rc.reliability);
    if (e.origin) {
      const Atom& atom = e.origin->atom;
      out << " from " << e.origin->first << ',' << e.origin->second << " on "
          << (atom.is_constant() ? format_term(sig, atom.value()) : atom.name()) << ' '
          << format_term(sig, e.origin->b1) << '/' << format_term(sig, e.origin->b2);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lingres
