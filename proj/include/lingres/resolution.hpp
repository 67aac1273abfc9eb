#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lingres/hedge_algebra.hpp"
#include "lingres/logic.hpp"

namespace lingres {

/// A clause together with the reliability of its derivation (always > W).
struct ReliableClause {
  Clause clause;
  Term reliability = Term::top();

  friend bool operator==(const ReliableClause&, const ReliableClause&) = default;
};

enum class MergeMode { Off, MaxLabel };
enum class Strategy { Alpha, Naive };

/// b1 ^ b2 < W and b1 v b2 > W.
bool resolvable(const AlgebraSignature& sig, const Term& b1, const Term& b2);

/// a1 ^ a2 ^ not(b1 ^ b2) ^ (b1 v b2)
Term resolvent_reliability(const AlgebraSignature& sig, const Term& a1, const Term& a2,
                           const Term& b1, const Term& b2);

/// Resolves `first` on its literal `first_index` against `second` on
/// `second_index`. Throws NotResolvable naming the failed condition.
ReliableClause resolve(const AlgebraSignature& sig, const ReliableClause& first,
                       std::size_t first_index, const ReliableClause& second,
                       std::size_t second_index, MergeMode merge = MergeMode::Off);

using ClauseId = std::uint32_t;

struct InferenceRecord {
  ClauseId first;
  ClauseId second;
  std::size_t first_literal;
  std::size_t second_literal;
  Atom atom;
  Term b1;  // label of the resolved literal in `first`
  Term b2;  // label of the resolved literal in `second`
};

struct ClauseEntry {
  ClauseId id;
  ReliableClause rc;
  std::optional<InferenceRecord> origin;  // empty for input clauses
};

struct TraceEvent {
  enum class Kind { Add, Remove };
  Kind kind;
  ClauseId id;
};

/// Every clause ever created lives in an arena addressed by id; the store is
/// the subset currently live. In alpha mode at most one live entry exists per
/// clause; naive mode keeps every distinct (clause, reliability) pair.
class ClauseStore {
 public:
  ClauseStore(const AlgebraSignature& sig, Strategy strategy);

  /// Seeds S0. Duplicate clauses keep the larger reliability in alpha mode.
  static ClauseStore seeded(const AlgebraSignature& sig, Strategy strategy,
                            const std::vector<ReliableClause>& inputs);

  Strategy strategy() const { return strategy_; }
  const AlgebraSignature& signature() const { return *sig_; }

  const ClauseEntry& entry(ClauseId id) const { return arena_.at(id); }
  std::size_t arena_size() const { return arena_.size(); }
  bool is_live(ClauseId id) const { return live_.at(id); }
  std::vector<ClauseId> live_ids() const;
  std::size_t live_count() const;

  /// Live entries holding exactly this clause (at most one in alpha mode).
  std::vector<ClauseId> variants(const Clause& c) const;
  /// Largest live reliability for this clause.
  std::optional<Term> best_reliability(const Clause& c) const;

  /// Would adding (c, reliability) change the store? In alpha mode the
  /// reliability must beat the live variant; in naive mode the exact pair
  /// must be new.
  bool improves(const Clause& c, const Term& reliability) const;

  /// Adds a conclusion, removing a dominated variant in alpha mode. Returns the
  /// new id. The caller checks improves() first.
  ClauseId add(ReliableClause rc, std::optional<InferenceRecord> origin);

  const std::vector<TraceEvent>& trace() const { return trace_; }
  /// Number of trace events forming S0.
  std::size_t seed_events() const { return seed_events_; }

 private:
  void remove(ClauseId id);

  const AlgebraSignature* sig_;
  Strategy strategy_;
  std::vector<ClauseEntry> arena_;
  std::vector<bool> live_;
  std::map<Clause, std::vector<ClauseId>> by_clause_;
  std::vector<TraceEvent> trace_;
  std::size_t seed_events_ = 0;
};

struct SaturationLimits {
  std::size_t max_steps = 100'000;
};

struct SaturationOptions {
  MergeMode merge = MergeMode::Off;
  SaturationLimits limits;
  /// Run on interned literal masks when the store has at most 64 distinct
  /// literals. Same trace as the plain loop, much faster.
  bool interned = true;
};

struct SaturationResult {
  enum class Status { Saturated, StepLimit };
  Status status = Status::Saturated;
  std::size_t steps = 0;  // inferences applied
};

/// Runs the store's strategy to a fixpoint or the step cap.
///
/// Alpha: repeatedly applies the inference whose premises have the largest
/// minimum reliability (ties: smaller premise ids, then literal positions)
/// among those whose conclusion beats the stored variant.
/// Naive: FIFO over premise pairs, every new (clause, reliability) kept.
SaturationResult saturate(ClauseStore& store, const SaturationOptions& options = {});

struct ProofNode {
  ClauseId id;
  ReliableClause rc;
  std::optional<InferenceRecord> origin;
};

/// Nodes in ascending id order; premises precede conclusions. The root is the
/// last node.
struct ProofTree {
  std::vector<ProofNode> nodes;

  const ProofNode& root() const { return nodes.back(); }
  const ProofNode* find(ClauseId id) const;
};

ProofTree extract_proof(const ClauseStore& store, ClauseId root);

/// Proof of the live empty clause with the largest reliability, if any.
std::optional<ProofTree> refute(const ClauseStore& store);

struct SaturationCheck {
  bool saturated = true;
  std::optional<InferenceRecord> witness;
  std::optional<ReliableClause> witness_conclusion;
};

/// True iff every inference between live clauses concludes a clause that has a
/// live variant with at least the same reliability.
SaturationCheck check_saturated(const ClauseStore& store,
                                MergeMode merge = MergeMode::Off);

/// One line per trace event, stable across runs.
std::string format_trace(const ClauseStore& store);

}  // namespace lingres
