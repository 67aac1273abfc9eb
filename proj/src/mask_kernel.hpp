#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lingres/resolution.hpp"

namespace lingres::detail {

// Saturation over interned literals. Resolvents only ever contain literals of
// the clauses already in the store (a merged label is one of the two merged),
// so with at most 64 distinct literals every clause is a bit mask and every
// reliability a rank into a small sorted table. Visiting order matches the
// reference loop exactly, so traces are identical.
class MaskKernel {
 public:
  static std::optional<MaskKernel> build(const ClauseStore& store, MergeMode merge);

  SaturationResult saturate_alpha(ClauseStore& store, std::size_t max_steps);
  SaturationResult saturate_naive(ClauseStore& store, std::size_t max_steps);
  SaturationCheck check() const;

 private:
  using Mask = std::uint64_t;

  struct Conclusion {
    Mask mask;
    int rank;
  };

  MaskKernel() = default;

  Conclusion resolve(ClauseId a, int l1, ClauseId b, int l2) const;
  Mask merged(Mask m) const;
  bool improves(const Conclusion& c, Strategy strategy) const;
  ClauseId add(ClauseStore& store, const Conclusion& c, ClauseId a, int l1, ClauseId b, int l2);
  InferenceRecord record(ClauseId a, int l1, ClauseId b, int l2) const;
  ReliableClause materialize(const Conclusion& c) const;

  template <typename Emit>
  void for_each_clash(ClauseId a, ClauseId b, Emit&& emit) const;
  /// First clashing literal pair of (a, b) strictly after (l1, l2); pass
  /// (-1, -1) for the first one. Returns false when there is none.
  bool next_clash(ClauseId a, ClauseId b, int& l1, int& l2) const;
  Mask reach(Mask m) const;

  MergeMode merge_ = MergeMode::Off;
  std::vector<Literal> literals_;  // sorted, so bit order is clause order
  std::vector<Mask> clash_;        // per literal: resolvable partners
  std::vector<Mask> same_atom_;    // per literal: literals on its atom
  std::vector<int> label_rank_;    // per literal: truth rank of its label
  std::vector<Term> reliabilities_;  // ascending truth order
  std::vector<int> factor_;          // rank of not(b1 ^ b2) ^ (b1 v b2), per literal pair

  std::vector<Mask> masks_;  // per arena id
  std::vector<int> ranks_;   // per arena id
  std::vector<Mask> reach_;  // per arena id: literals some literal of it clashes with
  std::unordered_map<Mask, std::vector<ClauseId>> live_by_mask_;
  std::vector<ClauseId> live_;  // ascending
};

}  // namespace lingres::detail
