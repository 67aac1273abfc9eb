#include "mask_kernel.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <queue>
#include <tuple>

namespace lingres::detail {

namespace {

constexpr std::uint64_t bit(int l) { return std::uint64_t{1} << l; }

template <typename F>
void for_each_bit(std::uint64_t m, F&& f) {
  while (m != 0) {
    const int l = std::countr_zero(m);
    m &= m - 1;
    f(l);
  }
}

std::size_t position(std::uint64_t mask, int l) {
  return static_cast<std::size_t>(std::popcount(mask & (bit(l) - 1)));
}

}  // namespace

std::optional<MaskKernel> MaskKernel::build(const ClauseStore& store, MergeMode merge) {
  const AlgebraSignature& sig = store.signature();
  const auto live = store.live_ids();

  std::vector<Literal> lits;
  for (ClauseId id : live) {
    const auto& c = store.entry(id).rc.clause.literals();
    lits.insert(lits.end(), c.begin(), c.end());
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  if (lits.size() > 64) return std::nullopt;

  MaskKernel k;
  k.merge_ = merge;
  k.literals_ = std::move(lits);
  const int n = static_cast<int>(k.literals_.size());

  std::vector<Term> labels;
  for (const auto& l : k.literals_) labels.push_back(l.label);
  auto by_truth = [&](const Term& x, const Term& y) { return less(sig, x, y); };
  std::sort(labels.begin(), labels.end(), by_truth);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  k.clash_.assign(n, 0);
  k.same_atom_.assign(n, 0);
  std::vector<Term> rels;
  for (ClauseId id : live) rels.push_back(store.entry(id).rc.reliability);
  std::vector<std::tuple<int, int, Term>> factors;
  for (int x = 0; x < n; ++x) {
    const Literal& lx = k.literals_[x];
    k.label_rank_.push_back(static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), lx.label, by_truth) - labels.begin()));
    for (int y = 0; y < n; ++y) {
      const Literal& ly = k.literals_[y];
      if (lx.atom != ly.atom) continue;
      k.same_atom_[x] |= bit(y);
      if (!resolvable(sig, lx.label, ly.label)) continue;
      k.clash_[x] |= bit(y);
      Term f = meet(sig, negate(meet(sig, lx.label, ly.label)), join(sig, lx.label, ly.label));
      rels.push_back(f);
      factors.emplace_back(x, y, std::move(f));
    }
  }
  std::sort(rels.begin(), rels.end(), by_truth);
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  k.reliabilities_ = std::move(rels);
  auto rank_of = [&](const Term& t) {
    return static_cast<int>(std::lower_bound(k.reliabilities_.begin(), k.reliabilities_.end(),
                                             t, by_truth) -
                            k.reliabilities_.begin());
  };
  k.factor_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const auto& [x, y, f] : factors) k.factor_[x * n + y] = rank_of(f);

  k.masks_.assign(store.arena_size(), 0);
  k.ranks_.assign(store.arena_size(), -1);
  k.reach_.assign(store.arena_size(), 0);
  for (ClauseId id : live) {
    Mask m = 0;
    for (const auto& l : store.entry(id).rc.clause.literals()) {
      m |= bit(static_cast<int>(std::lower_bound(k.literals_.begin(), k.literals_.end(), l) -
                                k.literals_.begin()));
    }
    k.masks_[id] = m;
    k.reach_[id] = k.reach(m);
    k.ranks_[id] = rank_of(store.entry(id).rc.reliability);
    k.live_by_mask_[m].push_back(id);
  }
  k.live_ = live;
  return k;
}

MaskKernel::Mask MaskKernel::merged(Mask m) const {
  if (merge_ == MergeMode::Off) return m;
  Mask out = m;
  Mask todo = m;
  while (todo != 0) {
    const int l = std::countr_zero(todo);
    const Mask group = m & same_atom_[l];
    todo &= ~group;
    if (std::popcount(group) < 2) continue;
    int best = l;
    for_each_bit(group, [&](int g) {
      if (label_rank_[g] > label_rank_[best]) best = g;
    });
    out = (out & ~group) | bit(best);
  }
  return out;
}

MaskKernel::Conclusion MaskKernel::resolve(ClauseId a, int l1, ClauseId b, int l2) const {
  const int n = static_cast<int>(literals_.size());
  const Mask m = merged((masks_[a] & ~bit(l1)) | (masks_[b] & ~bit(l2)));
  return {m, std::min({ranks_[a], ranks_[b], factor_[l1 * n + l2]})};
}

bool MaskKernel::improves(const Conclusion& c, Strategy strategy) const {
  auto it = live_by_mask_.find(c.mask);
  if (it == live_by_mask_.end() || it->second.empty()) return true;
  if (strategy == Strategy::Alpha) {
    int best = -1;
    for (ClauseId id : it->second) best = std::max(best, ranks_[id]);
    return best < c.rank;
  }
  return std::none_of(it->second.begin(), it->second.end(),
                      [&](ClauseId id) { return ranks_[id] == c.rank; });
}

ReliableClause MaskKernel::materialize(const Conclusion& c) const {
  std::vector<Literal> lits;
  for_each_bit(c.mask, [&](int l) { lits.push_back(literals_[l]); });
  return ReliableClause{Clause(std::move(lits)), reliabilities_[c.rank]};
}

InferenceRecord MaskKernel::record(ClauseId a, int l1, ClauseId b, int l2) const {
  return InferenceRecord{a,
                         b,
                         position(masks_[a], l1),
                         position(masks_[b], l2),
                         literals_[l1].atom,
                         literals_[l1].label,
                         literals_[l2].label};
}

ClauseId MaskKernel::add(ClauseStore& store, const Conclusion& c, ClauseId a, int l1,
                         ClauseId b, int l2) {
  const ClauseId id = store.add(materialize(c), record(a, l1, b, l2));
  masks_.resize(id + 1, 0);
  ranks_.resize(id + 1, -1);
  reach_.resize(id + 1, 0);
  masks_[id] = c.mask;
  reach_[id] = reach(c.mask);
  ranks_[id] = c.rank;
  auto& variants = live_by_mask_[c.mask];
  if (store.strategy() == Strategy::Alpha) {
    for (ClauseId old : variants) std::erase(live_, old);
    variants.clear();
  }
  variants.push_back(id);
  live_.push_back(id);
  return id;
}

MaskKernel::Mask MaskKernel::reach(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](int l) { out |= clash_[l]; });
  return out;
}

bool MaskKernel::next_clash(ClauseId a, ClauseId b, int& l1, int& l2) const {
  const Mask mb = masks_[b];
  if ((reach_[a] & mb) == 0) return false;
  if (l1 >= 0) {
    // remaining partners of the current l1
    const Mask rest = mb & clash_[l1] & ~((bit(l2) << 1) - 1);
    if (rest != 0) {
      l2 = std::countr_zero(rest);
      return true;
    }
  }
  Mask ma = masks_[a];
  if (l1 >= 0) ma &= ~((bit(l1) << 1) - 1);
  while (ma != 0) {
    const int x = std::countr_zero(ma);
    ma &= ma - 1;
    if (const Mask partners = mb & clash_[x]; partners != 0) {
      l1 = x;
      l2 = std::countr_zero(partners);
      return true;
    }
  }
  return false;
}

template <typename Emit>
void MaskKernel::for_each_clash(ClauseId a, ClauseId b, Emit&& emit) const {
  const Mask mb = masks_[b];
  for_each_bit(masks_[a], [&](int l1) {
    for_each_bit(mb & clash_[l1], [&](int l2) { emit(l1, l2); });
  });
}

SaturationResult MaskKernel::saturate_alpha(ClauseStore& store, std::size_t max_steps) {
  // One queue entry per premise pair, standing for its next clashing literal
  // pair; after it is taken the following one is pushed back. The order of
  // inferences is the same as with every literal pair queued up front.
  //
  // Keys are reliability ranks, so the queue is one min-heap per rank over
  // (first, second, l1, l2) packed into 64 bits.
  constexpr ClauseId kIdLimit = ClauseId{1} << 26;
  auto pack = [](ClauseId a, ClauseId b, int l1, int l2) {
    return (std::uint64_t{a} << 38) | (std::uint64_t{b} << 12) |
           (static_cast<std::uint64_t>(l1) << 6) | static_cast<std::uint64_t>(l2);
  };
  using Heap = std::priority_queue<std::uint64_t, std::vector<std::uint64_t>,
                                   std::greater<std::uint64_t>>;
  std::vector<Heap> buckets(reliabilities_.size());
  std::size_t top = 0;  // no non-empty bucket above this one

  auto push_next = [&](int key, ClauseId a, ClauseId b, int l1, int l2) {
    if (next_clash(a, b, l1, l2)) {
      buckets[key].push(pack(a, b, l1, l2));
      top = std::max(top, static_cast<std::size_t>(key));
    }
  };
  auto push = [&](ClauseId a, ClauseId b) {
    push_next(std::min(ranks_[a], ranks_[b]), a, b, -1, -1);
  };

  for (std::size_t y = 0; y < live_.size(); ++y) {
    for (std::size_t x = 0; x < y; ++x) push(live_[x], live_[y]);
  }

  SaturationResult result;
  while (true) {
    while (top > 0 && buckets[top].empty()) --top;
    if (buckets[top].empty()) break;
    const int key = static_cast<int>(top);
    const std::uint64_t packed = buckets[top].top();
    buckets[top].pop();
    const auto first = static_cast<ClauseId>(packed >> 38);
    const auto second = static_cast<ClauseId>((packed >> 12) & (kIdLimit - 1));
    const int l1 = static_cast<int>((packed >> 6) & 63);
    const int l2 = static_cast<int>(packed & 63);

    if (!store.is_live(first) || !store.is_live(second)) continue;
    const Conclusion con = resolve(first, l1, second, l2);
    if (improves(con, Strategy::Alpha)) {
      if (result.steps >= max_steps || store.arena_size() >= kIdLimit) {
        result.status = SaturationResult::Status::StepLimit;
        return result;
      }
      const ClauseId id = add(store, con, first, l1, second, l2);
      ++result.steps;
      for (ClauseId other : live_) {
        if (other != id) push(std::min(other, id), std::max(other, id));
      }
    }
    if (store.is_live(first) && store.is_live(second)) push_next(key, first, second, l1, l2);
  }
  return result;
}

SaturationResult MaskKernel::saturate_naive(ClauseStore& store, std::size_t max_steps) {
  std::deque<std::pair<ClauseId, ClauseId>> pairs;
  for (std::size_t y = 0; y < live_.size(); ++y) {
    for (std::size_t x = 0; x < y; ++x) pairs.emplace_back(live_[x], live_[y]);
  }

  SaturationResult result;
  std::vector<std::pair<int, int>> clashes;
  while (!pairs.empty()) {
    const auto [a, b] = pairs.front();
    pairs.pop_front();
    clashes.clear();
    for_each_clash(a, b, [&](int l1, int l2) { clashes.emplace_back(l1, l2); });
    for (const auto& [l1, l2] : clashes) {
      const Conclusion con = resolve(a, l1, b, l2);
      if (!improves(con, Strategy::Naive)) continue;
      if (result.steps >= max_steps) {
        result.status = SaturationResult::Status::StepLimit;
        return result;
      }
      const ClauseId id = add(store, con, a, l1, b, l2);
      ++result.steps;
      for (ClauseId other : live_) {
        if (other != id) pairs.emplace_back(other, id);
      }
    }
  }
  return result;
}

SaturationCheck MaskKernel::check() const {
  SaturationCheck out;
  for (std::size_t x = 0; x < live_.size(); ++x) {
    for (std::size_t y = x + 1; y < live_.size(); ++y) {
      const ClauseId a = live_[x];
      const ClauseId b = live_[y];
      bool found = false;
      for_each_clash(a, b, [&](int l1, int l2) {
        if (found) return;
        const Conclusion con = resolve(a, l1, b, l2);
        // at least as reliable a live variant must already exist
        if (!improves(con, Strategy::Alpha)) return;
        found = true;
        out.saturated = false;
        out.witness = record(a, l1, b, l2);
        out.witness_conclusion = materialize(con);
      });
      if (found) return out;
    }
  }
  return out;
}

}  // namespace lingres::detail
