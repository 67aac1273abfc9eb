#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lingres {

// Linguistic truth domain of a linear symmetrical hedge algebra.
//
// A term is a generator (Bot < False < W < True < Top) with a string of
// hedges applied to it. Only True and False accept hedges; Bot, W and Top are
// fixed points. Every positive hedge continues the direction of the term it
// modifies and every negative hedge reverses it, so the whole domain is a
// chain.

enum class Generator : std::uint8_t { Bottom, False, W, True, Top };

enum class HedgeClass : std::uint8_t { Positive, Negative };

using HedgeId = std::uint8_t;

struct HedgeSymbol {
  std::string name;
  HedgeClass hedge_class;
  int strength;  // 1..|class|, higher moves a term further
};

class AlgebraSignature {
 public:
  /// Both lists are ordered by ascending strength.
  static AlgebraSignature build(const std::vector<std::string>& positive,
                                const std::vector<std::string>& negative,
                                int max_depth);

  std::span<const HedgeSymbol> hedges() const { return hedges_; }
  const HedgeSymbol& hedge(HedgeId id) const { return hedges_.at(id); }
  std::optional<HedgeId> find_hedge(std::string_view name) const;

  std::vector<std::string> positive_names() const;
  std::vector<std::string> negative_names() const;

  int max_depth() const { return max_depth_; }

  /// 2 * sum_{i=0..depth} |H|^i + 3
  std::size_t domain_size() const;

 private:
  AlgebraSignature() = default;

  std::vector<HedgeSymbol> hedges_;
  int max_depth_ = 0;
};

/// H+ = {V < M}, H- = {P < L}, depth 2. M is the strongest positive hedge and
/// L the strongest negative one.
AlgebraSignature default_signature();

/// Longest hedge string a Term can hold. Signatures with a larger depth are
/// rejected; their domains would be far too large to enumerate anyway.
inline constexpr std::size_t kMaxHedgeDepth = 16;

class Term {
 public:
  Term() = default;
  /// Throws DepthExceeded beyond kMaxHedgeDepth hedges.
  Term(Generator generator, std::span<const HedgeId> hedges);
  explicit Term(Generator generator, const std::vector<HedgeId>& hedges = {})
      : Term(generator, std::span<const HedgeId>(hedges)) {}

  static Term bottom() { return Term(Generator::Bottom); }
  static Term falsity() { return Term(Generator::False); }
  static Term neutral() { return Term(Generator::W); }
  static Term truth() { return Term(Generator::True); }
  static Term top() { return Term(Generator::Top); }

  Generator generator() const { return generator_; }
  /// Outermost hedge first.
  std::span<const HedgeId> hedges() const { return {hedges_.data(), depth_}; }
  std::size_t depth() const { return depth_; }

  /// Same hedge string over the opposite generator; W, Bot and Top map as
  /// fixed points of the symmetry.
  Term mirrored() const;

  /// Structural equality; equal terms are also equal in the domain order.
  /// Unused slots are always zero, so the defaulted comparison is exact.
  friend bool operator==(const Term&, const Term&) = default;

  /// Structural order for use as a container key. Not the truth order.
  friend auto operator<=>(const Term& a, const Term& b) {
    if (auto c = a.generator_ <=> b.generator_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.hedges_.begin(),
                                                  a.hedges_.begin() + a.depth_,
                                                  b.hedges_.begin(),
                                                  b.hedges_.begin() + b.depth_);
  }

 private:
  Generator generator_ = Generator::W;
  std::uint8_t depth_ = 0;
  std::array<HedgeId, kMaxHedgeDepth> hedges_{};
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Throws MalformedTerm if the term does not belong to the signature's domain.
void validate(const AlgebraSignature& sig, const Term& t);

std::strong_ordering compare(const AlgebraSignature& sig, const Term& x,
                             const Term& y);

inline bool less(const AlgebraSignature& sig, const Term& x, const Term& y) {
  return compare(sig, x, y) < 0;
}

inline bool above_neutral(const AlgebraSignature& sig, const Term& x) {
  return compare(sig, x, Term::neutral()) > 0;
}

std::vector<Term> enumerate_domain(const AlgebraSignature& sig);

Term negate(const Term& x);
Term meet(const AlgebraSignature& sig, const Term& x, const Term& y);
Term join(const AlgebraSignature& sig, const Term& x, const Term& y);
Term implies_value(const AlgebraSignature& sig, const Term& x, const Term& y);

/// Which chain the Lukasiewicz operators index. `Full` is the whole domain
/// (Bot at 0, Top at N0). `TruthTerms` leaves out Bot, W and Top so that the
/// indices run over the True/False-rooted terms only.
enum class IndexSpace { Full, TruthTerms };

/// The domain chain with its index bijection.
class OrderedDomain {
 public:
  OrderedDomain(const AlgebraSignature& sig, IndexSpace space = IndexSpace::Full);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_index() const { return terms_.size() - 1; }
  const Term& at(std::size_t index) const { return terms_.at(index); }
  /// Throws MalformedTerm if the term is outside this index space.
  std::size_t index_of(const Term& t) const;

  Term luk_tnorm(const Term& x, const Term& y) const;
  Term luk_tconorm(const Term& x, const Term& y) const;

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
};

Term luk_tnorm(const AlgebraSignature& sig, const Term& x, const Term& y,
               IndexSpace space = IndexSpace::Full);
Term luk_tconorm(const AlgebraSignature& sig, const Term& x, const Term& y,
                 IndexSpace space = IndexSpace::Full);

/// Extended t-norms and t-conorms on the index chain {0..n0}.
namespace extended {

enum class Family { Godel, Lukasiewicz };

std::size_t tnorm(Family family, std::size_t m, std::size_t n, std::size_t n0);
std::size_t tconorm(Family family, std::size_t m, std::size_t n, std::size_t n0);

}  // namespace extended

std::string_view generator_name(Generator g);

/// Hedge names outermost first followed by the generator name, e.g. "VMTrue".
std::string format_term(const AlgebraSignature& sig, const Term& t);

/// Greedy tokenizer: at each position the whole remainder is tried as a
/// generator name first, then the longest declared hedge name.
/// Errors: UnknownToken, DepthExceeded, MalformedTerm (hedge on Bot/W/Top).
Term parse_term(const AlgebraSignature& sig, std::string_view text);

/// Same as parse_term but returns nullopt instead of UnknownToken.
std::optional<Term> try_parse_term(const AlgebraSignature& sig,
                                   std::string_view text);

}  // namespace lingres
