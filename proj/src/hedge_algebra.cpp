#include "lingres/hedge_algebra.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "lingres/error.hpp"

namespace lingres {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateHedgeName: return "DuplicateHedgeName";
    case ErrorCode::ReservedName: return "ReservedName";
    case ErrorCode::NegativeDepth: return "NegativeDepth";
    case ErrorCode::MalformedTerm: return "MalformedTerm";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::UnassignedAtom: return "UnassignedAtom";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotResolvable: return "NotResolvable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownHedge: return "UnknownHedge";
    case ErrorCode::BadReliability: return "BadReliability";
    case ErrorCode::BadOption: return "BadOption";
  }
  return "Unknown";
}

namespace {

constexpr std::array<std::pair<Generator, std::string_view>, 5> kGeneratorNames{{
    {Generator::Bottom, "Bot"},
    {Generator::False, "False"},
    {Generator::W, "W"},
    {Generator::True, "True"},
    {Generator::Top, "Top"},
}};

std::optional<Generator> generator_from_name(std::string_view name) {
  for (const auto& [g, n] : kGeneratorNames) {
    if (n == name) return g;
  }
  return std::nullopt;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

bool accepts_hedges(Generator g) {
  return g == Generator::True || g == Generator::False;
}

int class_sign(const HedgeSymbol& h) {
  return h.hedge_class == HedgeClass::Positive ? 1 : -1;
}

}  // namespace

std::string_view generator_name(Generator g) {
  return kGeneratorNames[static_cast<std::size_t>(g)].second;
}

// ---------------------------------------------------------------------------
// AlgebraSignature

AlgebraSignature AlgebraSignature::build(const std::vector<std::string>& positive,
                                         const std::vector<std::string>& negative,
                                         int max_depth) {
  if (max_depth < 0) {
    throw Error(ErrorCode::NegativeDepth,
                "max depth must be >= 0, got " + std::to_string(max_depth));
  }
  if (positive.size() + negative.size() > std::numeric_limits<HedgeId>::max()) {
    throw Error(ErrorCode::ResourceLimit, "too many hedges");
  }

  if (static_cast<std::size_t>(max_depth) > kMaxHedgeDepth) {
    throw Error(ErrorCode::DepthExceeded, "max depth " + std::to_string(max_depth) +
                                              " exceeds the supported " +
                                              std::to_string(kMaxHedgeDepth));
  }

  AlgebraSignature sig;
  sig.max_depth_ = max_depth;
  std::set<std::string, std::less<>> seen;
  auto add = [&](const std::vector<std::string>& names, HedgeClass cls) {
    int strength = 1;
    for (const auto& name : names) {
      if (generator_from_name(name)) {
        throw Error(ErrorCode::ReservedName,
                    "hedge name '" + name + "' clashes with a generator");
      }
      if (!is_identifier(name)) {
        throw Error(ErrorCode::ReservedName,
                    "hedge name '" + name + "' is not an identifier");
      }
      if (!seen.insert(name).second) {
        throw Error(ErrorCode::DuplicateHedgeName,
                    "hedge name '" + name + "' declared twice");
      }
      sig.hedges_.push_back(HedgeSymbol{name, cls, strength++});
    }
  };
  add(positive, HedgeClass::Positive);
  add(negative, HedgeClass::Negative);
  return sig;
}

std::optional<HedgeId> AlgebraSignature::find_hedge(std::string_view name) const {
  for (std::size_t i = 0; i < hedges_.size(); ++i) {
    if (hedges_[i].name == name) return static_cast<HedgeId>(i);
  }
  return std::nullopt;
}

std::vector<std::string> AlgebraSignature::positive_names() const {
  std::vector<std::string> out;
  for (const auto& h : hedges_) {
    if (h.hedge_class == HedgeClass::Positive) out.push_back(h.name);
  }
  return out;
}

std::vector<std::string> AlgebraSignature::negative_names() const {
  std::vector<std::string> out;
  for (const auto& h : hedges_) {
    if (h.hedge_class == HedgeClass::Negative) out.push_back(h.name);
  }
  return out;
}

std::size_t AlgebraSignature::domain_size() const {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  auto add = [](std::size_t a, std::size_t b) { return a > kMax - b ? kMax : a + b; };
  auto mul = [](std::size_t a, std::size_t b) {
    return (b != 0 && a > kMax / b) ? kMax : a * b;
  };
  const std::size_t h = hedges_.size();
  std::size_t strings = 0;
  std::size_t power = 1;
  for (int i = 0; i <= max_depth_; ++i) {
    strings = add(strings, power);
    if (h == 0) break;
    power = mul(power, h);
  }
  return add(mul(2, strings), 3);
}

AlgebraSignature default_signature() {
  return AlgebraSignature::build({"V", "M"}, {"P", "L"}, 2);
}

// ---------------------------------------------------------------------------
// Term

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.generator()) + 0x9e3779b97f4a7c15ULL;
  for (HedgeId id : t.hedges()) {
    h ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void validate(const AlgebraSignature& sig, const Term& t) {
  if (t.depth() > 0 && !accepts_hedges(t.generator())) {
    throw Error(ErrorCode::MalformedTerm,
                std::string("hedges applied to fixed point ") +
                    std::string(generator_name(t.generator())));
  }
  if (t.depth() > static_cast<std::size_t>(sig.max_depth())) {
    throw Error(ErrorCode::MalformedTerm, "hedge string longer than max depth");
  }
  for (HedgeId id : t.hedges()) {
    if (id >= sig.hedges().size()) {
      throw Error(ErrorCode::MalformedTerm, "hedge unknown to signature");
    }
  }
}

std::strong_ordering compare(const AlgebraSignature& sig, const Term& x,
                             const Term& y) {
  if (x.generator() != y.generator()) return x.generator() <=> y.generator();
  if (!accepts_hedges(x.generator())) return std::strong_ordering::equal;

  // Walk both strings from the innermost hedge outward. `direction` is the
  // side of its parent on which the current common prefix lies.
  int direction = x.generator() == Generator::True ? 1 : -1;
  const auto xs = x.hedges();
  const auto ys = y.hedges();
  const std::size_t n = xs.size();
  const std::size_t m = ys.size();
  for (std::size_t j = 0;; ++j) {
    const bool has_x = j < n;
    const bool has_y = j < m;
    if (!has_x && !has_y) return std::strong_ordering::equal;
    if (has_x && has_y && xs[n - 1 - j] == ys[m - 1 - j]) {
      direction *= class_sign(sig.hedge(xs[n - 1 - j]));
      continue;
    }
    const int ex = has_x ? class_sign(sig.hedge(xs[n - 1 - j])) * direction : 0;
    const int ey = has_y ? class_sign(sig.hedge(ys[m - 1 - j])) * direction : 0;
    if (ex != ey) return ex <=> ey;
    const int sx = sig.hedge(xs[n - 1 - j]).strength;
    const int sy = sig.hedge(ys[m - 1 - j]).strength;
    return ex > 0 ? sx <=> sy : sy <=> sx;
  }
}

std::vector<Term> enumerate_domain(const AlgebraSignature& sig) {
  std::vector<std::vector<HedgeId>> strings{{}};
  std::vector<std::vector<HedgeId>> frontier{{}};
  const auto hedge_count = static_cast<HedgeId>(sig.hedges().size());
  for (int d = 0; d < sig.max_depth() && hedge_count > 0; ++d) {
    std::vector<std::vector<HedgeId>> next;
    for (const auto& s : frontier) {
      for (HedgeId h = 0; h < hedge_count; ++h) {
        std::vector<HedgeId> longer;
        longer.reserve(s.size() + 1);
        longer.push_back(h);
        longer.insert(longer.end(), s.begin(), s.end());
        next.push_back(std::move(longer));
      }
    }
    strings.insert(strings.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<Term> out;
  out.reserve(2 * strings.size() + 3);
  out.push_back(Term::bottom());
  out.push_back(Term::neutral());
  out.push_back(Term::top());
  for (const auto& s : strings) {
    out.emplace_back(Generator::False, s);
    out.emplace_back(Generator::True, s);
  }
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return less(sig, a, b); });
  return out;
}

Term::Term(Generator generator, std::span<const HedgeId> hedges) : generator_(generator) {
  if (hedges.size() > kMaxHedgeDepth) {
    throw Error(ErrorCode::DepthExceeded, "hedge string longer than " +
                                              std::to_string(kMaxHedgeDepth));
  }
  depth_ = static_cast<std::uint8_t>(hedges.size());
  std::copy(hedges.begin(), hedges.end(), hedges_.begin());
}

Term Term::mirrored() const {
  Term out = *this;
  switch (generator_) {
    case Generator::Bottom: out.generator_ = Generator::Top; break;
    case Generator::Top: out.generator_ = Generator::Bottom; break;
    case Generator::W: break;
    case Generator::True: out.generator_ = Generator::False; break;
    case Generator::False: out.generator_ = Generator::True; break;
  }
  return out;
}

Term negate(const Term& x) { return x.mirrored(); }

Term meet(const AlgebraSignature& sig, const Term& x, const Term& y) {
  return less(sig, y, x) ? y : x;
}

Term join(const AlgebraSignature& sig, const Term& x, const Term& y) {
  return less(sig, x, y) ? y : x;
}

Term implies_value(const AlgebraSignature& sig, const Term& x, const Term& y) {
  return join(sig, negate(x), y);
}

// ---------------------------------------------------------------------------
// OrderedDomain and Lukasiewicz operators

OrderedDomain::OrderedDomain(const AlgebraSignature& sig, IndexSpace space) {
  terms_ = enumerate_domain(sig);
  if (space == IndexSpace::TruthTerms) {
    std::erase_if(terms_, [](const Term& t) { return !accepts_hedges(t.generator()); });
  }
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::size_t OrderedDomain::index_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) {
    throw Error(ErrorCode::MalformedTerm, "term outside the index space");
  }
  return it->second;
}

Term OrderedDomain::luk_tnorm(const Term& x, const Term& y) const {
  return at(extended::tnorm(extended::Family::Lukasiewicz, index_of(x),
                            index_of(y), max_index()));
}

Term OrderedDomain::luk_tconorm(const Term& x, const Term& y) const {
  return at(extended::tconorm(extended::Family::Lukasiewicz, index_of(x),
                              index_of(y), max_index()));
}

Term luk_tnorm(const AlgebraSignature& sig, const Term& x, const Term& y,
               IndexSpace space) {
  return OrderedDomain(sig, space).luk_tnorm(x, y);
}

Term luk_tconorm(const AlgebraSignature& sig, const Term& x, const Term& y,
                 IndexSpace space) {
  return OrderedDomain(sig, space).luk_tconorm(x, y);
}

namespace extended {

std::size_t tnorm(Family family, std::size_t m, std::size_t n, std::size_t n0) {
  if (family == Family::Godel) return std::min(m, n);
  return m + n >= n0 ? m + n - n0 : 0;
}

std::size_t tconorm(Family family, std::size_t m, std::size_t n, std::size_t n0) {
  if (family == Family::Godel) return std::max(m, n);
  return std::min(m + n, n0);
}

}  // namespace extended

// ---------------------------------------------------------------------------
// Text codec

std::string format_term(const AlgebraSignature& sig, const Term& t) {
  std::string out;
  for (HedgeId id : t.hedges()) out += sig.hedge(id).name;
  out += generator_name(t.generator());
  return out;
}

std::optional<Term> try_parse_term(const AlgebraSignature& sig,
                                   std::string_view text) {
  std::vector<HedgeId> hedges;
  std::size_t pos = 0;
  std::optional<Generator> generator;
  while (true) {
    const std::string_view rest = text.substr(pos);
    if ((generator = generator_from_name(rest))) break;
    std::optional<HedgeId> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < sig.hedges().size(); ++i) {
      const auto& name = sig.hedges()[i].name;
      if (name.size() > best_len && rest.starts_with(name)) {
        best = static_cast<HedgeId>(i);
        best_len = name.size();
      }
    }
    if (!best) return std::nullopt;
    hedges.push_back(*best);
    pos += best_len;
  }
  if (!hedges.empty() && !accepts_hedges(*generator)) {
    throw Error(ErrorCode::MalformedTerm,
                "hedges cannot be applied to " + std::string(generator_name(*generator)));
  }
  if (hedges.size() > static_cast<std::size_t>(sig.max_depth())) {
    throw Error(ErrorCode::DepthExceeded,
                "term '" + std::string(text) + "' has " + std::to_string(hedges.size()) +
                    " hedges, max depth is " + std::to_string(sig.max_depth()));
  }
  return Term(*generator, std::move(hedges));
}

Term parse_term(const AlgebraSignature& sig, std::string_view text) {
  auto t = try_parse_term(sig, text);
  if (!t) {
    throw Error(ErrorCode::UnknownToken, "unknown term '" + std::string(text) + "'");
  }
  return *std::move(t);
}

}  // namespace lingres
