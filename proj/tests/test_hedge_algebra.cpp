#include <gtest/gtest.h>

#include <algorithm>

#include "support/printers.hpp"
#include "lingres/error.hpp"
#include "lingres/hedge_algebra.hpp"

namespace lingres {
namespace {

AlgebraSignature more_less() { return AlgebraSignature::build({"More"}, {"Less"}, 1); }

Term T(const AlgebraSignature& sig, std::string_view text) { return parse_term(sig, text); }

int sign_of(HedgeClass c) { return c == HedgeClass::Positive ? 1 : -1; }

// Builds the order by nesting: every term's one-hedge extensions sit on either
// side of it according to direction, stronger ones further out, and each
// extension's own subtree stays contiguous.
void nested_block(const AlgebraSignature& sig, const Term& x, int direction,
                  std::vector<Term>& out) {
  if (static_cast<int>(x.depth()) == sig.max_depth()) {
    out.push_back(x);
    return;
  }
  struct Child {
    Term term;
    int direction;
    int strength;
  };
  std::vector<Child> below, above;
  for (HedgeId h = 0; h < sig.hedges().size(); ++h) {
    std::vector<HedgeId> hs{h};
    hs.insert(hs.end(), x.hedges().begin(), x.hedges().end());
    const int e = sign_of(sig.hedge(h).hedge_class) * direction;
    (e > 0 ? above : below).push_back({Term(x.generator(), hs), e, sig.hedge(h).strength});
  }
  std::sort(below.begin(), below.end(),
            [](const Child& a, const Child& b) { return a.strength > b.strength; });
  std::sort(above.begin(), above.end(),
            [](const Child& a, const Child& b) { return a.strength < b.strength; });
  for (const auto& c : below) nested_block(sig, c.term, c.direction, out);
  out.push_back(x);
  for (const auto& c : above) nested_block(sig, c.term, c.direction, out);
}

std::vector<Term> nested_order(const AlgebraSignature& sig) {
  std::vector<Term> out{Term::bottom()};
  nested_block(sig, Term::falsity(), -1, out);
  out.push_back(Term::neutral());
  nested_block(sig, Term::truth(), 1, out);
  out.push_back(Term::top());
  return out;
}

TEST(Signature, DefaultHasFortyFiveTerms) {
  const auto sig = default_signature();
  EXPECT_EQ(sig.domain_size(), 45u);
  EXPECT_EQ(enumerate_domain(sig).size(), 45u);
}

TEST(Signature, DomainSizeMatchesCount) {
  for (int depth = 0; depth <= 3; ++depth) {
    const auto sig = AlgebraSignature::build({"V", "M"}, {"P"}, depth);
    std::size_t strings = 0, power = 1;
    for (int i = 0; i <= depth; ++i, power *= 3) strings += power;
    EXPECT_EQ(sig.domain_size(), 2 * strings + 3);
    EXPECT_EQ(enumerate_domain(sig).size(), sig.domain_size());
  }
}

TEST(Signature, NoHedges) {
  const auto sig = AlgebraSignature::build({}, {}, 0);
  const std::vector<Term> expected{Term::bottom(), Term::falsity(), Term::neutral(),
                                   Term::truth(), Term::top()};
  EXPECT_EQ(enumerate_domain(sig), expected);
}

TEST(Signature, Rejections) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::BadOption;
  };
  EXPECT_EQ(code([] { AlgebraSignature::build({"M", "M"}, {}, 1); }),
            ErrorCode::DuplicateHedgeName);
  EXPECT_EQ(code([] { AlgebraSignature::build({"M"}, {"M"}, 1); }),
            ErrorCode::DuplicateHedgeName);
  EXPECT_EQ(code([] { AlgebraSignature::build({"True"}, {}, 1); }), ErrorCode::ReservedName);
  EXPECT_EQ(code([] { AlgebraSignature::build({}, {"W"}, 1); }), ErrorCode::ReservedName);
  EXPECT_EQ(code([] { AlgebraSignature::build({}, {}, -1); }), ErrorCode::NegativeDepth);
}

TEST(Order, MoreLessChain) {
  const auto sig = more_less();
  const std::vector<std::string> expected{"Bot",   "MoreFalse", "False", "LessFalse", "W",
                                          "LessTrue", "True",  "MoreTrue", "Top"};
  std::vector<std::string> got;
  for (const auto& t : enumerate_domain(sig)) got.push_back(format_term(sig, t));
  EXPECT_EQ(got, expected);
}

TEST(Order, DirectionExamples) {
  const auto sig = default_signature();
  EXPECT_TRUE(compare(sig, T(sig, "VMTrue"), T(sig, "VTrue")) > 0);
  EXPECT_TRUE(compare(sig, T(sig, "PLTrue"), T(sig, "LTrue")) > 0);
  EXPECT_TRUE(compare(sig, T(sig, "VLTrue"), T(sig, "LTrue")) < 0);
  EXPECT_TRUE(compare(sig, T(sig, "PTrue"), T(sig, "LTrue")) > 0);
  EXPECT_TRUE(compare(sig, T(sig, "MTrue"), T(sig, "VTrue")) > 0);
}

TEST(Order, MatchesNestedConstruction) {
  for (int depth = 0; depth <= 3; ++depth) {
    const auto sig = AlgebraSignature::build({"V", "M"}, {"P", "L"}, depth);
    EXPECT_EQ(enumerate_domain(sig), nested_order(sig)) << "depth " << depth;
  }
  const auto lopsided = AlgebraSignature::build({"A", "B", "C"}, {"D"}, 2);
  EXPECT_EQ(enumerate_domain(lopsided), nested_order(lopsided));
}

TEST(Order, TotalOrderExhaustive) {
  const auto sig = default_signature();
  const auto d = enumerate_domain(sig);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(compare(sig, d[i], d[i]), std::strong_ordering::equal);
    for (std::size_t j = 0; j < d.size(); ++j) {
      EXPECT_EQ(compare(sig, d[i], d[j]), i <=> j);
    }
  }
}

TEST(Order, HedgeAxioms) {
  const auto sig = default_signature();
  const auto d = enumerate_domain(sig);
  for (const auto& x : d) {
    if (x.generator() != Generator::True && x.generator() != Generator::False) continue;
    if (static_cast<int>(x.depth()) >= sig.max_depth()) continue;
    // running direction of x: True/False sign times every hedge sign
    int dir = x.generator() == Generator::True ? 1 : -1;
    for (auto h : x.hedges()) dir *= sign_of(sig.hedge(h).hedge_class);
    for (HedgeId h = 0; h < sig.hedges().size(); ++h) {
      std::vector<HedgeId> hs{h};
      hs.insert(hs.end(), x.hedges().begin(), x.hedges().end());
      const Term hx(x.generator(), hs);
      const int expected = sign_of(sig.hedge(h).hedge_class) * dir;
      EXPECT_EQ(compare(sig, hx, x) > 0, expected > 0) << format_term(sig, hx);
    }
  }
  // equal outer hedges preserve the order of the inner terms
  for (const auto& x : d) {
    for (const auto& y : d) {
      if (x.generator() != y.generator() || x.depth() != 1 || y.depth() != 1) continue;
      if (x.generator() != Generator::True && x.generator() != Generator::False) continue;
      for (HedgeId h = 0; h < sig.hedges().size(); ++h) {
        const Term hx(x.generator(), {h, x.hedges()[0]});
        const Term hy(y.generator(), {h, y.hedges()[0]});
        if (compare(sig, x, y) <= 0) EXPECT_TRUE(compare(sig, hx, hy) <= 0);
      }
    }
  }
}

TEST(Order, SideConfinement) {
  const auto sig = default_signature();
  for (const auto& x : enumerate_domain(sig)) {
    if (x.generator() == Generator::False) {
      EXPECT_TRUE(less(sig, Term::bottom(), x) && less(sig, x, Term::neutral()));
    }
    if (x.generator() == Generator::True) {
      EXPECT_TRUE(less(sig, Term::neutral(), x) && less(sig, x, Term::top()));
    }
  }
}

TEST(Negation, Examples) {
  const auto sig = default_signature();
  EXPECT_EQ(negate(T(sig, "VMTrue")), T(sig, "VMFalse"));
  EXPECT_EQ(negate(Term::neutral()), Term::neutral());
  EXPECT_EQ(negate(Term::bottom()), Term::top());
  EXPECT_EQ(negate(Term::top()), Term::bottom());
}

TEST(Negation, InvolutiveAndOrderReversing) {
  const auto sig = default_signature();
  const auto d = enumerate_domain(sig);
  for (const auto& x : d) {
    EXPECT_EQ(negate(negate(x)), x);
    for (const auto& y : d) {
      EXPECT_EQ(compare(sig, x, y) <= 0, compare(sig, negate(y), negate(x)) <= 0);
    }
  }
}

TEST(Connectives, MoreLessGodel) {
  const auto sig = more_less();
  EXPECT_EQ(join(sig, T(sig, "LessFalse"), T(sig, "False")), T(sig, "LessFalse"));
  EXPECT_EQ(meet(sig, T(sig, "MoreTrue"), T(sig, "True")), T(sig, "True"));
}

TEST(Connectives, MoreLessLukasiewicz) {
  const auto sig = more_less();
  const OrderedDomain six(sig, IndexSpace::TruthTerms);
  ASSERT_EQ(six.size(), 6u);
  EXPECT_EQ(six.index_of(T(sig, "LessFalse")), 2u);
  EXPECT_EQ(six.index_of(T(sig, "MoreTrue")), 5u);
  EXPECT_EQ(luk_tconorm(sig, T(sig, "LessFalse"), T(sig, "False"), IndexSpace::TruthTerms),
            T(sig, "LessTrue"));
  // max(0, 5 + 4 - 5) = 4
  EXPECT_EQ(luk_tnorm(sig, T(sig, "MoreTrue"), T(sig, "True"), IndexSpace::TruthTerms),
            T(sig, "True"));
  EXPECT_THROW(six.index_of(Term::neutral()), Error);
}

TEST(Connectives, Boundaries) {
  const auto sig = default_signature();
  for (const auto& x : enumerate_domain(sig)) {
    EXPECT_EQ(meet(sig, x, Term::top()), x);
    EXPECT_EQ(join(sig, x, Term::bottom()), x);
    EXPECT_EQ(luk_tnorm(sig, x, Term::top()), x);
    EXPECT_EQ(luk_tconorm(sig, x, Term::bottom()), x);
    EXPECT_EQ(implies_value(sig, Term::bottom(), x), Term::top());
    EXPECT_TRUE(compare(sig, implies_value(sig, x, x), Term::neutral()) >= 0);
  }
  EXPECT_EQ(implies_value(sig, Term::truth(), Term::falsity()), Term::falsity());
}

TEST(Connectives, LatticeLawsExhaustive) {
  const auto sig = default_signature();
  const auto d = enumerate_domain(sig);
  for (const auto& x : d) {
    for (const auto& y : d) {
      ASSERT_EQ(meet(sig, x, y), meet(sig, y, x));
      ASSERT_EQ(join(sig, x, y), join(sig, y, x));
      ASSERT_EQ(negate(join(sig, x, y)), meet(sig, negate(x), negate(y)));
      ASSERT_EQ(negate(meet(sig, x, y)), join(sig, negate(x), negate(y)));
      for (const auto& z : d) {
        ASSERT_EQ(meet(sig, x, meet(sig, y, z)), meet(sig, meet(sig, x, y), z));
        ASSERT_EQ(join(sig, x, join(sig, y, z)), join(sig, join(sig, x, y), z));
        ASSERT_EQ(meet(sig, x, join(sig, y, z)), join(sig, meet(sig, x, y), meet(sig, x, z)));
        ASSERT_EQ(join(sig, x, meet(sig, y, z)), meet(sig, join(sig, x, y), join(sig, x, z)));
      }
    }
  }
}

TEST(Connectives, ExtendedOperatorAxioms) {
  using extended::Family;
  const std::size_t n0 = default_signature().domain_size() - 1;
  for (auto fam : {Family::Godel, Family::Lukasiewicz}) {
    for (std::size_t m = 0; m <= n0; ++m) {
      ASSERT_EQ(extended::tnorm(fam, m, n0, n0), m);
      ASSERT_EQ(extended::tconorm(fam, 0, m, n0), m);
      for (std::size_t n = 0; n <= n0; ++n) {
        const auto t = extended::tnorm(fam, m, n, n0);
        const auto s = extended::tconorm(fam, m, n, n0);
        ASSERT_EQ(t, extended::tnorm(fam, n, m, n0));
        ASSERT_EQ(s, extended::tconorm(fam, n, m, n0));
        ASSERT_EQ(s, n0 - extended::tnorm(fam, n0 - n, n0 - m, n0));
        if (n < n0) {
          ASSERT_LE(t, extended::tnorm(fam, m, n + 1, n0));
          ASSERT_LE(s, extended::tconorm(fam, m, n + 1, n0));
        }
        for (std::size_t k = 0; k <= n0; k += 4) {
          ASSERT_EQ(extended::tnorm(fam, m, extended::tnorm(fam, n, k, n0), n0),
                    extended::tnorm(fam, extended::tnorm(fam, m, n, n0), k, n0));
          ASSERT_EQ(extended::tconorm(fam, m, extended::tconorm(fam, n, k, n0), n0),
                    extended::tconorm(fam, extended::tconorm(fam, m, n, n0), k, n0));
        }
      }
    }
  }
}

TEST(Codec, ParseAndFormat) {
  const auto sig = default_signature();
  EXPECT_EQ(T(sig, "VMTrue"), Term(Generator::True, {0, 1}));
  EXPECT_EQ(T(sig, "W"), Term::neutral());
  for (const auto& t : enumerate_domain(sig)) EXPECT_EQ(T(sig, format_term(sig, t)), t);
  auto code = [&](std::string_view s) {
    try {
      parse_term(sig, s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadOption;
  };
  EXPECT_EQ(code("VVVTrue"), ErrorCode::DepthExceeded);
  EXPECT_EQ(code("XTrue"), ErrorCode::UnknownToken);
  EXPECT_EQ(code("VW"), ErrorCode::MalformedTerm);
  EXPECT_FALSE(try_parse_term(sig, "Maybe").has_value());
}

TEST(Codec, LongHedgeNames) {
  const auto sig = more_less();
  EXPECT_EQ(T(sig, "MoreTrue"), Term(Generator::True, {0}));
  EXPECT_EQ(format_term(sig, T(sig, "LessFalse")), "LessFalse");
}

}  // namespace
}  // namespace lingres
