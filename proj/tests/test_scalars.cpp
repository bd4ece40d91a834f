#include <gtest/gtest.h>

#include <random>

#include "g2lat/jet.hpp"
#include "g2lat/scalar.hpp"

using namespace g2lat;
using S5 = RationalScalar<F5>;
using SQ = RationalScalar<Qq>;

namespace {

// Valuation oracle: powers of t dividing numerator and denominator.
template <class K>
int oracle_valuation(const Polynomial<K>& num, const Polynomial<K>& den) {
  return num.t_adic_order() - den.t_adic_order();
}

S5 random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3), ex(-2, 2);
  auto poly = [&] {
    std::vector<F5> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = F5::random(rng);
    return Polynomial<F5>(c);
  };
  Polynomial<F5> n = poly(), d = poly();
  if (d.is_zero()) d = Polynomial<F5>(F5(1));
  return S5::from_parts(ex(rng), n, d);
}

}  // namespace

TEST(Scalars, ParsePolynomial) {
  auto x = parse_scalar<F5>("t^2 + 3*t");
  EXPECT_TRUE(x.is_laurent_polynomial());
  EXPECT_EQ(x.valuation(), 1);
  EXPECT_EQ(x.to_string(), "t^2 + 3*t");
  EXPECT_EQ(x.numerator(), Polynomial<F5>(std::vector<F5>{3, 1}));
}

TEST(Scalars, ParseUnitDenominator) {
  auto x = parse_scalar<F5>("1/(1+t)");
  EXPECT_EQ(x.valuation(), 0);
  EXPECT_TRUE(x.is_unit());
  EXPECT_EQ(x.to_string(), "1/(t + 1)");
}

TEST(Scalars, NegativeExponent) {
  auto x = parse_scalar<F5>("t^-1");
  EXPECT_EQ(x.valuation(), -1);
  auto n = x.numerator(), d = x.denominator();
  EXPECT_EQ(oracle_valuation(n.shift_up(0), d) + x.t_exponent(), -1);
  // Jet expansion agrees: t^-1 * t = 1.
  auto j = LaurentJet<F5>::from_scalar(x, 4);
  EXPECT_EQ(j.valuation(), -1);
  EXPECT_EQ(j.coefficient(-1), F5(1));
}

TEST(Scalars, Valuation) {
  EXPECT_EQ(S5().valuation(), kInfiniteValuation);
  auto x = parse_scalar<F5>("t^2*(1+t)/(1-t)");
  EXPECT_EQ(x.valuation(), 2);
  EXPECT_EQ(parse_scalar<F5>("t^-1").valuation(), -1);
  EXPECT_EQ(parse_scalar<F5>("t/t^3").valuation(), -2);
  EXPECT_EQ(parse_scalar<F5>("5*t").valuation(), kInfiniteValuation);
}

TEST(Scalars, FieldOps) {
  auto x = parse_scalar<F5>("1+t");
  EXPECT_TRUE((x * x.inverse()).is_one());
  EXPECT_TRUE((parse_scalar<F5>("1/(1+t)") + parse_scalar<F5>("t/(1+t)")).is_one());
  EXPECT_EQ(parse_scalar<F5>("(2+t)*(3+t)"), parse_scalar<F5>("1 + t^2"));
  EXPECT_THROW(S5().inverse(), DivisionByZero);
}

TEST(Scalars, ParseErrors) {
  try {
    parse_scalar<F5>("t + * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_scalar<F5>("(1+t)^-1"), ParseError);
  EXPECT_THROW(parse_scalar<F5>("1/(t-t)"), ParseError);
  EXPECT_THROW(parse_scalar<F5>(""), ParseError);
  EXPECT_THROW(parse_scalar<F5>("(1+t"), ParseError);
}

TEST(Scalars, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto x = random_scalar(rng);
    auto y = parse_scalar<F5>(x.to_string());
    EXPECT_EQ(x, y) << x.to_string();
    EXPECT_EQ(y.to_string(), x.to_string());
  }
  for (const char* s : {"1/2*t - 3/4", "-t^-2 + 1/3", "(t + 1)/(1/2*t^2 + 1)", "t^3/(2 - t)"}) {
    auto x = parse_scalar<Qq>(s);
    EXPECT_EQ(parse_scalar<Qq>(x.to_string()), x) << s;
  }
}

TEST(Scalars, ValuationLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto x = random_scalar(rng), y = random_scalar(rng);
    if (x.is_zero() || y.is_zero()) continue;
    EXPECT_EQ((x * y).valuation(), x.valuation() + y.valuation());
    auto s = x + y;
    EXPECT_GE(s.valuation(), std::min(x.valuation(), y.valuation()));
    if (x.valuation() != y.valuation()) {
      EXPECT_EQ(s.valuation(), std::min(x.valuation(), y.valuation()));
    }
  }
}

TEST(Scalars, TruncateBelow) {
  auto x = parse_scalar<F5>("t^-1/(1-t)");
  auto tr = x.truncate_below(2);
  EXPECT_EQ(tr, parse_scalar<F5>("t^-1 + 1 + t"));
  EXPECT_GE((x - tr).valuation(), 2);
}

TEST(Jets, MultiplicationAgreesWithFieldArithmetic) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto x = random_scalar(rng), y = random_scalar(rng);
    for (int n : {1, 5, 12}) {
      auto jx = LaurentJet<F5>::from_scalar(x, n), jy = LaurentJet<F5>::from_scalar(y, n);
      auto prod = jx * jy;
      EXPECT_TRUE(agree(prod, LaurentJet<F5>::from_scalar(x * y, n + 20)));
      EXPECT_TRUE(agree(jx + jy, LaurentJet<F5>::from_scalar(x + y, n)));
    }
  }
}

TEST(Jets, SquareRoot) {
  auto sq = LaurentJet<F5>::from_scalar(parse_scalar<F5>("(1+t)^2"), 8);
  auto r = jet_sqrt(sq, F5(1));
  EXPECT_TRUE(agree(r, LaurentJet<F5>::from_scalar(parse_scalar<F5>("1+t"), 8)));
  EXPECT_EQ(r.precision(), 8);

  auto q = jet_sqrt(LaurentJet<Qq>::from_scalar(parse_scalar<Qq>("1+t"), 4));
  EXPECT_EQ(q.truncation(), parse_scalar<Qq>("1 + 1/2*t - 1/8*t^2 + 1/16*t^3"));
  // Squaring returns the input to the stated precision.
  EXPECT_TRUE(agree(q * q, LaurentJet<Qq>::from_scalar(parse_scalar<Qq>("1+t"), 4)));

  EXPECT_THROW(jet_sqrt(LaurentJet<F5>::from_scalar(S5::t(), 6)), PreconditionViolated);
  EXPECT_THROW(jet_sqrt(LaurentJet<F5>::from_scalar(S5(2), 6)), NeedsEtaleExtension);
}

TEST(Jets, SquareRootOfSquareRecoversSign) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto s = random_scalar(rng);
    if (s.is_zero()) continue;
    auto js = LaurentJet<F5>::from_scalar(s, s.valuation() + 10);
    auto r = jet_sqrt(js * js, js.leading_coefficient());
    EXPECT_TRUE(agree(r, js));
  }
}

TEST(Jets, InversePrecision) {
  auto x = LaurentJet<F5>::from_scalar(parse_scalar<F5>("t^2 + t^3"), 6);
  auto inv = x.inverse();
  EXPECT_EQ(inv.valuation(), -2);
  EXPECT_EQ(inv.precision(), 2);
  EXPECT_TRUE(agree(inv, LaurentJet<F5>::from_scalar(parse_scalar<F5>("1/(t^2+t^3)"), 2)));
}

TEST(BaseField, SquareRoots) {
  for (std::uint32_t a = 0; a < 13; ++a) {
    auto r = F13(a).sqrt();
    if (r) {
      EXPECT_EQ(*r * *r, F13(a));
    }
    EXPECT_EQ(r.has_value(), F13(a).is_square());
  }
  EXPECT_EQ(Qq(mpq_class(9, 4)).sqrt()->value(), mpq_class(3, 2));
  EXPECT_FALSE(Qq(2).sqrt().has_value());
  EXPECT_EQ(Qq(mpq_class(-12, 5)).squarefree_part(), -15);
}
