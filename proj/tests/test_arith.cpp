#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace nashblow {
namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial xy(std::string_view s) { return parse_polynomial(s, kXY); }

TEST(Parse, CuspEquationTerms) {
  Polynomial p = xy("y^2 - x^3");
  ASSERT_EQ(p.terms().size(), 2u);
  // grevlex: x^3 > y^2
  EXPECT_EQ(p.terms()[0].mono, (Monomial{3, 0}));
  EXPECT_EQ(p.terms()[0].coeff, -1);
  EXPECT_EQ(p.terms()[1].mono, (Monomial{0, 2}));
  EXPECT_EQ(p.terms()[1].coeff, 1);
}

TEST(Parse, ZeroAndCancellation) {
  EXPECT_TRUE(xy("0").is_zero());
  EXPECT_TRUE(xy("x - x").is_zero());
  Polynomial two = xy("2*(x+1)^2 - 2*x^2 - 4*x");
  EXPECT_EQ(two, Polynomial::constant(2, 2));
}

TEST(Parse, RationalsNormalized) {
  EXPECT_EQ(xy("6/4*x"), xy("3/2*x"));
  EXPECT_EQ(xy("-x^2"), xy("-1*x^2"));
  EXPECT_EQ(xy("(x)^0"), xy("1"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(xy("x*"), ParseError);
  EXPECT_THROW(xy("2x"), ParseError);
  EXPECT_THROW(xy("x y"), ParseError);
  EXPECT_THROW(xy("w + 1"), ParseError);
  EXPECT_THROW(xy("x^-1"), ParseError);
  EXPECT_THROW(xy("x^y"), ParseError);
  EXPECT_THROW(xy("1/0"), ParseError);
  EXPECT_THROW(xy("(x + 1"), ParseError);
  EXPECT_THROW(xy(""), ParseError);
  EXPECT_THROW(xy("x^1.5"), ParseError);
  try {
    xy("x + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Format, Canonical) {
  EXPECT_EQ(format_polynomial(xy("y^2 - x^3"), kXY), "-x^3 + y^2");
  EXPECT_EQ(format_polynomial(xy("0"), kXY), "0");
  EXPECT_EQ(format_polynomial(xy("3*x^2*y - 1/2*x + 1"), kXY), "3*x^2*y - 1/2*x + 1");
}

TEST(Multiply, Examples) {
  EXPECT_EQ(xy("x + y") * xy("x - y"), xy("x^2 - y^2"));
  EXPECT_TRUE((xy("x^3 + 7") * xy("0")).is_zero());
  EXPECT_EQ(xy("y^2 - x^3") * xy("y^2 + x^3"), xy("y^4 - x^6"));
}

TEST(Derivative, Examples) {
  EXPECT_EQ(xy("y^2 - x^3").partial_derivative(0), xy("-3*x^2"));
  EXPECT_TRUE(xy("5").partial_derivative(1).is_zero());
  EXPECT_EQ(xy("x^2*y + x*y^2").partial_derivative(0), xy("2*x*y + y^2"));
  EXPECT_THROW(xy("x").partial_derivative(2), std::out_of_range);
}

TEST(ArithProperty, RingAxioms) {
  auto ctx = make_context({"x", "y", "z"}, {});
  testing::RandomPolys gen(11);
  for (int round = 0; round < 150; ++round) {
    Polynomial a = gen.poly(*ctx, 4, 3), b = gen.poly(*ctx, 4, 3), c = gen.poly(*ctx, 4, 3);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * ctx->one(), a);
    ASSERT_EQ(a.pow(2), a * a);
  }
}

TEST(ArithProperty, Leibniz) {
  auto ctx = make_context({"x", "y", "z"}, {});
  testing::RandomPolys gen(12);
  for (int round = 0; round < 100; ++round) {
    Polynomial a = gen.poly(*ctx, 4, 4), b = gen.poly(*ctx, 4, 4);
    for (std::size_t v = 0; v < 3; ++v) {
      ASSERT_EQ((a * b).partial_derivative(v), a.partial_derivative(v) * b + a * b.partial_derivative(v));
    }
  }
}

TEST(ArithProperty, SubMulTermMatchesNaive) {
  auto ctx = make_context({"x", "y", "z"}, {});
  testing::RandomPolys gen(13);
  for (int round = 0; round < 100; ++round) {
    Polynomial f = gen.poly(*ctx, 5, 4), g = gen.poly(*ctx, 4, 3);
    Polynomial t = gen.poly(*ctx, 1, 2);
    const Term& lt = t.leading_term();
    Polynomial naive = f - Polynomial::monomial(lt.mono, lt.coeff) * g;
    ASSERT_EQ(f.sub_mul_term(lt.coeff, lt.mono, g), naive);
  }
}

TEST(ArithProperty, CanonicalFormIndependentOfConstructionOrder) {
  auto ctx = make_context({"x", "y", "z"}, {});
  testing::RandomPolys gen(14);
  std::mt19937 rng(3);
  for (int round = 0; round < 100; ++round) {
    Polynomial p = gen.poly(*ctx, 6, 4);
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    // split one coefficient so the rebuild has to collect like terms
    if (!terms.empty()) {
      Term half = terms.front();
      half.coeff /= 2;
      terms.front().coeff -= half.coeff;
      terms.push_back(half);
    }
    std::shuffle(terms.begin(), terms.end(), rng);
    Polynomial rebuilt = Polynomial::from_terms(3, terms);
    ASSERT_EQ(rebuilt, p);
    ASSERT_EQ(rebuilt.terms().size(), p.terms().size());
    Polynomial summed(3);
    for (const auto& t : terms) summed += Polynomial::monomial(t.mono, t.coeff);
    ASSERT_EQ(summed, p);
  }
}

TEST(ArithProperty, ParserRoundTripCorpus) {
  const auto corpus = testing::expression_corpus(200);
  for (const auto& c : corpus) {
    Polynomial p = parse_polynomial(c.text, kXYZ);
    ASSERT_EQ(p, c.expected) << c.text;
    const std::string shown = format_polynomial(p, kXYZ);
    ASSERT_EQ(parse_polynomial(shown, kXYZ), p) << shown;
    ASSERT_EQ(format_polynomial(parse_polynomial(shown, kXYZ), kXYZ), shown);
  }
}

TEST(Monomial, OrdersOnTwoVariables) {
  const Monomial x2{2, 0}, xy{1, 1}, y2{0, 2}, x{1, 0};
  auto grevlex = MonomialOrder::grevlex();
  EXPECT_TRUE(grevlex.less(xy, x2));
  EXPECT_TRUE(grevlex.less(y2, xy));
  EXPECT_TRUE(grevlex.less(x, y2));
  auto lex = MonomialOrder::lex();
  EXPECT_TRUE(lex.less(y2, x));
  auto elim = MonomialOrder::elimination(1);
  EXPECT_TRUE(elim.less(Monomial({0, 5}), x));
  EXPECT_TRUE(elim.less(Monomial({1, 0}), Monomial({1, 1})));
}

TEST(Monomial, GrevlexThreeVariables) {
  // x*z^2 vs y^3: same degree; grevlex compares the last variable first
  auto o = MonomialOrder::grevlex();
  EXPECT_TRUE(o.less(Monomial({1, 0, 2}), Monomial({0, 3, 0})));
  EXPECT_TRUE(o.less(Monomial({0, 2, 1}), Monomial({1, 1, 1})));
}

TEST(Monomial, DivisionAndLcm) {
  const Monomial a{2, 1, 0}, b{1, 3, 2};
  EXPECT_EQ(lcm(a, b), (Monomial{2, 3, 2}));
  EXPECT_TRUE(Monomial({1, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE(coprime(Monomial({1, 0, 0}), Monomial({0, 2, 1})));
  EXPECT_EQ(a.degree(), 3u);
}

TEST(Rational, MakeRational) {
  EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace nashblow
