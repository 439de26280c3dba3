#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace nashblow {
namespace {

Ideal id(const ContextPtr& c, std::initializer_list<std::string> g) { return Ideal::parse(c, g); }

std::vector<std::string> shown(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.canonical_generators()) out.push_back(i.context()->format(g));
  return out;
}

TEST(ProductInclusion, Examples) {
  auto line = testing::affine_line();
  Ideal x = id(line.ctx, {"x"});
  EXPECT_TRUE(check_thm12(x, x, line.fol).holds());
  auto cusp = testing::cusp();
  Ideal j1 = id(cusp.ctx, {"y", "x^2"});
  EXPECT_TRUE(check_thm12(Ideal::unit(cusp.ctx), j1, cusp.fol).holds());
  auto v = check_thm12(j1, j1, cusp.fol);
  EXPECT_TRUE(v.holds());
  EXPECT_FALSE(v.alarm);
}

TEST(PowerIdentity, Examples) {
  auto line = testing::affine_line();
  Ideal x = id(line.ctx, {"x"});
  EXPECT_TRUE(check_thm14(x, 1, line.fol).holds());
  EXPECT_TRUE(check_thm14(x, 3, line.fol).holds());
  auto cusp = testing::cusp();
  EXPECT_TRUE(check_thm14(id(cusp.ctx, {"y", "x^2"}), 2, cusp.fol).holds());
  EXPECT_THROW(check_thm14(x, 0, line.fol), std::invalid_argument);
}

TEST(MainInclusion, Examples) {
  auto cusp = testing::cusp();
  EXPECT_TRUE(check_main_inclusion(Ideal::unit(cusp.ctx), cusp.fol).holds());
  auto line = testing::affine_line();
  EXPECT_TRUE(check_main_inclusion(id(line.ctx, {"x"}), line.fol).holds());
  auto zero = check_main_inclusion(Ideal::zero(cusp.ctx), cusp.fol);
  EXPECT_TRUE(zero.holds());
  EXPECT_TRUE(zero.degenerate);
}

TEST(MainEquality, CuspStepZeroFailsThroughBound) {
  auto cusp = testing::cusp();
  auto v = check_main_equality(Ideal::unit(cusp.ctx), cusp.fol, 8);
  EXPECT_EQ(v.status, CheckStatus::inconclusive);
  ASSERT_TRUE(v.bound_hit.has_value());
  EXPECT_EQ(*v.bound_hit, 8u);
  EXPECT_EQ(v.scan.size(), 9u);
  for (const auto& [n, ok] : v.scan) EXPECT_FALSE(ok) << n;
  ASSERT_TRUE(v.failing_generator.has_value());
  EXPECT_EQ(v.failing_direction, "rhs_in_lhs");
  // 6 x^4, written x y^2 mod P
  EXPECT_EQ(cusp.ctx->format(v.failing_generator->normal_form), "6*x*y^2");
  EXPECT_FALSE(v.alarm);
}

TEST(MainEquality, Examples) {
  auto cusp = testing::cusp();
  auto v = check_main_equality(id(cusp.ctx, {"y", "x^2"}), cusp.fol, 8);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.exponent, 0u);
  auto line = testing::affine_line();
  auto w = check_main_equality(id(line.ctx, {"x"}), line.fol, 8);
  EXPECT_TRUE(w.holds());
  EXPECT_EQ(w.exponent, 0u);
  auto zero = check_main_equality(Ideal::zero(cusp.ctx), cusp.fol, 3);
  EXPECT_TRUE(zero.holds());
  EXPECT_TRUE(zero.degenerate);
}

TEST(Divisibility, Examples) {
  auto line = testing::affine_line();
  auto v = check_divisibility(id(line.ctx, {"x"}), line.fol, 6);
  EXPECT_TRUE(v.holds());
  // J((x)) = (x^2) is principal, so alpha = 1 already works with S = (x^-1)
  EXPECT_EQ(v.exponent, 1u);
  auto plane = testing::affine_plane();
  auto u = check_divisibility(Ideal::unit(plane.ctx), plane.fol, 6);
  EXPECT_TRUE(u.holds());
  EXPECT_EQ(u.exponent, 1u);
  auto cusp = testing::cusp();
  EXPECT_THROW(check_divisibility(Ideal::zero(cusp.ctx), cusp.fol, 6), std::domain_error);
}

TEST(Divisibility, CuspFirstChainIdeal) {
  auto cusp = testing::cusp();
  Ideal j1 = id(cusp.ctx, {"y", "x^2"});
  auto v = check_divisibility(j1, cusp.fol, 6);
  ASSERT_TRUE(v.holds());
  EXPECT_EQ(v.exponent, 1u);
  ASSERT_TRUE(v.divisor.has_value());
  // J(J1) = x^3 (x, y); with x = t^2, y = t^3 it is everything of order >= 8,
  // J1 everything of order >= 3, so S = (x^2, x y) / y^3 has S J(J1) = J1
  Ideal jj = j_of(j1, cusp.fol);
  const FractionalIdeal& s = *v.divisor;
  EXPECT_TRUE(fractional_equal({ideal_product(s.numerator, jj), s.denominator}, {j1, cusp.ctx->one()}));
  EXPECT_TRUE(fractional_equal(s, {id(cusp.ctx, {"x^2", "x*y"}), cusp.ctx->parse("y^3")}));
  // alpha = 2 works as well; (1/x) is one divisor, the maximal one is (x, y) / x^2
  auto at2 = divides_power(jj, ideal_power(j1, 2));
  ASSERT_TRUE(at2.has_value());
  EXPECT_TRUE(fractional_equal(*at2, {id(cusp.ctx, {"x", "y"}), cusp.ctx->parse("x^2")}));
  EXPECT_TRUE(ideal_equal(ideal_scale(jj, cusp.ctx->one()), ideal_scale(ideal_power(j1, 2), cusp.ctx->parse("x"))));
}

TEST(Divisibility, CuspUnitIdealNeverDivides) {
  // J(R) = (y, x^2) is not invertible, and no power of (1) is divisible by it
  auto cusp = testing::cusp();
  auto v = check_divisibility(Ideal::unit(cusp.ctx), cusp.fol, 4);
  EXPECT_EQ(v.status, CheckStatus::inconclusive);
  EXPECT_EQ(v.bound_hit, 4u);
}

TEST(Toy, Fixtures) {
  auto cusp3 = toy_check(testing::cusp3().fol);
  EXPECT_EQ(cusp3.status, CheckStatus::fails);
  ASSERT_TRUE(cusp3.failing_generator.has_value());
  EXPECT_TRUE(toy_check(testing::line3().fol).holds());
  EXPECT_TRUE(toy_check(testing::twisted_cubic().fol).holds());
  EXPECT_THROW(toy_check(testing::cusp().fol), InputError);
  auto ctx = make_context({"x", "y", "z"}, {"z"});
  EXPECT_THROW(toy_check(Foliation(ctx, {Derivation::parse(*ctx, {"0", "0", "z"})})), InputError);
}

TEST(Chain, Cusp) {
  auto cusp = testing::cusp();
  auto rep = nash_chain(cusp.fol, 3, 6);
  ASSERT_TRUE(rep.terminated_at.has_value());
  EXPECT_EQ(*rep.terminated_at, 1u);
  ASSERT_EQ(rep.steps.size(), 2u);
  EXPECT_EQ(rep.steps[0].equality.status, CheckStatus::inconclusive);
  EXPECT_EQ(rep.steps[1].equality.exponent, 0u);
  EXPECT_EQ(shown(rep.steps[1].j), (std::vector<std::string>{"y", "x^2"}));
  EXPECT_EQ(shown(rep.steps[1].jj), (std::vector<std::string>{"y^3", "x*y^2"}));
  auto js = chain_ideals(cusp.fol, 2);
  EXPECT_TRUE(ideal_equal(js[2], ideal_scale(js[1], cusp.ctx->parse("x^4"))));
}

TEST(Chain, BoundaryAndContinuation) {
  auto cusp = testing::cusp();
  auto zero = nash_chain(cusp.fol, 0, 4);
  ASSERT_EQ(zero.steps.size(), 1u);
  EXPECT_TRUE(zero.steps[0].j.is_unit());
  EXPECT_FALSE(zero.terminated_at.has_value());
  auto more = nash_chain(cusp.fol, 2, 4, true);
  EXPECT_EQ(more.steps.size(), 3u);
  EXPECT_EQ(more.terminated_at, 1u);
  EXPECT_TRUE(more.steps[2].equality.holds());
  auto capped = nash_chain(cusp.fol, 3, 4, false, 3);
  EXPECT_TRUE(capped.truncated.has_value());
}

TEST(Chain, SmoothFixturesStopAtZero) {
  for (auto fx : {testing::affine_line(), testing::twisted_cubic(), testing::affine_plane()}) {
    auto rep = nash_chain(fx.fol, 3, 4);
    ASSERT_TRUE(rep.terminated_at.has_value()) << fx.name;
    EXPECT_EQ(*rep.terminated_at, 0u);
    EXPECT_EQ(rep.steps[0].equality.exponent, 0u);
  }
}

TEST(Identity, Cusp) {
  auto cusp = testing::cusp();
  auto rep = nash_chain(cusp.fol, 3, 4);
  auto v = section1_identity_check(rep, 1, 4, cusp.fol);
  EXPECT_TRUE(v.holds());
  for (unsigned n = 3; n <= 5; ++n) EXPECT_TRUE(section1_identity_check(rep, 1, n, cusp.fol).holds()) << n;
  EXPECT_THROW(section1_identity_check(rep, 1, 2, cusp.fol), std::invalid_argument);
  // at i = 0 the chain has not stabilized
  EXPECT_FALSE(section1_identity_check(rep, 0, 3, cusp.fol).holds());
}

TEST(ChecksProperty, MonotoneScan) {
  // evaluate every N independently rather than stopping at the first success
  for (auto fx : {testing::node(), testing::cusp(), testing::affine_line()}) {
    for (const Ideal& j : {Ideal::unit(fx.ctx), id(fx.ctx, {"x"})}) {
      MainSides s = main_sides(j, fx.fol);
      bool seen = false;
      for (unsigned n = 0; n <= 3; ++n) {
        Ideal jn = ideal_power(j, n);
        const bool eq = ideal_equal(ideal_product(jn, s.lhs), ideal_product(jn, s.rhs));
        if (seen) ASSERT_TRUE(eq) << fx.name << " N=" << n;
        seen = seen || eq;
      }
    }
  }
}

TEST(ChecksProperty, ToyAgreesWithFirstChainStep) {
  for (auto fx : testing::rank_one_space_curves()) {
    auto toy = toy_check(fx.fol);
    auto eq = check_main_equality(Ideal::unit(fx.ctx), fx.fol, kDefaultMaxN);
    EXPECT_EQ(toy.holds(), eq.holds()) << fx.name;
  }
}

}  // namespace
}  // namespace nashblow
