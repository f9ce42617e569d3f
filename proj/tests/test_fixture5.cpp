#include <gtest/gtest.h>

#include "poincare/actors.hpp"
#include "poincare/alpha_engine.hpp"
#include "poincare/fixture5.hpp"

namespace poincare {
namespace {

TEST(Fixture5, CofactorIdentity) {
  const auto fx = Fixture5::make();
  EXPECT_TRUE(fx.bezout_identity_holds());
  EXPECT_TRUE(fx.reflection_holds());
  EXPECT_EQ(fx.a.z_degree(), 7);
  EXPECT_EQ(fx.b.z_degree(), 7);
}

TEST(Fixture5, DroppedTermBreaksIdentity) {
  const auto fx = Fixture5::make(true);
  EXPECT_FALSE(fx.bezout_identity_holds());
  EXPECT_FALSE(fx.reflection_holds());
  // The missing t^12 z^0 term of a shows up as t^12 q in the difference.
  const auto diff = fx.combination() + (-fx.phi);
  const auto expected = BivariatePolynomial({IntPolynomial::monomial(-1, 12)}) * fx.q;
  EXPECT_EQ(diff, expected);
}

TEST(Fixture5, PhiIsDivisibleByR) {
  const auto fx = Fixture5::make();
  const auto r = build_r(derive_parameters(5));
  EXPECT_EQ(fx.phi.z_coefficient(9), r);
  EXPECT_EQ(fx.phi.z_coefficient(7), -r);
  EXPECT_EQ(fx.phi.term_count(), 2 * 8u);
}

TEST(Fixture5, ConstantTermIsAlpha) {
  const auto fx = Fixture5::make();
  SolverConfig c;
  EXPECT_EQ(compute_alpha(derive_parameters(5), c).poly, fx.a.z_coefficient(0));
  EXPECT_EQ(fx.a.z_coefficient(0), (IntPolynomial{1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
}

// The printed a and b have the degree bounds used by the modular solver:
// z-degree m - 2 and t-degree at most d - s.
TEST(Fixture5, DegreeBounds) {
  const auto fx = Fixture5::make();
  const auto params = derive_parameters(5);
  EXPECT_EQ(fx.a.z_degree(), params.m - 2);
  for (const auto& c : fx.a.by_z()) EXPECT_LE(c.degree(), params.d - params.s);
  for (const auto& c : fx.b.by_z()) EXPECT_LE(c.degree(), params.d - params.s);
}

}  // namespace
}  // namespace poincare
