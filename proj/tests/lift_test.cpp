#include <gtest/gtest.h>

#include "liftfact/error.hpp"
#include "liftfact/lifting.hpp"
#include "test_support.hpp"

namespace liftfact {
namespace {

using testing::poly;
using testing::z;

constexpr int kIterations = 300;

PolyMatrix2 diag(const Poly& a, const Poly& d) { return {a, Poly(), Poly(), d}; }
const PolyMatrix2 kJ{Poly(), poly({1}), poly({1}), Poly()};

LiftingStep random_step(testing::Rng& rng) {
  switch (rng.integer(0, 4)) {
    case 0:
      return UpperLift{rng.rational_poly(rng.integer(0, 3))};
    case 1:
      return LowerLift{rng.rational_poly(rng.integer(0, 3))};
    case 2:
      return DelayDiag{static_cast<std::size_t>(rng.integer(1, 3)), static_cast<int>(rng.integer(0, 1))};
    case 3:
      return GainDiag{rng.nonzero_rational(), rng.nonzero_rational()};
    default:
      return Swap{};
  }
}

std::vector<LiftingStep> random_steps(testing::Rng& rng, int n) {
  std::vector<LiftingStep> out;
  for (int i = 0; i < n; ++i) out.push_back(random_step(rng));
  return out;
}

// [gain] [delays] (lift [matched delay])* [swap] [delays]
::testing::AssertionResult standard_shape(const std::vector<LiftingStep>& s) {
  std::size_t i = 0;
  if (i < s.size() && std::holds_alternative<GainDiag>(s[i])) ++i;
  int last_channel = -1;
  while (i < s.size() && is_delay(s[i])) {
    int ch = std::get<DelayDiag>(s[i]).channel;
    if (ch <= last_channel) return ::testing::AssertionFailure() << "leading delays out of order at " << i;
    last_channel = ch;
    ++i;
  }
  int prev_lift = -1;
  while (i < s.size() && is_lift(s[i])) {
    int kind = static_cast<int>(s[i].index());
    if (kind == prev_lift) return ::testing::AssertionFailure() << "adjacent lifts of one kind at " << i;
    const Poly& f = kind == 0 ? std::get<UpperLift>(s[i]).filter : std::get<LowerLift>(s[i]).filter;
    if (f.is_zero()) return ::testing::AssertionFailure() << "zero lift at " << i;
    prev_lift = kind;
    ++i;
    if (i < s.size() && is_delay(s[i]) && i + 1 < s.size() && is_lift(s[i + 1])) {
      int want = kind == 0 ? 0 : 1;
      if (std::get<DelayDiag>(s[i]).channel != want)
        return ::testing::AssertionFailure() << "unmatched delay at " << i;
      ++i;
    }
  }
  if (i < s.size() && std::holds_alternative<Swap>(s[i])) ++i;
  last_channel = -1;
  while (i < s.size() && is_delay(s[i])) {
    int ch = std::get<DelayDiag>(s[i]).channel;
    if (ch <= last_channel) return ::testing::AssertionFailure() << "trailing delays out of order at " << i;
    last_channel = ch;
    ++i;
  }
  if (i != s.size()) return ::testing::AssertionFailure() << "unexpected step " << render(s[i]) << " at " << i;
  return ::testing::AssertionSuccess();
}

TEST(Steps, Matrices) {
  EXPECT_EQ(step_matrix(UpperLift{poly({1, 1})}), (PolyMatrix2{poly({1}), poly({1, 1}), Poly(), poly({1})}));
  EXPECT_EQ(step_matrix(LowerLift{poly({2})}), (PolyMatrix2{poly({1}), Poly(), poly({2}), poly({1})}));
  EXPECT_EQ(step_matrix(DelayDiag{2, 1}), diag(poly({1}), z(2)));
  EXPECT_EQ(step_matrix(DelayDiag{1, 0}), diag(z(1), poly({1})));
  EXPECT_EQ(step_matrix(GainDiag{Rational(1, 4), -4}), diag(Poly::constant(Rational(1, 4)), poly({-4})));
  EXPECT_EQ(step_matrix(Swap{}), kJ);
}

TEST(Steps, Determinants) {
  testing::Rng rng(41);
  for (int i = 0; i < kIterations; ++i) {
    LiftingStep s = random_step(rng);
    DetMonomial d = step_det(s);
    EXPECT_EQ(det(step_matrix(s)), Poly::monomial(d.gain, d.delay));
  }
}

TEST(Steps, AdjugateTimesStepIsDeterminant) {
  testing::Rng rng(42);
  for (int i = 0; i < kIterations; ++i) {
    LiftingStep s = random_step(rng);
    DetMonomial d = step_det(s);
    Poly m = Poly::monomial(d.gain, d.delay);
    EXPECT_EQ(product(adjugate_steps(s)) * step_matrix(s), diag(m, m)) << render(s);
  }
}

TEST(Steps, DoubleTranspose) {
  testing::Rng rng(43);
  for (int i = 0; i < kIterations; ++i) {
    LiftingStep s = random_step(rng);
    EXPECT_EQ(step_matrix(transpose_step(s)), kJ * step_matrix(s) * kJ);
    EXPECT_EQ(double_transpose(step_matrix(s)), kJ * step_matrix(s) * kJ);
  }
  EXPECT_EQ(transpose_step(UpperLift{poly({3})}), LiftingStep(LowerLift{poly({3})}));
  EXPECT_EQ(transpose_step(DelayDiag{2, 0}), LiftingStep(DelayDiag{2, 1}));
}

TEST(Steps, GainCommutation) {
  testing::Rng rng(44);
  for (int i = 0; i < kIterations; ++i) {
    LiftingStep s = random_step(rng);
    if (std::holds_alternative<Swap>(s)) continue;  // a swap exchanges the gains
    Rational k0 = rng.nonzero_rational(), k1 = rng.nonzero_rational();
    PolyMatrix2 d = step_matrix(GainDiag{k0, k1});
    EXPECT_EQ(step_matrix(s) * d, d * step_matrix(gamma_inverse_step(k0, k1, s))) << render(s);
  }
  // gamma scales the upper filter by k0/k1 and the lower by k1/k0.
  EXPECT_EQ(gamma(2, Rational(-1, 2), step_matrix(UpperLift{poly({1})})), step_matrix(UpperLift{poly({-4})}));
  EXPECT_EQ(gamma(2, Rational(-1, 2), step_matrix(LowerLift{poly({1})})), step_matrix(LowerLift{Poly::constant(Rational(-1, 4))}));
}

TEST(Steps, Kinds) {
  EXPECT_EQ(step_kind(UpperLift{}), "upper");
  EXPECT_EQ(step_kind(LowerLift{}), "lower");
  EXPECT_EQ(step_kind(DelayDiag{}), "delay");
  EXPECT_EQ(step_kind(GainDiag{}), "gain");
  EXPECT_EQ(step_kind(Swap{}), "swap");
}

TEST(Normalize, PreservesProduct) {
  testing::Rng rng(45);
  for (int i = 0; i < kIterations; ++i) {
    Factorization f;
    f.steps = random_steps(rng, static_cast<int>(rng.integer(0, 9)));
    Factorization n = normalize_standard(f);
    EXPECT_EQ(product(n.steps), product(f.steps)) << render(f.steps);
    EXPECT_TRUE(standard_shape(n.steps)) << render(f.steps) << " -> " << render(n.steps);
  }
}

TEST(Normalize, Idempotent) {
  testing::Rng rng(46);
  for (int i = 0; i < kIterations; ++i) {
    Factorization f;
    f.steps = random_steps(rng, static_cast<int>(rng.integer(0, 9)));
    Factorization once = normalize_standard(f);
    Factorization twice = normalize_standard(once);
    EXPECT_EQ(render(once.steps), render(twice.steps));
  }
}

TEST(Normalize, MergesAndDrops) {
  Factorization f;
  f.steps = {UpperLift{poly({1})}, UpperLift{poly({-1})}, DelayDiag{1, 0}, DelayDiag{2, 0}, GainDiag{1, 1}};
  Factorization n = normalize_standard(f);
  ASSERT_EQ(n.steps.size(), 1u);
  EXPECT_EQ(n.steps[0], LiftingStep(DelayDiag{3, 0}));
}

TEST(Normalize, SwapsMoveRight) {
  Factorization f;
  f.steps = {Swap{}, UpperLift{poly({1, 1})}};
  Factorization n = normalize_standard(f);
  ASSERT_EQ(n.steps.size(), 2u);
  EXPECT_EQ(n.steps[0], LiftingStep(LowerLift{poly({1, 1})}));
  EXPECT_EQ(n.steps[1], LiftingStep(Swap{}));
}

TEST(Render, Steps) {
  EXPECT_EQ(render(UpperLift{poly({-7, 1}, 4)}), "[1, (-7 + z^-1)/4; 0, 1]");
  EXPECT_EQ(render(DelayDiag{2, 1}), "[1, 0; 0, z^-2]");
  EXPECT_EQ(render(GainDiag{Rational(1, 4), -4}), "[1/4, 0; 0, -4]");
  EXPECT_EQ(render(Swap{}), "[0, 1; 1, 0]");
}

}  // namespace
}  // namespace liftfact
