#include <gtest/gtest.h>

#include "liftfact/error.hpp"
#include "liftfact/lde.hpp"
#include "test_support.hpp"

namespace liftfact {
namespace {

using testing::poly;
using testing::z;

constexpr int kIterations = 500;

TEST(Lde, TwoDifferentDegreeReducingSolutions) {
  Poly a = poly({1, 1}), b = poly({1}), c = z(1);
  LdeSolution in_a = degree_reducing(a, b, c, LdeTarget::kA);
  EXPECT_EQ(in_a.x, poly({1}));
  EXPECT_EQ(in_a.y, poly({-1}));
  LdeSolution in_b = degree_reducing(a, b, c, LdeTarget::kB);
  EXPECT_TRUE(in_b.x.is_zero());
  EXPECT_EQ(in_b.y, z(1));
  EXPECT_FALSE(solutions_coincide(a, b, c));
  EXPECT_EQ(in_a.reduced_in, ReducedIn::kA);
  EXPECT_EQ(in_b.reduced_in, ReducedIn::kB);
}

TEST(Lde, OneCommonSolution) {
  Poly a = poly({1, 0, 1}), b = poly({1}), c = z(1);
  LdeSolution in_a = degree_reducing(a, b, c, LdeTarget::kA);
  LdeSolution in_b = degree_reducing(a, b, c, LdeTarget::kB);
  EXPECT_TRUE(in_a.x.is_zero());
  EXPECT_EQ(in_a.y, z(1));
  EXPECT_EQ(in_a, in_b);
  EXPECT_TRUE(solutions_coincide(a, b, c));
  EXPECT_EQ(in_a.reduced_in, ReducedIn::kBoth);
}

TEST(Lde, HomogeneousBasis) {
  auto basis = homogeneous_basis(poly({6}), poly({4}));
  EXPECT_EQ(basis.h, poly({1}));
  // Any associate pair works; check the defining relation and coprimality.
  EXPECT_EQ(poly({6}) * basis.b_tilde - poly({4}) * basis.a_tilde, Poly());
  auto basis2 = homogeneous_basis(poly({1, 1}) * poly({2, 1}), poly({1, 1}) * poly({3}));
  EXPECT_EQ(basis2.h, poly({1, 1}));
  EXPECT_EQ(basis2.a_tilde * basis2.h, poly({1, 1}) * poly({2, 1}));
  EXPECT_EQ(basis2.b_tilde * basis2.h, poly({3, 3}));
}

TEST(Lde, HomogeneousSolutionsAreMultiplesOfBasis) {
  testing::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Poly a = rng.int_poly(rng.integer(0, 3)), b = rng.int_poly(rng.integer(0, 3));
    auto basis = homogeneous_basis(a, b);
    Poly s = rng.int_poly(rng.integer(0, 2));
    EXPECT_EQ(a * (s * basis.b_tilde) + b * (-(s * basis.a_tilde)), Poly());
    EXPECT_EQ(gcd(basis.a_tilde, basis.b_tilde), poly({1}));
  }
}

TEST(Lde, Solvability) {
  EXPECT_FALSE(solvable(z(2), Poly::monomial(1, 3), poly({1})));
  EXPECT_TRUE(solvable(z(2), Poly::monomial(1, 3), z(2)));
  EXPECT_THROW(particular_solution(z(2), Poly::monomial(1, 3), poly({1})), Error);
  try {
    degree_reducing(z(2), Poly::monomial(1, 3), poly({1}), LdeTarget::kA);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsolvable);
  }
}

TEST(Lde, BothZeroIsAPreconditionError) {
  EXPECT_THROW(degree_reducing(Poly(), Poly(), poly({1}), LdeTarget::kA), Error);
}

TEST(Lde, LiftUpdatePreservesSolutions) {
  testing::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    Poly a = rng.int_poly(rng.integer(0, 3)), b = rng.int_poly(rng.integer(0, 3));
    Poly c = a * rng.int_poly(rng.integer(0, 2)) + b * rng.int_poly(rng.integer(0, 2));
    LdeSolution sol = particular_solution(a, b, c);
    EXPECT_EQ(a * sol.x + b * sol.y, c);
    LdeSolution moved = lift_update(sol, rng.int_poly(rng.integer(0, 2)), a, b);
    EXPECT_EQ(a * moved.x + b * moved.y, c);
  }
}

// Degree-reducing solutions against an independent linear-system oracle.
TEST(Lde, DegreeReducingMatchesLinearSystemOracle) {
  testing::Rng rng(33);
  for (int i = 0; i < kIterations; ++i) {
    Poly a = rng.int_poly(rng.integer(-1, 4)), b = rng.int_poly(rng.integer(0, 4));
    if (rng.integer(0, 3) == 0) {
      Poly common = rng.int_poly(1);
      a = a * common;
      b = b * common;
    }
    Poly c = a * rng.int_poly(rng.integer(-1, 3)) + b * rng.int_poly(rng.integer(-1, 3));
    long dh = gcd(a.is_zero() ? b : a, b).degree().value();
    for (LdeTarget t : {LdeTarget::kA, LdeTarget::kB}) {
      const Poly& reduced = t == LdeTarget::kA ? a : b;
      if (reduced.is_zero()) continue;
      LdeSolution s = degree_reducing(a, b, c, t);
      EXPECT_EQ(a * s.x + b * s.y, c);
      long bound = reduced.degree().value() - dh - 1;
      long cdeg = c.is_zero() ? 0 : c.degree().value();
      testing::PairSolve oracle;
      if (t == LdeTarget::kA) {
        long dx = std::max(cdeg, b.degree().value() + bound) - a.degree().value();
        oracle = testing::solve_pair(a, b, c, dx, bound);
      } else {
        long dy = std::max(cdeg, a.is_zero() ? 0 : a.degree().value() + bound) - b.degree().value();
        oracle = testing::solve_pair(a, b, c, bound, dy);
      }
      ASSERT_TRUE(oracle.consistent);
      EXPECT_EQ(oracle.nullity, 0u);
      EXPECT_EQ(s.x, oracle.x);
      EXPECT_EQ(s.y, oracle.y);
    }
  }
}

TEST(Lde, CoincidenceAgreesWithDirectComparison) {
  testing::Rng rng(34);
  int same = 0, differ = 0;
  for (int i = 0; i < kIterations; ++i) {
    Poly a = rng.int_poly(rng.integer(0, 4)), b = rng.int_poly(rng.integer(0, 4));
    Poly c = rng.integer(0, 1) ? rng.int_poly(rng.integer(-1, 4)) * gcd(a, b)
                               : a * rng.int_poly(rng.integer(-1, 2)) + b * rng.int_poly(rng.integer(-1, 2));
    LdeSolution sa = degree_reducing(a, b, c, LdeTarget::kA);
    LdeSolution sb = degree_reducing(a, b, c, LdeTarget::kB);
    bool eq = sa.x == sb.x && sa.y == sb.y;
    EXPECT_EQ(solutions_coincide(a, b, c), eq);
    (eq ? same : differ)++;
  }
  EXPECT_GT(same, 0);
  EXPECT_GT(differ, 0);
}

TEST(Lde, ClassifyTagsBounds) {
  Poly a = poly({1, 1}), b = poly({1});
  EXPECT_EQ(classify(a, b, {poly({1}), poly({-1}), ReducedIn::kNone}), ReducedIn::kA);
  EXPECT_EQ(classify(a, b, {Poly(), z(1), ReducedIn::kNone}), ReducedIn::kB);
  EXPECT_EQ(classify(a, b, {z(1), poly({0, 0, -1}), ReducedIn::kNone}), ReducedIn::kNone);
}

TEST(Gda, ReducesToSgdaForMonomialModulus) {
  testing::Rng rng(35);
  for (int i = 0; i < kIterations; ++i) {
    Poly f = rng.int_poly(rng.integer(0, 3));
    if (f.coeff(0).is_zero()) f += poly({1});
    Poly e = rng.int_poly(rng.integer(-1, 6));
    std::size_t m = static_cast<std::size_t>(rng.integer(0, 4));
    auto g = gda(e, f, z(m));
    auto s = sgda(e, f, m);
    EXPECT_EQ(g.quotient, s.quotient);
    EXPECT_EQ(g.remainder, s.remainder);
  }
}

TEST(Gda, GeneralModulus) {
  testing::Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    Poly f = rng.int_poly(rng.integer(0, 3));
    Poly g = rng.int_poly(rng.integer(0, 2));
    Poly e = rng.int_poly(rng.integer(-1, 6));
    if (!solvable(f, g, e)) continue;
    auto [q, r] = gda(e, f, g);
    EXPECT_EQ(f * q + r, e);
    EXPECT_TRUE(divides(g, r) || r.is_zero());
    EXPECT_LT(r.degree(), f.degree() - gcd(f, g).degree() + g.degree());
  }
}

}  // namespace
}  // namespace liftfact
