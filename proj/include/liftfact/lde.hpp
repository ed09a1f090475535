#pragma once

#include <string_view>

#include "liftfact/poly.hpp"

namespace liftfact {

// a x + b y = c over Q[z^-1].
struct LdeProblem {
  Poly a;
  Poly b;
  Poly c;
};

enum class ReducedIn { kA, kB, kBoth, kNone };
enum class LdeTarget { kA, kB };

std::string_view reduced_in_name(ReducedIn r);

struct LdeSolution {
  Poly x;
  Poly y;
  ReducedIn reduced_in = ReducedIn::kNone;

  friend bool operator==(const LdeSolution&, const LdeSolution&) = default;
};

struct HomogeneousBasis {
  Poly b_tilde;
  Poly a_tilde;
  Poly h;  // monic gcd(a, b)
};

// Solutions of a x + b y = 0 are exactly (s b~, -s a~).
HomogeneousBasis homogeneous_basis(const Poly& a, const Poly& b);

LdeSolution lift_update(const LdeSolution& sol, const Poly& s, const Poly& a, const Poly& b);

bool solvable(const Poly& a, const Poly& b, const Poly& c);

// Any solution, from the extended Euclidean algorithm.
LdeSolution particular_solution(const Poly& a, const Poly& b, const Poly& c);

// The unique solution with deg y < deg a - deg h (target A) or
// deg x < deg b - deg h (target B).
LdeSolution degree_reducing(const Poly& a, const Poly& b, const Poly& c, LdeTarget target);

// Whether the two degree-reducing solutions are the same pair.
bool solutions_coincide(const Poly& a, const Poly& b, const Poly& c);

// Tags sol with the degree bounds it meets.
ReducedIn classify(const Poly& a, const Poly& b, const LdeSolution& sol);

// e = f q + r with g | r and deg r < deg f - deg gcd(f, g) + deg g.
DivResult gda(const Poly& e, const Poly& f, const Poly& g);

}  // namespace liftfact
