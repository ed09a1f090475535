#include "liftfact/lde.hpp"

#include "liftfact/error.hpp"

namespace liftfact {

std::string_view reduced_in_name(ReducedIn r) {
  switch (r) {
    case ReducedIn::kA: return "A";
    case ReducedIn::kB: return "B";
    case ReducedIn::kBoth: return "BOTH";
    case ReducedIn::kNone: return "NONE";
  }
  return "NONE";
}

HomogeneousBasis homogeneous_basis(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kPrecondition, "LDE with a = b = 0");
  Poly h = gcd(a, b);
  return {exact_quotient(b, h), exact_quotient(a, h), h};
}

LdeSolution lift_update(const LdeSolution& sol, const Poly& s, const Poly& a, const Poly& b) {
  auto basis = homogeneous_basis(a, b);
  LdeSolution out{sol.x + s * basis.b_tilde, sol.y - s * basis.a_tilde, ReducedIn::kNone};
  out.reduced_in = classify(a, b, out);
  return out;
}

bool solvable(const Poly& a, const Poly& b, const Poly& c) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kPrecondition, "LDE with a = b = 0");
  return divides(gcd(a, b), c);
}

namespace {

// u a + v b = gcd(a, b), monic.
struct Bezout {
  Poly u;
  Poly v;
  Poly g;
};

Bezout extended_euclid(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(1), u1;
  Poly v0, v1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divide(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  Rational k = r0.leading().inverse();
  return {u0 * k, v0 * k, r0 * k};
}

}  // namespace

LdeSolution particular_solution(const Poly& a, const Poly& b, const Poly& c) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kPrecondition, "LDE with a = b = 0");
  auto bz = extended_euclid(a, b);
  auto [ct, rem] = divide(c, bz.g);
  if (!rem.is_zero()) {
    throw Error(ErrorCode::kUnsolvable, "gcd(a, b) = " + render(bz.g) + " does not divide c = " + render(c));
  }
  LdeSolution sol{bz.u * ct, bz.v * ct, ReducedIn::kNone};
  sol.reduced_in = classify(a, b, sol);
  return sol;
}

LdeSolution degree_reducing(const Poly& a, const Poly& b, const Poly& c, LdeTarget target) {
  const Poly& param = target == LdeTarget::kA ? a : b;
  if (param.is_zero()) throw Error(ErrorCode::kPrecondition, "degree-reducing target parameter is zero");
  LdeSolution p = particular_solution(a, b, c);
  auto basis = homogeneous_basis(a, b);
  LdeSolution out;
  if (target == LdeTarget::kA) {
    auto [q, y] = divide(p.y, basis.a_tilde);
    out.x = p.x + q * basis.b_tilde;
    out.y = std::move(y);
  } else {
    auto [q, x] = divide(p.x, basis.b_tilde);
    out.x = std::move(x);
    out.y = p.y + q * basis.a_tilde;
  }
  out.reduced_in = classify(a, b, out);
  return out;
}

ReducedIn classify(const Poly& a, const Poly& b, const LdeSolution& sol) {
  Poly h = gcd(a, b);
  bool in_a = !a.is_zero() && sol.y.degree() < a.degree() - h.degree();
  bool in_b = !b.is_zero() && sol.x.degree() < b.degree() - h.degree();
  if (in_a && in_b) return ReducedIn::kBoth;
  if (in_a) return ReducedIn::kA;
  if (in_b) return ReducedIn::kB;
  return ReducedIn::kNone;
}

bool solutions_coincide(const Poly& a, const Poly& b, const Poly& c) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::kPrecondition, "solutions_coincide needs a, b != 0");
  if (!solvable(a, b, c)) throw Error(ErrorCode::kUnsolvable, "LDE has no solution");
  Poly h = gcd(a, b);
  return c.degree() < a.degree() + b.degree() - h.degree();
}

DivResult gda(const Poly& e, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kZeroDivisor, "gda needs f, g != 0");
  if (!solvable(f, g, e)) {
    throw Error(ErrorCode::kPrecondition, "gcd(f, g) does not divide e");
  }
  LdeSolution s = degree_reducing(f, g, e, LdeTarget::kA);
  return {s.x, g * s.y};
}

}  // namespace liftfact
