#include "liftfact/matrix.hpp"

#include "liftfact/error.hpp"

namespace liftfact {

PolyMatrix2 PolyMatrix2::identity() {
  return PolyMatrix2(Poly::constant(1), Poly(), Poly(), Poly::constant(1));
}

PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
  PolyMatrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return out;
}

bool PolyMatrix2::has_zero_entry() const {
  for (const auto& e : e_)
    if (e.is_zero()) return true;
  return false;
}

Poly det(const PolyMatrix2& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

DetMonomial pr_check(const PolyMatrix2& m) {
  Poly d = det(m);
  if (!d.is_monomial()) {
    throw Error(ErrorCode::kNotMonomialDeterminant, "determinant " + render(d) + " is not a nonzero monomial");
  }
  std::size_t k = monomial_multiplicity(d);
  return {d.coeff(k), k};
}

PolyMatrix2 gamma(const Rational& k0, const Rational& k1, const PolyMatrix2& a) {
  if (k0.is_zero() || k1.is_zero()) throw Error(ErrorCode::kPrecondition, "gamma with a zero gain");
  return PolyMatrix2(a.at(0, 0), a.at(0, 1) * (k0 / k1), a.at(1, 0) * (k1 / k0), a.at(1, 1));
}

PolyMatrix2 double_transpose(const PolyMatrix2& a) {
  return PolyMatrix2(a.at(1, 1), a.at(1, 0), a.at(0, 1), a.at(0, 0));
}

std::string render(const PolyMatrix2& m) {
  return "[" + render(m.at(0, 0)) + ", " + render(m.at(0, 1)) + "; " + render(m.at(1, 0)) + ", " +
         render(m.at(1, 1)) + "]";
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix2& m) { return os << render(m); }

}  // namespace liftfact
