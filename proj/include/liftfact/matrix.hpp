#pragma once

#include <array>
#include <ostream>

#include "liftfact/poly.hpp"

namespace liftfact {

// 2x2 matrix of causal polynomials, row-major.
class PolyMatrix2 {
 public:
  PolyMatrix2() = default;
  PolyMatrix2(Poly h00, Poly h01, Poly h10, Poly h11)
      : e_{std::move(h00), std::move(h01), std::move(h10), std::move(h11)} {}

  static PolyMatrix2 identity();

  const Poly& at(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }
  Poly& at(int row, int col) { return e_[static_cast<std::size_t>(2 * row + col)]; }

  friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b);
  friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;

  bool has_zero_entry() const;

 private:
  std::array<Poly, 4> e_;
};

// det H = gain * z^-delay.
struct DetMonomial {
  Rational gain;
  std::size_t delay = 0;

  friend bool operator==(const DetMonomial&, const DetMonomial&) = default;
};

Poly det(const PolyMatrix2& m);
// Throws kNotMonomialDeterminant unless det is a nonzero monomial.
DetMonomial pr_check(const PolyMatrix2& m);

// diag(k0,k1) A diag(k0,k1)^-1.
PolyMatrix2 gamma(const Rational& k0, const Rational& k1, const PolyMatrix2& a);
// J A J.
PolyMatrix2 double_transpose(const PolyMatrix2& a);

std::string render(const PolyMatrix2& m);
std::ostream& operator<<(std::ostream& os, const PolyMatrix2& m);

}  // namespace liftfact
