#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "liftfact/rational.hpp"

namespace liftfact {

// Polynomial degree; the zero polynomial has degree NEG_INF, which sorts
// below every natural and absorbs addition.
class Degree {
 public:
  constexpr Degree(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree neg_inf() { return Degree(kNegInf); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  long value() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;

  friend Degree operator+(Degree a, Degree b);
  friend Degree operator-(Degree a, Degree b);  // b must be finite

  std::string str() const;

 private:
  static constexpr long kNegInf = std::numeric_limits<long>::min();
  long value_;
};

inline constexpr Degree NEG_INF = Degree::neg_inf();

std::ostream& operator<<(std::ostream& os, Degree d);

// Causal polynomial in z^-1: coefficient i multiplies z^-i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monomial() const;

  // Coefficient of z^-i; zero past the end.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Rational& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

  // tau_k: multiply by z^-k.
  Poly shifted(std::size_t k) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly add(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const Rational& c);
Poly shift(const Poly& f, std::size_t k);

struct DivResult {
  Poly quotient;
  Poly remainder;
};

// Classical division: e = f*q + r, deg r < deg f.
DivResult divide(const Poly& e, const Poly& f);

// Slightly generalized division: e = f*q + r with z^-M | r and
// deg r < deg f + M.  Requires f(0) != 0 when M > 0.
DivResult sgda(const Poly& e, const Poly& f, std::size_t multiplicity);

Poly make_monic(const Poly& f);
Poly gcd(const Poly& f, const Poly& g);

// Largest k with z^-k dividing f.
std::size_t monomial_multiplicity(const Poly& f);

bool divides(const Poly& d, const Poly& p);
// p / d, throwing unless the division is exact.
Poly exact_quotient(const Poly& p, const Poly& d);

// Coefficients as "p/q" strings joined by commas; the inverse of parse_coefficients.
std::string coefficient_list(const Poly& f);
Poly parse_coefficients(std::string_view text);

// Display form, e.g. "(-7 + z^-1)/4" or "-(1 + z^-1)/2".
std::string render(const Poly& f);

std::ostream& operator<<(std::ostream& os, const Poly& f);

// Finite Laurent series: coefficient i multiplies z^-(offset + i).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::vector<Rational> coeffs, long offset);
  explicit LaurentPoly(const Poly& p) : LaurentPoly({p.coefficients().begin(), p.coefficients().end()}, 0) {}

  bool is_zero() const { return coeffs_.empty(); }
  long offset() const { return offset_; }
  long highest_exponent() const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coeff_at(long exponent) const;

  bool is_causal() const { return is_zero() || offset_ >= 0; }
  Poly to_poly() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  long offset_ = 0;
};

Degree laurent_order(const LaurentPoly& f);

}  // namespace liftfact
