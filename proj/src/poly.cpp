#include "liftfact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "liftfact/error.hpp"

namespace liftfact {

long Degree::value() const {
  if (is_neg_inf()) throw Error(ErrorCode::kPrecondition, "degree of the zero polynomial is NEG_INF");
  return value_;
}

Degree operator+(Degree a, Degree b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return NEG_INF;
  return Degree(a.value_ + b.value_);
}

Degree operator-(Degree a, Degree b) {
  if (b.is_neg_inf()) throw Error(ErrorCode::kPrecondition, "subtracting NEG_INF from a degree");
  if (a.is_neg_inf()) return NEG_INF;
  return Degree(a.value_ - b.value_);
}

std::string Degree::str() const { return is_neg_inf() ? "NEG_INF" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.str(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return NEG_INF;
  return Degree(static_cast<long>(coeffs_.size()) - 1);
}

bool Poly::is_monomial() const {
  if (coeffs_.empty()) return false;
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }) == 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kPrecondition, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return Poly();
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

Poly add(const Poly& f, const Poly& g) { return f + g; }
Poly mul(const Poly& f, const Poly& g) { return f * g; }
Poly scale(const Poly& f, const Rational& c) { return f * c; }
Poly shift(const Poly& f, std::size_t k) { return f.shifted(k); }

DivResult divide(const Poly& e, const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroDivisor, "division by the zero polynomial");
  std::vector<Rational> r(e.coefficients().begin(), e.coefficients().end());
  const std::size_t m = f.size() - 1;
  const Rational lead_inv = f.leading().inverse();
  if (r.size() <= m) return {Poly(), e};
  std::vector<Rational> q(r.size() - m);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = r[m + k] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= m; ++i) r[k + i] -= c * f.coeff(i);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

DivResult sgda(const Poly& e, const Poly& f, std::size_t multiplicity) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroDivisor, "sgda by the zero polynomial");
  const std::size_t M = multiplicity;
  if (M > 0 && f.coeff(0).is_zero()) {
    throw Error(ErrorCode::kPrecondition, "sgda with M > 0 needs a divisor with nonzero constant term");
  }
  const long n = static_cast<long>(e.degree().is_neg_inf() ? -1 : e.degree().value());
  const long m = f.degree().value();
  std::vector<Rational> q(std::max<long>(n - m + 1, static_cast<long>(M)));
  Poly r = e;
  auto eliminate = [&](long k, const Rational& c) {
    q[k] = c;
    r -= (f * c).shifted(static_cast<std::size_t>(k));
  };
  // Top-down pass clears coefficients above deg f + M - 1.
  for (long k = n - m; k >= static_cast<long>(M); --k) {
    const Rational top = r.coeff(static_cast<std::size_t>(m + k));
    if (!top.is_zero()) eliminate(k, top / f.leading());
  }
  // Bottom-up pass clears the low M coefficients.
  for (long k = 0; k < static_cast<long>(M); ++k) {
    const Rational low = r.coeff(static_cast<std::size_t>(k));
    if (!low.is_zero()) eliminate(k, low / f.coeff(0));
  }
  return {Poly(std::move(q)), r};
}

Poly make_monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f * f.leading().inverse();
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::kPrecondition, "gcd(0, 0) is undefined");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::size_t monomial_multiplicity(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kPrecondition, "monomial multiplicity of zero");
  auto c = f.coefficients();
  std::size_t i = 0;
  while (c[i].is_zero()) ++i;
  return i;
}

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return divide(p, d).remainder.is_zero();
}

Poly exact_quotient(const Poly& p, const Poly& d) {
  auto [q, r] = divide(p, d);
  if (!r.is_zero()) throw Error(ErrorCode::kPrecondition, "inexact polynomial division: " + render(p) + " by " + render(d));
  return q;
}

std::string coefficient_list(const Poly& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += f.coeff(i).str();
  }
  return out;
}

Poly parse_coefficients(std::string_view text) {
  std::vector<Rational> c;
  std::string_view s = text;
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  if (s.find_first_not_of(" \t") == std::string_view::npos) return Poly();
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    c.push_back(Rational::parse(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(c));
}

namespace {

std::string power_text(std::size_t k) { return k == 0 ? "" : (k == 1 ? "z^-1" : "z^-" + std::to_string(k)); }

// Integer coefficient times z^-k, without sign.
std::string term_text(const mpz_class& magnitude, std::size_t k) {
  if (k == 0) return magnitude.get_str();
  if (magnitude == 1) return power_text(k);
  return magnitude.get_str() + power_text(k);
}

}  // namespace

std::string render(const Poly& f) {
  if (f.is_zero()) return "0";
  auto c = f.coefficients();
  if (f.is_monomial()) {
    std::size_t k = monomial_multiplicity(f);
    const Rational& a = c[k];
    if (k == 0) return a.str();
    std::string s = a.sign() < 0 ? "-" : "";
    s += term_text(abs(a.num()), k);
    if (a.den() != 1) s += "/" + a.den().get_str();
    return s;
  }
  mpz_class den = 1;
  for (const auto& x : c) {
    if (!x.is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  bool all_negative = true;
  for (const auto& x : c) {
    mpz_class v = x.num() * (den / x.den());
    ints.push_back(v);
    if (v != 0) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      if (v > 0) all_negative = false;
    }
  }
  std::string inner;
  for (std::size_t k = 0; k < ints.size(); ++k) {
    if (ints[k] == 0) continue;
    mpz_class v = ints[k] / content;
    if (all_negative) v = -v;
    if (inner.empty()) {
      inner = (v < 0 ? "-" : "") + term_text(abs(v), k);
    } else {
      inner += (v < 0 ? " - " : " + ") + term_text(abs(v), k);
    }
  }
  std::string out = all_negative ? "-" : "";
  bool wrap = all_negative || content != 1 || den != 1;
  if (content != 1) out += content.get_str();
  out += wrap ? "(" + inner + ")" : inner;
  if (den != 1) out += "/" + den.get_str();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << render(f); }

}  // namespace liftfact
