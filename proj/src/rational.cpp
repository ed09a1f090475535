#include "liftfact/rational.hpp"

#include <cctype>

#include "liftfact/error.hpp"

namespace liftfact {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kZeroDivisor: return "zero_divisor";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kNotMonomialDeterminant: return "not_monomial_determinant";
    case ErrorCode::kZeroPivot: return "zero_pivot";
    case ErrorCode::kInvalidDirective: return "invalid_directive";
    case ErrorCode::kNotTerminal: return "not_terminal";
    case ErrorCode::kStrategyExhausted: return "strategy_exhausted";
    case ErrorCode::kUnsolvable: return "unsolvable";
    case ErrorCode::kReconstructionMismatch: return "reconstruction_mismatch";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kVerificationFailed: return "verification_failed";
  }
  return "unknown";
}

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(ErrorCode::kParse, "malformed rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator: '" + std::string(text) + "'");
  return from_integers(zn, zd);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  mpq_class q = 1 / value_;
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liftfact
