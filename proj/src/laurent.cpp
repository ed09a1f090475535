#include "liftfact/error.hpp"
#include "liftfact/poly.hpp"

namespace liftfact {

LaurentPoly::LaurentPoly(std::vector<Rational> coeffs, long offset)
    : coeffs_(std::move(coeffs)), offset_(offset) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) offset_ = 0;
}

long LaurentPoly::highest_exponent() const {
  if (is_zero()) throw Error(ErrorCode::kPrecondition, "highest exponent of zero");
  return offset_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff_at(long exponent) const {
  long i = exponent - offset_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly LaurentPoly::to_poly() const {
  if (!is_causal()) throw Error(ErrorCode::kPrecondition, "noncausal Laurent polynomial");
  if (is_zero()) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(offset_));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.offset_, b.offset_);
  long hi = std::max(a.highest_exponent(), b.highest_exponent());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
  for (long e = lo; e <= hi; ++e) v[static_cast<std::size_t>(e - lo)] = a.coeff_at(e) + b.coeff_at(e);
  return LaurentPoly(std::move(v), lo);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(std::move(v), a.offset_ + b.offset_);
}

Degree laurent_order(const LaurentPoly& f) {
  if (f.is_zero()) return NEG_INF;
  return Degree(f.highest_exponent() - f.offset());
}

}  // namespace liftfact
