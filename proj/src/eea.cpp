#include "liftfact/error.hpp"
#include "liftfact/factor.hpp"

namespace liftfact {

namespace {

std::vector<LiftingStep> monomial_diag(const Poly& u, const Poly& v) {
  std::size_t pu = monomial_multiplicity(u);
  std::size_t pv = monomial_multiplicity(v);
  std::vector<LiftingStep> out;
  Rational ku = u.coeff(pu), kv = v.coeff(pv);
  if (!(ku == Rational(1) && kv == Rational(1))) out.push_back(GainDiag{ku, kv});
  if (pu) out.push_back(DelayDiag{pu, 0});
  if (pv) out.push_back(DelayDiag{pv, 1});
  return out;
}

}  // namespace

Factorization factor_eea(const PolyMatrix2& h, Site site) {
  const DetMonomial dm = pr_check(h);
  const Poly det_h = Poly::monomial(dm.gain, dm.delay);
  const bool col_site = site == Site::kCol0 || site == Site::kCol1;
  const int pos = (site == Site::kRow0 || site == Site::kCol0) ? 0 : 1;

  CcaStep root = strip_content(h);
  const PolyMatrix2& g0 = root.next;
  const Poly det_g = det(g0);

  Poly r0 = col_site ? g0.at(0, pos) : g0.at(pos, 0);
  Poly r1 = col_site ? g0.at(1, pos) : g0.at(pos, 1);
  if (r0.is_zero() || r1.is_zero()) {
    throw Error(ErrorCode::kZeroPivot, std::string(site_name(site)) + ": the site holds a zero entry");
  }

  Factorization fact;
  fact.source = h;
  std::vector<Poly> rs{r0, r1};
  std::vector<Poly> qs;
  while (!rs.back().is_zero()) {
    auto [q, r] = divide(rs[rs.size() - 2], rs.back());
    fact.trace.push_back("r" + std::to_string(rs.size() - 2) + " = (" + render(rs.back()) + ")(" + render(q) +
                         ") + " + render(r));
    qs.push_back(q);
    rs.push_back(r);
  }
  const std::size_t n = qs.size();
  const Poly g = rs[n];
  const bool odd = n % 2 == 1;

  // Pairs of M-matrices become lifts once swaps are inserted between them.
  std::vector<LiftingStep> p_steps;
  if (col_site) {
    for (std::size_t k = 0; k < n; ++k)
      p_steps.push_back(k % 2 == 0 ? LiftingStep(UpperLift{qs[k]}) : LiftingStep(LowerLift{qs[k]}));
    if (odd) p_steps.push_back(Swap{});
  } else {
    if (odd) p_steps.push_back(Swap{});
    for (std::size_t k = n; k-- > 0;)
      p_steps.push_back(k % 2 == 0 ? LiftingStep(LowerLift{qs[k]}) : LiftingStep(UpperLift{qs[k]}));
  }
  const Poly det_p = Poly::constant(odd ? -1 : 1);

  // Augment the gcd with the rest of the determinant.
  std::vector<LiftingStep> x_steps;
  Poly other = exact_quotient(det_g * det_p, g);
  if (pos == 0) {
    x_steps = monomial_diag(g, other);
  } else {
    other = -other;
    x_steps = col_site ? monomial_diag(g, other) : monomial_diag(other, g);
    x_steps.push_back(Swap{});
  }
  fact.trace.push_back("gcd " + render(g) + " augmented with " + render(other));

  std::vector<LiftingStep> augmented;
  if (col_site) {
    augmented = p_steps;
    augmented.insert(augmented.end(), x_steps.begin(), x_steps.end());
  } else {
    augmented = x_steps;
    augmented.insert(augmented.end(), p_steps.begin(), p_steps.end());
  }
  const PolyMatrix2 hp = product(augmented);

  // g0 and hp share the site line and the determinant; one lift closes the gap.
  const int other_line = 1 - pos;
  Poly diff0 = col_site ? g0.at(0, other_line) - hp.at(0, other_line) : g0.at(other_line, 0) - hp.at(other_line, 0);
  Poly diff1 = col_site ? g0.at(1, other_line) - hp.at(1, other_line) : g0.at(other_line, 1) - hp.at(other_line, 1);
  const Poly& base0 = col_site ? hp.at(0, pos) : hp.at(pos, 0);
  const Poly& base1 = col_site ? hp.at(1, pos) : hp.at(pos, 1);
  Poly s = !base0.is_zero() ? exact_quotient(diff0, base0) : exact_quotient(diff1, base1);
  LiftingStep closing;
  if (col_site) {
    closing = pos == 0 ? LiftingStep(UpperLift{s}) : LiftingStep(LowerLift{s});
  } else {
    closing = pos == 0 ? LiftingStep(LowerLift{s}) : LiftingStep(UpperLift{s});
  }
  fact.trace.push_back("closing lifting update S = " + render(s));

  fact.steps = root.left;
  if (col_site) {
    fact.steps.insert(fact.steps.end(), augmented.begin(), augmented.end());
    fact.steps.push_back(closing);
  } else {
    fact.steps.push_back(closing);
    fact.steps.insert(fact.steps.end(), augmented.begin(), augmented.end());
  }
  fact.steps.insert(fact.steps.end(), root.right.begin(), root.right.end());
  if (product(fact.steps) != h) {
    throw Error(ErrorCode::kVerificationFailed, "EEA factorization does not multiply back to the input");
  }
  (void)det_h;
  return fact;
}

}  // namespace liftfact
