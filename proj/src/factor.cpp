#include "liftfact/factor.hpp"

#include <algorithm>
#include <charconv>

#include "liftfact/error.hpp"

namespace liftfact {

std::string_view site_name(Site s) {
  switch (s) {
    case Site::kRow0: return "R0";
    case Site::kRow1: return "R1";
    case Site::kCol0: return "C0";
    case Site::kCol1: return "C1";
  }
  return "?";
}

Site parse_site(std::string_view text) {
  if (text == "R0") return Site::kRow0;
  if (text == "R1") return Site::kRow1;
  if (text == "C0") return Site::kCol0;
  if (text == "C1") return Site::kCol1;
  throw Error(ErrorCode::kParse, "unknown division site '" + std::string(text) + "' (expected R0, R1, C0 or C1)");
}

Strategy parse_strategy(std::string_view text) {
  Strategy out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw Error(ErrorCode::kParse, "empty directive in strategy '" + std::string(text) + "'");
    StepDirective d;
    auto at = tok.find('@');
    d.site = parse_site(tok.substr(0, at));
    if (at != std::string_view::npos) {
      std::string_view m = tok.substr(at + 1);
      if (m.substr(0, 2) != "M=") throw Error(ErrorCode::kParse, "expected '@M=<n>' in '" + std::string(tok) + "'");
      m.remove_prefix(2);
      auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(), d.multiplicity);
      if (ec != std::errc() || ptr != m.data() + m.size() || m.empty()) {
        throw Error(ErrorCode::kParse, "bad multiplicity in '" + std::string(tok) + "'");
      }
    }
    out.directives.push_back(d);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render(const StepDirective& d) {
  std::string s(site_name(d.site));
  if (d.multiplicity) s += "@M=" + std::to_string(d.multiplicity);
  return s;
}

std::string render(const Strategy& s) {
  std::string out;
  for (const auto& d : s.directives) {
    if (!out.empty()) out += ",";
    out += render(d);
  }
  return out;
}

namespace {

bool is_column_site(Site s) { return s == Site::kCol0 || s == Site::kCol1; }
int site_index(Site s) { return (s == Site::kRow0 || s == Site::kCol0) ? 0 : 1; }

// Entry k of line `line`: a row when rows is true, else a column.
Poly& line_entry(PolyMatrix2& q, bool rows, int line, int k) { return rows ? q.at(line, k) : q.at(k, line); }
const Poly& line_entry(const PolyMatrix2& q, bool rows, int line, int k) {
  return rows ? q.at(line, k) : q.at(k, line);
}

std::size_t line_content(const PolyMatrix2& q, bool rows, int line) {
  std::size_t g = SIZE_MAX;
  for (int k = 0; k < 2; ++k) {
    const Poly& e = line_entry(q, rows, line, k);
    if (!e.is_zero()) g = std::min(g, monomial_multiplicity(e));
  }
  return g == SIZE_MAX ? 0 : g;
}

void divide_line(PolyMatrix2& q, bool rows, int line, std::size_t g) {
  for (int k = 0; k < 2; ++k) {
    Poly& e = line_entry(q, rows, line, k);
    if (!e.is_zero()) {
      auto c = e.coefficients();
      e = Poly(std::vector<Rational>(c.begin() + static_cast<long>(g), c.end()));
    }
  }
}

// Gain, then delays, for diag(u, v) with monomial entries.
std::vector<LiftingStep> monomial_diag_steps(const Poly& u, const Poly& v) {
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

CcaStep strip_content(const PolyMatrix2& q) {
  CcaStep out;
  out.next = q;
  for (int i = 0; i < 2; ++i) {
    if (std::size_t g = line_content(out.next, true, i)) {
      divide_line(out.next, true, i, g);
      out.left.push_back(DelayDiag{g, i});
    }
  }
  for (int j = 0; j < 2; ++j) {
    if (std::size_t g = line_content(out.next, false, j)) {
      divide_line(out.next, false, j, g);
      out.right.push_back(DelayDiag{g, j});
    }
  }
  return out;
}

long reduction_measure(const PolyMatrix2& q) { return reduction_measure(q, pr_check(q).delay); }

long reduction_measure(const PolyMatrix2& q, std::size_t residual_delay) {
  long total = static_cast<long>(residual_delay);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!q.at(i, j).is_zero()) total += q.at(i, j).degree().value() + 1;
  return total;
}

CcaStep cca_step(const PolyMatrix2& q, const StepDirective& d, const CcaOptions& opts) {
  const DetMonomial dm = opts.det ? *opts.det : pr_check(q);
  if (d.multiplicity > dm.delay) {
    throw Error(ErrorCode::kInvalidDirective, render(d) + ": multiplicity exceeds the residual delay " +
                                                  std::to_string(dm.delay));
  }
  // A column site divides within a column and so rewrites a row.
  const bool col_site = is_column_site(d.site);
  const bool rows = col_site;  // orientation of the rewritten lines
  const int pos = site_index(d.site);
  const Poly& a = line_entry(q, rows, 0, pos);
  const Poly& b = line_entry(q, rows, 1, pos);
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorCode::kZeroPivot, render(d) + ": the site holds a zero entry");
  }
  int dividend;
  if (a.degree() != b.degree()) {
    dividend = a.degree() > b.degree() ? 0 : 1;
  } else {
    dividend = pos;  // the complementary index holds the pivot
  }
  const int pivot = 1 - dividend;
  const Poly& e = dividend == 0 ? a : b;
  const Poly& f = dividend == 0 ? b : a;
  if (d.multiplicity > 0 && f.coeff(0).is_zero()) {
    throw Error(ErrorCode::kPrecondition, render(d) + ": SGDA pivot " + render(f) + " has no constant term");
  }
  DivResult dr = d.multiplicity == 0 ? divide(e, f) : sgda(e, f, d.multiplicity);
  const Poly& s = dr.quotient;

  if (opts.verify) {
    Poly h = gcd(line_entry(q, rows, pivot, 0), line_entry(q, rows, pivot, 1));
    Degree bound = f.degree() - h.degree() + Degree(static_cast<long>(d.multiplicity));
    if (!(dr.remainder.degree() < bound)) {
      throw Error(ErrorCode::kVerificationFailed, render(d) + ": remainder " + render(dr.remainder) +
                                                      " is not degree-reducing (bound " + bound.str() + ")");
    }
  }

  CcaStep out;
  out.next = q;
  for (int k = 0; k < 2; ++k) {
    line_entry(out.next, rows, dividend, k) -= s * line_entry(q, rows, pivot, k);
  }
  std::vector<LiftingStep> lift;
  if (!s.is_zero()) {
    // Row ops: row0 -= S row1 is upsilon(S) on the left.  Column ops:
    // col0 -= S col1 is lambda(S) on the right.
    bool upper = col_site ? dividend == 0 : dividend == 1;
    lift.push_back(upper ? LiftingStep(UpperLift{s}) : LiftingStep(LowerLift{s}));
  }
  std::size_t g = line_content(out.next, rows, dividend);
  if (opts.verify && g < d.multiplicity) {
    throw Error(ErrorCode::kVerificationFailed,
                render(d) + ": remainder line is not divisible by z^-" + std::to_string(d.multiplicity));
  }
  std::vector<LiftingStep> delay;
  if (g) {
    divide_line(out.next, rows, dividend, g);
    delay.push_back(DelayDiag{g, dividend});
  }
  if (lift.empty() && delay.empty()) {
    throw Error(ErrorCode::kInvalidDirective, render(d) + ": division makes no progress");
  }
  if (col_site) {
    out.left = lift;
    out.left.insert(out.left.end(), delay.begin(), delay.end());
  } else {
    out.right = delay;
    out.right.insert(out.right.end(), lift.begin(), lift.end());
  }
  CcaStep extra = strip_content(out.next);
  out.next = extra.next;
  out.left.insert(out.left.end(), extra.left.begin(), extra.left.end());
  out.right.insert(out.right.begin(), extra.right.begin(), extra.right.end());
  // Lifts are unimodular, so only the extracted delays change det.
  out.next_det = dm;
  for (const auto* side : {&out.left, &out.right})
    for (const auto& st : *side) out.next_det.delay -= step_det(st).delay;

  out.note = render(d) + ": " + render(e) + " = (" + render(f) + ")(" + render(s) + ") + " +
             render(dr.remainder) + "; " + (col_site ? "row " : "column ") + std::to_string(dividend) +
             " updated" + (g ? ", z^-" + std::to_string(g) + " extracted" : "");

  if (opts.verify && product(out.left) * out.next * product(out.right) != q) {
    throw Error(ErrorCode::kVerificationFailed, render(d) + ": step does not reproduce its input");
  }
  return out;
}

bool is_terminal(const PolyMatrix2& q) { return q.has_zero_entry(); }

std::vector<LiftingStep> cca_terminate(const PolyMatrix2& q) {
  if (!is_terminal(q)) throw Error(ErrorCode::kNotTerminal, "quotient " + render(q) + " has no zero entry");
  pr_check(q);
  const Poly& a = q.at(0, 0);
  const Poly& b = q.at(0, 1);
  const Poly& c = q.at(1, 0);
  const Poly& d = q.at(1, 1);
  std::vector<LiftingStep> out;
  if (c.is_zero()) {
    // diag(ka,kd) diag(1,z^-q) upsilon(B) diag(z^-p,1)
    Rational ka = a.coeff(monomial_multiplicity(a));
    Rational kd = d.coeff(monomial_multiplicity(d));
    out = monomial_diag_steps(Poly::constant(ka), Poly::constant(kd));
    if (std::size_t qd = monomial_multiplicity(d)) out.push_back(DelayDiag{qd, 1});
    if (!b.is_zero()) out.push_back(UpperLift{b * ka.inverse()});
    if (std::size_t pa = monomial_multiplicity(a)) out.push_back(DelayDiag{pa, 0});
  } else if (b.is_zero()) {
    Rational ka = a.coeff(monomial_multiplicity(a));
    Rational kd = d.coeff(monomial_multiplicity(d));
    out = monomial_diag_steps(Poly::constant(ka), Poly::constant(kd));
    if (std::size_t pa = monomial_multiplicity(a)) out.push_back(DelayDiag{pa, 0});
    out.push_back(LowerLift{c * kd.inverse()});
    if (std::size_t qd = monomial_multiplicity(d)) out.push_back(DelayDiag{qd, 1});
  } else {
    // An entry on the diagonal vanished: Q = (Q J) J.
    out = cca_terminate(PolyMatrix2(b, a, d, c));
    out.push_back(Swap{});
  }
  return out;
}

Factorization factor_cca(const PolyMatrix2& h, const Strategy& strategy, const CcaOptions& opts) {
  pr_check(h);
  Factorization fact;
  fact.source = h;
  CcaStep root = strip_content(h);
  std::vector<LiftingStep> left = root.left;
  std::vector<LiftingStep> right = root.right;
  PolyMatrix2 q = root.next;
  if (!left.empty() || !right.empty()) fact.trace.push_back("monomial content extracted from the input lines");
  for (std::size_t i = 0; i < strategy.directives.size(); ++i) {
    const StepDirective& d = strategy.directives[i];
    if (is_terminal(q)) {
      throw Error(ErrorCode::kInvalidDirective, "directive " + std::to_string(i) + " (" + render(d) +
                                                    ") follows a terminal quotient " + render(q));
    }
    CcaStep st = cca_step(q, d, opts);
    left.insert(left.end(), st.left.begin(), st.left.end());
    right.insert(right.begin(), st.right.begin(), st.right.end());
    q = st.next;
    fact.trace.push_back(st.note);
  }
  if (!is_terminal(q)) {
    throw Error(ErrorCode::kStrategyExhausted,
                "strategy '" + render(strategy) + "' ends at non-terminal quotient " + render(q));
  }
  auto tail = cca_terminate(q);
  fact.trace.push_back("terminal quotient " + render(q));
  fact.steps = left;
  fact.steps.insert(fact.steps.end(), tail.begin(), tail.end());
  fact.steps.insert(fact.steps.end(), right.begin(), right.end());
  if (product(fact.steps) != h) {
    throw Error(ErrorCode::kVerificationFailed, "CCA factorization does not multiply back to the input");
  }
  return fact;
}

}  // namespace liftfact
