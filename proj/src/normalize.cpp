#include <algorithm>

#include "liftfact/error.hpp"
#include "liftfact/lifting.hpp"

namespace liftfact {

namespace {

// J A = A^double-dagger J, so every swap can be carried to the right end.
std::vector<LiftingStep> push_swaps_right(const std::vector<LiftingStep>& in) {
  std::vector<LiftingStep> out;
  bool swapped = false;
  for (const auto& s : in) {
    if (std::holds_alternative<Swap>(s)) {
      swapped = !swapped;
    } else {
      out.push_back(swapped ? transpose_step(s) : s);
    }
  }
  if (swapped) out.push_back(Swap{});
  return out;
}

// A D = D gamma^-1(A); gains collect at the left end.  Expects swaps
// only at the very end.
std::vector<LiftingStep> push_gains_left(const std::vector<LiftingStep>& in, GainDiag& gain) {
  std::vector<LiftingStep> out;
  for (const auto& s : in) {
    if (const auto* g = std::get_if<GainDiag>(&s)) {
      for (auto& prev : out) prev = gamma_inverse_step(g->k0, g->k1, prev);
      gain.k0 *= g->k0;
      gain.k1 *= g->k1;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Poly& lift_filter(LiftingStep& s) {
  if (auto* u = std::get_if<UpperLift>(&s)) return u->filter;
  return std::get<LowerLift>(s).filter;
}

bool matched(const LiftingStep& lift, const DelayDiag& d) {
  return std::holds_alternative<UpperLift>(lift) ? d.channel == 0 : d.channel == 1;
}

std::ptrdiff_t last_lift(const std::vector<LiftingStep>& body) {
  for (auto i = static_cast<std::ptrdiff_t>(body.size()); i-- > 0;)
    if (is_lift(body[static_cast<std::size_t>(i)])) return i;
  return -1;
}

bool simplify_once(std::vector<LiftingStep>& body) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto& s = body[i];
    if ((is_lift(s) && lift_filter(body[i]).is_zero()) || (is_delay(s) && std::get<DelayDiag>(s).m == 0)) {
      body.erase(body.begin() + static_cast<long>(i));
      return true;
    }
  }
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    auto& a = body[i];
    auto& b = body[i + 1];
    if (is_lift(a) && a.index() == b.index()) {
      lift_filter(a) += lift_filter(b);
      body.erase(body.begin() + static_cast<long>(i) + 1);
      return true;
    }
    if (is_delay(a) && is_delay(b)) {
      auto& da = std::get<DelayDiag>(a);
      auto& db = std::get<DelayDiag>(b);
      if (da.channel == db.channel) {
        da.m += db.m;
        body.erase(body.begin() + static_cast<long>(i) + 1);
        return true;
      }
      if (da.channel == 1 && db.channel == 0) {
        std::swap(a, b);
        return true;
      }
    }
  }
  // A matched delay between two lifts of one kind moves right so the lifts
  // merge: D0 upsilon(S) = upsilon(z^-m S) D0, D1 lambda(S) = lambda(z^-m S) D1.
  for (std::size_t i = 1; i + 1 < body.size(); ++i) {
    if (!is_delay(body[i]) || !is_lift(body[i - 1]) || body[i - 1].index() != body[i + 1].index()) continue;
    const DelayDiag d = std::get<DelayDiag>(body[i]);
    if (!matched(body[i - 1], d)) continue;
    Poly& f = lift_filter(body[i + 1]);
    f = f.shifted(d.m);
    std::swap(body[i], body[i + 1]);
    return true;
  }
  // A delay sitting right of a lift of the other triangularity moves left
  // past it: lambda(S) D0 = D0 lambda(z^-m S), upsilon(S) D1 = D1 upsilon(z^-m S).
  const std::ptrdiff_t tail = last_lift(body);
  for (std::ptrdiff_t i = 0; i < tail; ++i) {
    if (!is_delay(body[static_cast<std::size_t>(i)])) continue;
    DelayDiag d = std::get<DelayDiag>(body[static_cast<std::size_t>(i)]);
    std::ptrdiff_t k = i - 1;
    while (k >= 0 && !is_lift(body[static_cast<std::size_t>(k)])) --k;
    if (k < 0 || matched(body[static_cast<std::size_t>(k)], d)) continue;
    Poly& f = lift_filter(body[static_cast<std::size_t>(k)]);
    f = f.shifted(d.m);
    body.erase(body.begin() + i);
    body.insert(body.begin() + k, d);
    return true;
  }
  return false;
}

}  // namespace

Factorization normalize_standard(const Factorization& fact) {
  GainDiag gain;
  std::vector<LiftingStep> steps = push_gains_left(push_swaps_right(fact.steps), gain);
  bool swap = !steps.empty() && std::holds_alternative<Swap>(steps.back());
  if (swap) steps.pop_back();

  while (simplify_once(steps)) {
  }

  // Delays after the last lift form the trailing diag; they go past the swap.
  std::vector<LiftingStep> trailing;
  const std::ptrdiff_t tail = last_lift(steps);
  if (tail >= 0) {
    for (auto i = static_cast<std::size_t>(tail) + 1; i < steps.size(); ++i) {
      LiftingStep d = steps[i];
      trailing.push_back(swap ? transpose_step(d) : d);
    }
    steps.resize(static_cast<std::size_t>(tail) + 1);
    std::sort(trailing.begin(), trailing.end(), [](const LiftingStep& a, const LiftingStep& b) {
      return std::get<DelayDiag>(a).channel < std::get<DelayDiag>(b).channel;
    });
  }

  Factorization out;
  out.source = fact.source;
  out.trace = fact.trace;
  if (!(gain.k0 == Rational(1) && gain.k1 == Rational(1))) out.steps.push_back(gain);
  out.steps.insert(out.steps.end(), steps.begin(), steps.end());
  if (swap) out.steps.push_back(Swap{});
  out.steps.insert(out.steps.end(), trailing.begin(), trailing.end());
  out.trace.push_back("normalized to standard causal form");
  if (product(out.steps) != fact.source && product(fact.steps) == fact.source) {
    throw Error(ErrorCode::kVerificationFailed, "normalization changed the product");
  }
  return out;
}

}  // namespace liftfact
