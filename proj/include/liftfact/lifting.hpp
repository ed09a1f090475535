#pragma once

#include <string>
#include <variant>
#include <vector>

#include "liftfact/matrix.hpp"

namespace liftfact {

struct UpperLift {
  Poly filter;
  friend bool operator==(const UpperLift&, const UpperLift&) = default;
};

struct LowerLift {
  Poly filter;
  friend bool operator==(const LowerLift&, const LowerLift&) = default;
};

// diag(z^-m, 1) on channel 0, diag(1, z^-m) on channel 1.
struct DelayDiag {
  std::size_t m = 1;
  int channel = 0;
  friend bool operator==(const DelayDiag&, const DelayDiag&) = default;
};

struct GainDiag {
  Rational k0{1};
  Rational k1{1};
  friend bool operator==(const GainDiag&, const GainDiag&) = default;
};

struct Swap {
  friend bool operator==(const Swap&, const Swap&) = default;
};

using LiftingStep = std::variant<UpperLift, LowerLift, DelayDiag, GainDiag, Swap>;

// Factorizations list steps leftmost factor first; a signal passing
// through the ladder meets the last step first.
struct Factorization {
  std::vector<LiftingStep> steps;
  PolyMatrix2 source;
  std::vector<std::string> trace;
};

PolyMatrix2 step_matrix(const LiftingStep& s);
PolyMatrix2 product(const std::vector<LiftingStep>& steps);
DetMonomial step_det(const LiftingStep& s);

// Causal adjugate: step_matrix(adjugate(s)) * step_matrix(s) = det(s) I.
std::vector<LiftingStep> adjugate_steps(const LiftingStep& s);

// A^double-dagger for a single step.
LiftingStep transpose_step(const LiftingStep& s);
// gamma^-1_{k0,k1} applied to a single step, for moving diag(k0,k1) leftward past it.
LiftingStep gamma_inverse_step(const Rational& k0, const Rational& k1, const LiftingStep& s);

std::string step_kind(const LiftingStep& s);
std::string render(const LiftingStep& s);
std::string render(const std::vector<LiftingStep>& steps);

// Rewrites into standard causal form: leading gain, left delays,
// alternating lifts each followed by at most one matched delay, optional
// swap, trailing delays.  Product is unchanged.
Factorization normalize_standard(const Factorization& fact);

bool is_lift(const LiftingStep& s);
bool is_delay(const LiftingStep& s);

}  // namespace liftfact
