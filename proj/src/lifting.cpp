#include "liftfact/lifting.hpp"

#include "liftfact/error.hpp"

namespace liftfact {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

PolyMatrix2 step_matrix(const LiftingStep& s) {
  const Poly one = Poly::constant(1);
  return std::visit(
      overloaded{
          [&](const UpperLift& u) { return PolyMatrix2(one, u.filter, Poly(), one); },
          [&](const LowerLift& l) { return PolyMatrix2(one, Poly(), l.filter, one); },
          [&](const DelayDiag& d) {
            Poly z = Poly::monomial(1, d.m);
            return d.channel == 0 ? PolyMatrix2(z, Poly(), Poly(), one) : PolyMatrix2(one, Poly(), Poly(), z);
          },
          [&](const GainDiag& g) { return PolyMatrix2(Poly::constant(g.k0), Poly(), Poly(), Poly::constant(g.k1)); },
          [&](const Swap&) { return PolyMatrix2(Poly(), one, one, Poly()); },
      },
      s);
}

PolyMatrix2 product(const std::vector<LiftingStep>& steps) {
  PolyMatrix2 out = PolyMatrix2::identity();
  for (const auto& s : steps) out = out * step_matrix(s);
  return out;
}

DetMonomial step_det(const LiftingStep& s) {
  return std::visit(overloaded{
                        [](const UpperLift&) { return DetMonomial{1, 0}; },
                        [](const LowerLift&) { return DetMonomial{1, 0}; },
                        [](const DelayDiag& d) { return DetMonomial{1, d.m}; },
                        [](const GainDiag& g) { return DetMonomial{g.k0 * g.k1, 0}; },
                        [](const Swap&) { return DetMonomial{-1, 0}; },
                    },
                    s);
}

std::vector<LiftingStep> adjugate_steps(const LiftingStep& s) {
  return std::visit(overloaded{
                        [](const UpperLift& u) { return std::vector<LiftingStep>{UpperLift{-u.filter}}; },
                        [](const LowerLift& l) { return std::vector<LiftingStep>{LowerLift{-l.filter}}; },
                        [](const DelayDiag& d) { return std::vector<LiftingStep>{DelayDiag{d.m, 1 - d.channel}}; },
                        [](const GainDiag& g) { return std::vector<LiftingStep>{GainDiag{g.k1, g.k0}}; },
                        [](const Swap&) { return std::vector<LiftingStep>{GainDiag{-1, -1}, Swap{}}; },
                    },
                    s);
}

LiftingStep transpose_step(const LiftingStep& s) {
  return std::visit(overloaded{
                        [](const UpperLift& u) -> LiftingStep { return LowerLift{u.filter}; },
                        [](const LowerLift& l) -> LiftingStep { return UpperLift{l.filter}; },
                        [](const DelayDiag& d) -> LiftingStep { return DelayDiag{d.m, 1 - d.channel}; },
                        [](const GainDiag& g) -> LiftingStep { return GainDiag{g.k1, g.k0}; },
                        [](const Swap&) -> LiftingStep { return Swap{}; },
                    },
                    s);
}

LiftingStep gamma_inverse_step(const Rational& k0, const Rational& k1, const LiftingStep& s) {
  return std::visit(overloaded{
                        [&](const UpperLift& u) -> LiftingStep { return UpperLift{u.filter * (k1 / k0)}; },
                        [&](const LowerLift& l) -> LiftingStep { return LowerLift{l.filter * (k0 / k1)}; },
                        [](const DelayDiag& d) -> LiftingStep { return d; },
                        [](const GainDiag& g) -> LiftingStep { return g; },
                        [](const Swap&) -> LiftingStep {
                          throw Error(ErrorCode::kPrecondition, "gain cannot pass a swap unchanged");
                        },
                    },
                    s);
}

bool is_lift(const LiftingStep& s) {
  return std::holds_alternative<UpperLift>(s) || std::holds_alternative<LowerLift>(s);
}

bool is_delay(const LiftingStep& s) { return std::holds_alternative<DelayDiag>(s); }

std::string step_kind(const LiftingStep& s) {
  return std::visit(overloaded{
                        [](const UpperLift&) { return std::string("upper"); },
                        [](const LowerLift&) { return std::string("lower"); },
                        [](const DelayDiag&) { return std::string("delay"); },
                        [](const GainDiag&) { return std::string("gain"); },
                        [](const Swap&) { return std::string("swap"); },
                    },
                    s);
}

std::string render(const LiftingStep& s) { return render(step_matrix(s)); }

std::string render(const std::vector<LiftingStep>& steps) {
  if (steps.empty()) return "I";
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += " ";
    out += render(s);
  }
  return out;
}

}  // namespace liftfact
