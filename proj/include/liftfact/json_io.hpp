#pragma once

#include <json.hpp>

#include "liftfact/bank.hpp"
#include "liftfact/factor.hpp"
#include "liftfact/lde.hpp"

namespace liftfact {

using nlohmann::json;

// Polynomials serialize as coefficient lists of "p/q" strings, index i
// holding the coefficient of z^-i.
json to_json(const Rational& r);
json to_json(const Poly& p);
json to_json(const PolyMatrix2& m);
json to_json(const LiftingStep& s);
json to_json(const std::vector<LiftingStep>& steps);
json to_json(const Factorization& f);
json to_json(const FactorizationTree& t);
json to_json(const LdeSolution& s);
json to_json(const DetMonomial& d);

Rational rational_from_json(const json& j);
Poly poly_from_json(const json& j);
PolyMatrix2 matrix_from_json(const json& j);
LiftingStep step_from_json(const json& j);
std::vector<LiftingStep> steps_from_json(const json& j);
Factorization factorization_from_json(const json& j);
DetMonomial det_from_json(const json& j);

inline constexpr const char* kFactorizationSchema = "liftfact/factorization@1";
inline constexpr const char* kBankSchema = "liftfact/bank@1";

}  // namespace liftfact
