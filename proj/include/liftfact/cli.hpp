#pragma once

#include <ostream>
#include <string>

#include "liftfact/lifting.hpp"

namespace liftfact {

// Entry point shared by the liftfact binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Text display used by `factor`, e.g.
//   H(z) = [1, (1 + z^-1)/4; 0, 1] [z^-1, 0; 0, 1] [1, 0; -(1 + z^-1)/2, 1]
std::string render_product_line(const std::vector<LiftingStep>& steps);
std::string describe_step(const LiftingStep& s);

}  // namespace liftfact
