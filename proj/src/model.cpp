#include "singosc/model.hpp"

#include <cmath>
#include <string>

namespace singosc {

OscillatorModel make_model(double g, bool allow_boundary) {
  if (!std::isfinite(g)) {
    throw CollapseError("coupling g must be finite");
  }
  const bool at_boundary = (g == -1.0);
  if (g < -1.0 || (at_boundary && !allow_boundary)) {
    throw CollapseError("coupling g = " + std::to_string(g) +
                        " is outside g > -1: the particle collapses into the "
                        "potential centre (pass allow_boundary for g = -1)");
  }
  OscillatorModel model;
  model.coupling = g;
  model.weight = -0.5 - 0.25 * std::sqrt(1.0 + g);
  model.origin_exponent = -2.0 * model.weight - 0.5;
  return model;
}

}  // namespace singosc
