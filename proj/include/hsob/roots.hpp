#pragma once

#include <functional>

#include "hsob/real.hpp"

namespace hsob {

/// f(x) -> (value, derivative)
using ValueAndDerivative = std::function<void(const Real& x, Real& value, Real& deriv)>;

/// Safeguarded Newton iteration on a bracket [a, b] with f(a) f(b) < 0.
/// Newton steps that leave the bracket or stall fall back to bisection.
/// Stops once the step (or the bracket) is below 2^(3-bits) * |x|.
Real refine_root(const ValueAndDerivative& f, Real a, Real b, precision_t bits);

}  // namespace hsob
