#pragma once

// Absolute logarithmic Weil heights of quadratic numbers, computed from the
// Mahler measure of the minimal polynomial and returned as certified
// intervals. Heights feed the exponent-bound chain of the rotation solver,
// so they are never floats.

#include "reach/loginterval.hpp"
#include "reach/quadratic.hpp"

namespace reach {

// h(x) as an interval of width <= precision. Requires x != 0.
LogInterval weil_height(const QuadraticNumber& x, const Rational& precision);

}  // namespace reach
