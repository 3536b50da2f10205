#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclecover {

// Exact arithmetic everywhere: counts are Int, symmetric-function and set-map
// coefficients are Rational.  Nothing in this library ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int k);

}  // namespace cyclecover
