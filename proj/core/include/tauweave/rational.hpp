#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tauweave {

// Exact arithmetic everywhere; no floating point enters any computation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

} // namespace tauweave
