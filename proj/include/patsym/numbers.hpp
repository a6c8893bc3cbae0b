#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace patsym {

// Exact arithmetic used throughout. Totals grow like 4^n * poly(n), so every
// public count is arbitrary precision; fixed-width types appear only in
// internal loops whose bounds are checked.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int binomial(long long n, long long k);
Int factorial(long long n);

}  // namespace patsym
