#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace foil {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace foil
