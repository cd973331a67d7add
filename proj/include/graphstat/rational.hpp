#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace graphstat {

// Exact arithmetic everywhere a probability, moment or boundary ratio is
// reported. Counts are integers, probabilities are count/n, never floats.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "3/4" reduced, "1" when the denominator is 1.
std::string rat_str(const Rational& r);

/// Accepts "p/q", plain integers and decimals ("0.8" -> 4/5). Exact.
Rational parse_rational(const std::string& s);

double rat_double(const Rational& r);

}  // namespace graphstat
