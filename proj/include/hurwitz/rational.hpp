#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int n);

// "num/den" in lowest terms, denominator positive. Text mode drops the "/1"
// on integers; machine mode keeps it.
std::string to_fraction(const Rational& q, bool machine = false);

// Inverse of to_fraction(q, true); also accepts a bare integer.
Rational fraction_from(const std::string& text);

}  // namespace hurwitz
