#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace singan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" or "p" (q > 0 after normalization). Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Canonical exact form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

std::string to_string(const Integer& n);

}  // namespace singan
