#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "arbor/errors.hpp"

namespace arbor {

using Integer = boost::multiprecision::cpp_int;

/** Exact rational, arbitrary precision, always reduced, denominator > 0. */
using Rational = boost::multiprecision::cpp_rational;

/** Accepts "p", "-p", "p/q"; reduces and normalizes the sign. */
Rational parse_rational(const std::string& text);

/** "p" when the denominator is 1, "p/q" otherwise. */
std::string rational_str(const Rational& r);

} // namespace arbor
