#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ssarr {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Parse "p", "-p" or "p/q" (q != 0) into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

/// Canonical formatting: lowest terms, "p" when the denominator is 1,
/// otherwise "p/q" with q > 0.
std::string rational_to_string(const Rat& value);

std::string int_to_string(const Int& value);

}  // namespace ssarr
