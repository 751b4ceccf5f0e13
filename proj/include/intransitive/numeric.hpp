#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace intransitive {

/// Arbitrary-precision integer used for all exact counts.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Fixed-width counter for the lattice convolution table. n^n < 2^256 for n <= 46.
using LatticeCount = boost::multiprecision::uint256_t;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace intransitive
