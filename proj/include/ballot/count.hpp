#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ballot {

/// Exact unsigned count. Table values exceed 64 bits (the largest frozen
/// reference value is ~2e19), so every counting path is arbitrary precision
/// end to end; no floating point is used anywhere.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, used by formulas whose intermediate terms are fractional.
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const Count& value);
Count parse_count(const std::string& text);

/// C(n, k); zero outside 0 <= k <= n.
Count binomial(long long n, long long k);

Count factorial(int n);

/// n!! with the convention (-1)!! = 0!! = 1. Requires n >= -1.
Count double_factorial(int n);

/// base^exp for exp >= 0.
Count pow_count(const Count& base, unsigned exp);

/// 2^exp.
Count pow2(unsigned exp);

/// Exact division; throws std::logic_error naming `what` when the divisor
/// does not divide evenly (a non-divisible sum signals a formula bug).
Count exact_div(const Count& value, const Count& divisor, const char* what);

/// Rational -> integer with an integrality assertion, same failure contract
/// as exact_div.
Count to_integer(const Rational& value, const char* what);

} // namespace ballot
