#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mhg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow2(std::uint64_t e);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Fixed-point decimal rendering with `digits` fractional digits, rounded
/// half up. Display only; never used in a verdict.
std::string to_decimal(const Rational& v, int digits);

}  // namespace mhg
