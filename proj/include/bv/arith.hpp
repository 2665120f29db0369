// Exact integer and rational arithmetic used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Reduced "num/den" rendering; integers render as "n/1".
std::string to_fraction_string(const Rational& r);

/// Accepts "n", "-n", "n/d" (d != 0). Throws bv::Error(InvalidInput).
Rational parse_fraction(const std::string& text);

BigInt numerator_of(const Rational& r);
BigInt denominator_of(const Rational& r);

/// Narrowing with a range check; throws bv::Error(Overflow) when out of range.
std::int64_t to_int64(const BigInt& v);
std::size_t to_size(const BigInt& v);

/// Comma separated integer list, e.g. "1,2,3".
std::vector<BigInt> parse_int_list(const std::string& text);

}  // namespace bv
