#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyb {

// All arithmetic in this library is exact. Integer is an arbitrary-precision
// signed integer; Rational is kept canonical (positive denominator, coprime,
// zero is 0/1) by the underlying representation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(long long n);

// base^exp for exp >= 0
Integer int_pow(const Integer& base, long long exp);

// Standard binomial coefficient. Returns 0 when r < 0 or r > n.
// Throws std::invalid_argument for n < 0.
Integer binomial(long long n, long long r);

// num/den with the sign normalized onto the numerator. Throws
// std::invalid_argument on a zero denominator.
Rational make_rational(Integer num, Integer den);

bool is_integral(const Rational& v);

// Throws std::domain_error when v is not an integer.
Integer to_integer(const Rational& v);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& v);

// Accepts "p" or "p/q" with optional sign.
Rational parse_rational(const std::string& s);

}  // namespace polyb
