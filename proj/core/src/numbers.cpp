#include "polyb/numbers.hpp"

#include <stdexcept>

namespace polyb {

Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer int_pow(const Integer& base, long long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

Integer binomial(long long n, long long r) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    Integer acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

bool is_integral(const Rational& v) {
    return boost::multiprecision::denominator(v) == 1;
}

Integer to_integer(const Rational& v) {
    if (!is_integral(v)) throw std::domain_error("to_integer: value " + rational_str(v) + " is not integral");
    return boost::multiprecision::numerator(v);
}

std::string rational_str(const Rational& v) {
    const Integer num = boost::multiprecision::numerator(v);
    const Integer den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    }
}

}  // namespace polyb
