#pragma once

#include "polyb/numbers.hpp"

#include <string>
#include <vector>

namespace polyb {

// Dense univariate polynomial over the rationals. Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial is the empty
// list. Equality is coefficientwise.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(Rational c);
    static UniPoly variable();  // x

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }

    Rational eval(const Rational& x) const;

    UniPoly subst_x_plus(const Rational& c) const;   // p(x + c)
    UniPoly subst_scaled_x(const Rational& c) const; // p(c*x)
    UniPoly divided_by_x() const;                    // requires a zero constant term

    // Descending powers, explicit '*': "2*x^2 + 15*x + 14".
    std::string str(const std::string& var = "x") const;

    bool operator==(const UniPoly&) const = default;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// p * (p+1) * ... * (p+j-1); the empty product is 1.
UniPoly rising(const UniPoly& p, long long j);

}  // namespace polyb
