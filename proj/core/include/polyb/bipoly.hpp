#pragma once

#include "polyb/numbers.hpp"
#include "polyb/unipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyb {

// Sparse bivariate polynomial over the rationals, keyed by (deg_x, deg_y)
// with no zero entries stored. Equality is coefficientwise.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly constant(const Rational& c);
    static BiPoly x();
    static BiPoly y();
    static BiPoly term(int dx, int dy, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int dx, int dy) const;
    void add_term(int dx, int dy, const Rational& c);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rational& s) const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }

    Rational eval(const Rational& x, const Rational& y) const;
    UniPoly eval_y(const Rational& y) const;  // polynomial in x
    UniPoly eval_x(const Rational& x) const;  // polynomial in y

    // Terms in graded order: total degree descending, then deg_x descending.
    std::vector<std::pair<Key, Rational>> terms_graded() const;

    // "x^2*y + x*y^2 + x^2 + 7*x*y + y^2 + 7*x + 7*y + 6"
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

    bool operator==(const BiPoly&) const = default;

private:
    std::map<Key, Rational> coeffs_;
};

}  // namespace polyb
