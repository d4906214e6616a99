#pragma once

#include "polyb/numbers.hpp"
#include "polyb/unipoly.hpp"

#include <vector>

namespace polyb {

// Formal power series in t truncated at a fixed order: coefficients of
// t^0 .. t^order, all exact. Every operation keeps coefficients correct up
// to the (smaller) order of its operands.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries from_poly(const UniPoly& p, int order);
    static TruncatedSeries exponential(const Rational& c, int order);  // e^{c t}
    static TruncatedSeries one_minus_exp_neg(int order);               // 1 - e^{-t}

    int order() const { return order_; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scale(const Rational& s) const;

    // this(inner); the inner series must have a zero constant term.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    int order_ = 0;
    std::vector<Rational> coeffs_;  // size order_+1
};

}  // namespace polyb
