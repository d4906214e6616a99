#include "polyb/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyb {

TruncatedSeries::TruncatedSeries(int order) : order_(order), coeffs_(order + 1) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
    coeffs.resize(order + 1);
    coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::from_poly(const UniPoly& p, int order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) s.coeffs_[i] = p.coeff(i);
    return s;
}

TruncatedSeries TruncatedSeries::exponential(const Rational& c, int order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s.coeffs_[0] = term;
    for (int i = 1; i <= order; ++i) {
        term = term * c / i;
        s.coeffs_[i] = term;
    }
    return s;
}

TruncatedSeries TruncatedSeries::one_minus_exp_neg(int order) {
    TruncatedSeries e = exponential(-1, order);
    TruncatedSeries s(order);
    s.coeffs_[0] = 1 - e.coeffs_[0];
    for (int i = 1; i <= order; ++i) s.coeffs_[i] = -e.coeffs_[i];
    return s;
}

Rational TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("TruncatedSeries::coeff: index beyond order");
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::scale(const Rational& s) const {
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    if (inner.coeffs_[0] != 0)
        throw std::invalid_argument("TruncatedSeries::compose: inner constant term must be zero");
    const int n = std::min(order_, inner.order_);
    // Horner: acc = c_k; acc = acc*inner + c_{k-1}; ...
    TruncatedSeries acc(n);
    TruncatedSeries in(n, std::vector<Rational>(inner.coeffs_.begin(), inner.coeffs_.begin() + n + 1));
    for (int k = order_; k >= 0; --k) {
        acc = acc * in;
        acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
}

}  // namespace polyb
