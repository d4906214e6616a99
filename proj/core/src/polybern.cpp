#include "polyb/polybern.hpp"

#include "polyb/series.hpp"
#include "polyb/stirling.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyb {
namespace {

// Li_k(z)/z as a polynomial in z up to degree `order`: sum_m z^m / (m+1)^k,
// with (m+1)^k an exact integer power for k of either sign.
TruncatedSeries polylog_over_z(long long k, int order) {
    std::vector<Rational> c(order + 1);
    for (int m = 0; m <= order; ++m) {
        const Integer p = int_pow(Integer(m + 1), k >= 0 ? k : -k);
        c[m] = k >= 0 ? Rational(1, p) : Rational(p);
    }
    return TruncatedSeries(order, std::move(c));
}

}  // namespace

Rational pb_poly_value(const PolyBernoulliQuery& q) {
    if (q.n < 0) throw std::invalid_argument("pb_poly_value: negative n");
    const int order = static_cast<int>(q.n);
    const TruncatedSeries u = TruncatedSeries::one_minus_exp_neg(order);
    const TruncatedSeries base = polylog_over_z(q.k, order).compose(u);
    const TruncatedSeries gf = TruncatedSeries::exponential(-q.x, order) * base;
    return gf.coeff(order) * Rational(factorial(q.n));
}

Rational pb_poly_value(long long n, long long k, const Rational& x) {
    return pb_poly_value(PolyBernoulliQuery{n, k, x});
}

Integer symmetrized(long long n, long long k, long long m) {
    if (n < 0 || k < 0 || m < 0) throw std::invalid_argument("symmetrized: negative argument");
    Rational acc = 0;
    for (long long j = 0; j <= m; ++j)
        acc += Rational(stirling1(m, j)) * pb_poly_value(n, -k - j, Rational(m));
    return to_integer(acc);
}

Integer bhat_closed(long long n, long long k, long long m) {
    if (n < 0 || k < 0 || m < 0) throw std::invalid_argument("bhat_closed: negative argument");
    Integer acc = 0;
    for (long long r = 0; r <= std::min(n, k); ++r) acc += bhat_refined(n, k, m, r);
    return acc;
}

Integer bhat_refined(long long n, long long k, long long m, long long r) {
    if (n < 0 || k < 0 || m < 0 || r < 0) throw std::invalid_argument("bhat_refined: negative argument");
    if (r > std::min(n, k)) return 0;
    const Integer f = factorial(r);
    return binomial(r + m, m) * f * f * stirling2(n + 1, r + 1) * stirling2(k + 1, r + 1);
}

UniPoly callan_poly_closed(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("callan_poly_closed: negative argument");
    const UniPoly x_plus_1 = UniPoly::variable() + UniPoly::constant(1);
    UniPoly acc;
    for (long long j = 0; j <= std::min(n, k); ++j) {
        const Integer c = factorial(j) * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
        acc += rising(x_plus_1, j) * Rational(c);
    }
    return acc;
}

UniPoly negative_index_callan(long long k) {
    if (k < 0) throw std::invalid_argument("negative_index_callan: negative argument");
    UniPoly acc;
    for (long long l = 0; l <= k; ++l) {
        const Integer sign = (l % 2 == 0) ? 1 : -1;
        acc += callan_poly_closed(k, l) * Rational(sign * stirling1(k + 2, l + 2));
    }
    return acc * Rational(1, factorial(k + 1));
}

}  // namespace polyb
