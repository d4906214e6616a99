#include "polyb/recurrences.hpp"

#include "polyb/polybern.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyb {
namespace {

MemoTable<BhatKey, Integer>& bhat_table() {
    static MemoTable<BhatKey, Integer> t;
    return t;
}

using NK = std::array<long long, 2>;

MemoTable<NK, UniPoly>& cpoly_table() {
    static MemoTable<NK, UniPoly> t;
    return t;
}

MemoTable<NK, UniPoly>& tpoly_table() {
    static MemoTable<NK, UniPoly> t;
    return t;
}

MemoTable<NK, BiPoly>& conj_table() {
    static MemoTable<NK, BiPoly> t;
    return t;
}

BiPoly conjecture_initial(long long n) {
    // (2^{n-1}-1) xy + 2^{n-1} x + 2^{n-1} y + 2^{n-1} for n >= 1
    const Rational c = Rational(int_pow(2, n - 1));
    BiPoly p;
    p.add_term(1, 1, c - 1);
    p.add_term(1, 0, c);
    p.add_term(0, 1, c);
    p.add_term(0, 0, c);
    return p;
}

void check_conjecture_initials() {
    // The n-row and k-column initial formulas must agree at (1,1).
    static const bool ok = [] {
        BiPoly expected;
        expected.add_term(1, 0, 1);
        expected.add_term(0, 1, 1);
        expected.add_term(0, 0, 1);
        return conjecture_initial(1) == expected;
    }();
    if (!ok) throw std::logic_error("conjecture_rec: inconsistent initial values at (1,1)");
}

}  // namespace

Integer bhat_rec(long long n, long long k, long long m) {
    if (n < 0 || k < 0 || m < 0) throw std::invalid_argument("bhat_rec: negative argument");
    if (n == 0 || k == 0) return 1;
    const BhatKey key{n, k, m};
    if (const Integer* hit = bhat_table().find(key)) return *hit;
    Integer acc = bhat_rec(n, k - 1, m);
    for (long long j = 1; j <= n; ++j) {
        const Integer b = binomial(n, j);
        acc += b * bhat_rec(n - j + 1, k - 1, m);
        if (m > 0) acc += m * b * bhat_rec(n - j, k - 1, m);
    }
    return bhat_table().store(key, std::move(acc));
}

Integer bhat_refined_rec(long long n, long long k, long long m) {
    if (n < 1 || k < 1) throw std::invalid_argument("bhat_refined_rec: requires n, k >= 1");
    if (m < 0) throw std::invalid_argument("bhat_refined_rec: negative m");
    Integer acc = 0;
    for (long long j = 1; j <= n; ++j) {
        Integer inner = 0;
        for (long long r = 0; r <= std::min(n - j, k - 1); ++r)
            inner += (m + r + 1) * bhat_refined(n - j, k - 1, m, r);
        acc += binomial(n, j) * inner;
    }
    for (long long r = 0; r <= std::min(n, k - 1); ++r)
        acc += (r + 1) * bhat_refined(n, k - 1, m, r);
    return acc;
}

UniPoly callan_poly_rec(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("callan_poly_rec: negative argument");
    if (n == 0 || k == 0) return UniPoly::constant(1);
    const NK key{n, k};
    if (const UniPoly* hit = cpoly_table().find(key)) return *hit;
    UniPoly acc = callan_poly_rec(n, k - 1);
    UniPoly weighted;
    for (long long j = 1; j <= n; ++j) {
        const Rational b{binomial(n, j)};
        acc += callan_poly_rec(n - j + 1, k - 1) * b;
        weighted += callan_poly_rec(n - j, k - 1) * b;
    }
    acc += UniPoly::variable() * weighted;
    return cpoly_table().store(key, std::move(acc));
}

UniPoly tableau_poly_rec(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("tableau_poly_rec: negative argument");
    if (n == 0 || k == 0) return UniPoly::constant(1);
    const NK key{n, k};
    if (const UniPoly* hit = tpoly_table().find(key)) return *hit;
    UniPoly acc = tableau_poly_rec(n, k - 1) * Rational(n + 1);
    for (long long j = 1; j <= n - 1; ++j) acc += tableau_poly_rec(j, k - 1) * Rational(binomial(n, j - 1));
    UniPoly weighted;
    for (long long j = 0; j <= n - 1; ++j) weighted += tableau_poly_rec(j, k - 1) * Rational(binomial(n, j));
    acc += UniPoly::variable() * weighted;
    return tpoly_table().store(key, std::move(acc));
}

BiPoly conjecture_rec(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("conjecture_rec: negative argument");
    check_conjecture_initials();
    if (n == 0 || k == 0) return BiPoly::constant(1);
    if (k == 1) return conjecture_initial(n);
    if (n == 1) return conjecture_initial(k);
    const NK key{n, k};
    if (const BiPoly* hit = conj_table().find(key)) return *hit;

    const BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    const BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
    BiPoly acc;
    for (long long j = 0; j <= n; ++j) acc += conjecture_rec(j, k - 1) * Rational(binomial(n + 1, j));
    BiPoly mid;
    for (long long j = 0; j <= n - 1; ++j) mid += conjecture_rec(j, k - 1) * Rational(binomial(n, j));
    acc += (xm1 + ym1) * mid;
    BiPoly corner;
    for (long long j = 0; j <= n - 1; ++j) corner += conjecture_rec(j, k - 1) * Rational(binomial(n - 1, j));
    acc += xm1 * ym1 * corner;
    return conj_table().store(key, std::move(acc));
}

std::map<BhatKey, Integer> bhat_memo_snapshot() { return bhat_table().snapshot(); }

void seed_bhat_memo(const std::map<BhatKey, Integer>& entries) { bhat_table().seed(entries); }

}  // namespace polyb
