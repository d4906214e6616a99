#include "polyb/special.hpp"

#include "polyb/polybern.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace polyb {

Rational bernoulli(long long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    // sum_{j=0}^{n} C(n+1,j) B_j = n+1 pins the B_1 = +1/2 convention.
    static std::mutex mu;
    static std::vector<Rational> memo{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<long long>(memo.size()) <= n) {
        const long long i = static_cast<long long>(memo.size());
        Rational acc = i + 1;
        for (long long j = 0; j < i; ++j) acc -= Rational(binomial(i + 1, j)) * memo[j];
        memo.push_back(acc / Rational(i + 1));
    }
    return memo[n];
}

UniPoly seki_polynomial(long long k) {
    if (k < 0) throw std::invalid_argument("seki_polynomial: negative index");
    std::vector<Rational> coeffs(k + 2);
    for (long long j = 0; j <= k; ++j)
        coeffs[k + 1 - j] = Rational(binomial(k + 1, j)) * bernoulli(j) / Rational(k + 1);
    return UniPoly(std::move(coeffs));
}

UniPoly gandhi_polynomial(long long n) {
    if (n < 0) throw std::invalid_argument("gandhi_polynomial: negative index");
    static std::mutex mu;
    static std::vector<UniPoly> memo{UniPoly::constant(1), UniPoly()};
    std::lock_guard lock(mu);
    const UniPoly z = UniPoly::variable();
    const UniPoly z_plus_1 = z + UniPoly::constant(1);
    while (static_cast<long long>(memo.size()) <= n) {
        const UniPoly& prev = memo[memo.size() - 2];
        memo.push_back(z * z_plus_1 * prev.subst_x_plus(1) - z * z * prev);
    }
    return memo[n];
}

Integer genocchi(long long n) {
    if (n < 0) throw std::invalid_argument("genocchi: negative index");
    const Rational v = Rational(2 - int_pow(2, n + 1)) * pb_poly_value(n, 1, Rational(1));
    if (!is_integral(v)) throw std::domain_error("genocchi: non-integral value " + rational_str(v));
    return to_integer(v);
}

}  // namespace polyb
