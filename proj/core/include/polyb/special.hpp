#pragma once

#include "polyb/numbers.hpp"
#include "polyb/unipoly.hpp"

namespace polyb {

// Bernoulli numbers in the B_1 = +1/2 convention (values of t/(1-e^{-t})).
Rational bernoulli(long long n);

// S_k(x) with S_k(n) = 1^k + 2^k + ... + n^k for every natural n.
UniPoly seki_polynomial(long long k);

// G_0 = 1, G_1 = 0, G_{n+2}(z) = z(z+1) G_n(z+1) - z^2 G_n(z).
UniPoly gandhi_polynomial(long long n);

// (2 - 2^{n+1}) * B_n^{(1)}(1), an integer for every n.
// Throws std::domain_error if the rational result is non-integral.
Integer genocchi(long long n);

}  // namespace polyb
