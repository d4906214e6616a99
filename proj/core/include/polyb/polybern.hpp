#pragma once

#include "polyb/numbers.hpp"
#include "polyb/unipoly.hpp"

namespace polyb {

// Query for the poly-Bernoulli polynomial value B_n^{(k)}(x): the coefficient
// of t^n/n! in e^{-xt} Li_k(1-e^{-t})/(1-e^{-t}). The upper index k may be
// negative; x is an arbitrary rational.
struct PolyBernoulliQuery {
    long long n = 0;
    long long k = 0;
    Rational x = 0;
};

// Exact evaluation through truncated power series at order n.
Rational pb_poly_value(const PolyBernoulliQuery& q);
Rational pb_poly_value(long long n, long long k, const Rational& x);

// Symmetrized poly-Bernoulli number with negative upper index:
// sum_{j=0}^{m} st(m,j) * B_n^{(-k-j)}(m). Always an integer; throws
// std::domain_error otherwise.
Integer symmetrized(long long n, long long k, long long m);

// Normalized symmetrized number by the closed form
// sum_r C(r+m,m) (r!)^2 S(n+1,r+1) S(k+1,r+1).
Integer bhat_closed(long long n, long long k, long long m);

// The single r-summand of the closed form; 0 when r > min(n,k).
Integer bhat_refined(long long n, long long k, long long m, long long r);

// Callan polynomial closed form:
// sum_j j! (x+1)^{rising j} S(n+1,j+1) S(k+1,j+1); integer coefficients.
UniPoly callan_poly_closed(long long n, long long k);

// Tentative k -> -1 column: (1/(k+1)!) sum_l (-1)^l st(k+2,l+2) C_k^l(x).
UniPoly negative_index_callan(long long k);

}  // namespace polyb
