#pragma once

#include "polyb/numbers.hpp"

namespace polyb {

// Unsigned Stirling numbers of the first and second kind, memoized in
// triangular tables grown on demand. Out-of-triangle arguments (k > n, or
// negative k) return 0 so closed-form sums may run to uniform upper bounds.
// The tables support concurrent readers; growth is internally synchronized.
Integer stirling1(long long n, long long k);
Integer stirling2(long long n, long long k);

// Grow both tables up to row n, e.g. before a parallel sweep.
void prewarm_stirling(long long n);

}  // namespace polyb
