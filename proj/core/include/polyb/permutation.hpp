#pragma once

#include <span>
#include <vector>

namespace polyb {

// Number of left-to-right strict minimum records minus one (the first
// element is always a record). Throws std::invalid_argument on empty input.
int permutation_weight(std::span<const int> pi);

// A permutation of [n+K] whose maximal runs of elements > n are increasing,
// split into the subsequence pi of small elements and, for each large value
// n+i, the count of small elements preceding it.
struct RunDecomposition {
    std::vector<int> pi;    // permutation of [n]
    std::vector<int> word;  // word[i-1] = #small elements before n+i
};

// Throws std::invalid_argument if some run of large elements is not increasing.
RunDecomposition decode_run_permutation(std::span<const int> sigma, int n);

// Inverse of decode: large values sharing a gap are placed in increasing order.
std::vector<int> encode_run_permutation(std::span<const int> pi, std::span<const int> word, int n);

}  // namespace polyb
