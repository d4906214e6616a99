#include "polyb/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyb {

int permutation_weight(std::span<const int> pi) {
    if (pi.empty()) throw std::invalid_argument("permutation_weight: empty input");
    int records = 0;
    int current = 0;
    bool have = false;
    for (const int v : pi) {
        if (!have || v < current) {
            ++records;
            current = v;
            have = true;
        }
    }
    return records - 1;
}

RunDecomposition decode_run_permutation(std::span<const int> sigma, int n) {
    if (n < 0) throw std::invalid_argument("decode_run_permutation: negative n");
    const int total = static_cast<int>(sigma.size());
    if (total < n) throw std::invalid_argument("decode_run_permutation: sigma shorter than n");
    for (std::size_t i = 1; i < sigma.size(); ++i)
        if (sigma[i - 1] > n && sigma[i] > n && sigma[i] < sigma[i - 1])
            throw std::invalid_argument("decode_run_permutation: run of large elements not increasing");

    RunDecomposition out;
    std::vector<int> before(total - n + 1, -1);
    int smalls = 0;
    for (const int v : sigma) {
        if (v <= n) {
            out.pi.push_back(v);
            ++smalls;
        } else {
            before[v - n] = smalls;
        }
    }
    for (int i = 1; i <= total - n; ++i) out.word.push_back(before[i]);
    return out;
}

std::vector<int> encode_run_permutation(std::span<const int> pi, std::span<const int> word, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("encode_run_permutation: pi size mismatch");
    std::vector<std::vector<int>> gaps(n + 1);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int w = word[i];
        if (w < 0 || w > n) throw std::invalid_argument("encode_run_permutation: word letter out of range");
        gaps[w].push_back(n + 1 + static_cast<int>(i));
    }
    std::vector<int> out;
    out.reserve(pi.size() + word.size());
    for (int g = 0; g <= n; ++g) {
        std::sort(gaps[g].begin(), gaps[g].end());
        out.insert(out.end(), gaps[g].begin(), gaps[g].end());
        if (g < n) out.push_back(pi[g]);
    }
    return out;
}

}  // namespace polyb
