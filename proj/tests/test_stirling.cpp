#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyb/stirling.hpp"
#include "polyb/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

using namespace polyb;

namespace {

// Oracle: count set partitions of [n] by number of blocks, enumerating
// restricted growth strings.
std::vector<long long> partition_counts_by_blocks(int n) {
    std::vector<long long> counts(n + 1, 0);
    if (n == 0) {
        counts.assign(1, 0);
        counts[0] = 1;
        return counts;
    }
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            ++counts[maxv + 1];
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rec(rec, 1, 0);
    return counts;
}

// Oracle: count permutations of [n] by number of cycles.
std::vector<long long> cycle_counts(int n) {
    std::vector<long long> counts(n + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        ++counts[cycles];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

}  // namespace

TEST_CASE("stirling2 equals brute-force set partition counts up to 12") {
    for (int n = 0; n <= 12; ++n) {
        const auto counts = partition_counts_by_blocks(n);
        for (int k = 0; k <= 12; ++k) {
            const long long expected = k < static_cast<int>(counts.size()) ? counts[k] : 0;
            CHECK(stirling2(n, k) == expected);
        }
    }
}

TEST_CASE("stirling2 examples") {
    CHECK(stirling2(4, 2) == 7);
    for (int n = 0; n <= 9; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
}

TEST_CASE("stirling1 equals brute-force cycle counts up to 8") {
    for (int n = 0; n <= 8; ++n) {
        const auto counts = cycle_counts(n);
        for (int k = 0; k <= 8; ++k) {
            const long long expected = k < static_cast<int>(counts.size()) ? counts[k] : 0;
            CHECK(stirling1(n, k) == expected);
        }
    }
}

TEST_CASE("stirling1 examples") {
    CHECK(stirling1(3, 1) == 2);
    for (int n = 0; n <= 9; ++n) CHECK(stirling1(n, n) == 1);
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(4, 0) == 0);
}

TEST_CASE("stirling1 row generating polynomial is the rising factorial") {
    const UniPoly x_plus_1 = UniPoly::variable() + UniPoly::constant(1);
    for (int n = 0; n <= 8; ++n) {
        std::vector<Rational> coeffs(n + 1);
        for (int j = 0; j <= n; ++j) coeffs[j] = Rational(stirling1(n + 1, j + 1));
        CHECK(UniPoly(coeffs) == rising(x_plus_1, n));
    }
}

TEST_CASE("tables tolerate concurrent growth") {
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([t] {
            for (int n = 0; n <= 40; ++n)
                for (int k = 0; k <= n; ++k) {
                    volatile bool same = stirling2(n + t % 3, k) == stirling2(n + t % 3, k);
                    (void)same;
                    (void)stirling1(n, k);
                }
        });
    }
    for (auto& t : pool) t.join();
    CHECK(stirling2(40, 2) == (int_pow(2, 39) - 1));
    CHECK(stirling1(5, 2) == 50);
}
