#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyb/numbers.hpp"
#include "polyb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace polyb;

TEST_CASE("permutation weight counts strict minimum records minus one") {
    const std::vector<int> pi{8, 6, 9, 5, 7, 2, 3, 4, 1};
    CHECK(permutation_weight(pi) == 4);
    const std::vector<int> identity{1, 2, 3, 4, 5};
    CHECK(permutation_weight(identity) == 0);
    const std::vector<int> reversed{5, 4, 3, 2, 1};
    CHECK(permutation_weight(reversed) == 4);
    CHECK_THROWS_AS(permutation_weight(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("weight distribution over S_4") {
    std::vector<int> perm{1, 2, 3, 4};
    std::vector<int> counts(4, 0);
    do {
        ++counts[permutation_weight(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(counts == std::vector<int>{6, 11, 6, 1});  // x^3 + 6x^2 + 11x + 6
}

TEST_CASE("decode of the worked 14-element permutation") {
    const std::vector<int> sigma{11, 6, 8, 10, 3, 1, 13, 14, 7, 5, 4, 2, 9, 12};
    const auto dec = decode_run_permutation(sigma, 7);
    CHECK(dec.pi == std::vector<int>{6, 3, 1, 7, 5, 4, 2});
    CHECK(dec.word == std::vector<int>{1, 7, 1, 0, 7, 3, 3});
    CHECK(encode_run_permutation(dec.pi, dec.word, 7) == sigma);
}

TEST_CASE("decode of the identity permutation") {
    std::vector<int> sigma(8);
    std::iota(sigma.begin(), sigma.end(), 1);
    const int n = 5;
    const auto dec = decode_run_permutation(sigma, n);
    CHECK(dec.pi == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(dec.word == std::vector<int>{5, 5, 5});
}

TEST_CASE("non-increasing runs of large elements are rejected") {
    const std::vector<int> bad{4, 3, 1, 2};  // run "4 3" with n = 2
    CHECK_THROWS_AS(decode_run_permutation(bad, 2), std::invalid_argument);
}

TEST_CASE("exhaustive decode/encode bijection and count") {
    for (int n = 0; n <= 3; ++n) {
        for (int k = 0; k <= 2; ++k) {
            const int total = n + k + 1;
            std::vector<int> sigma(total);
            std::iota(sigma.begin(), sigma.end(), 1);
            long long valid = 0;
            do {
                bool ok = true;
                for (int i = 1; i < total; ++i)
                    if (sigma[i - 1] > n && sigma[i] > n && sigma[i] < sigma[i - 1]) ok = false;
                if (!ok) continue;
                ++valid;
                const auto dec = decode_run_permutation(sigma, n);
                CHECK(encode_run_permutation(dec.pi, dec.word, n) == sigma);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            CHECK(Integer(valid) == factorial(n) * int_pow(Integer(n + 1), k + 1));
        }
    }
}

TEST_CASE("encode validates word letters") {
    CHECK_THROWS_AS(encode_run_permutation(std::vector<int>{1, 2}, std::vector<int>{3}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(encode_run_permutation(std::vector<int>{1}, std::vector<int>{0}, 2),
                    std::invalid_argument);
}
