#include "polyb/stirling.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace polyb {
namespace {

// Triangular memo: rows_[n][k] for 0 <= k <= n. Readers take a shared lock;
// a missing row upgrades to an exclusive lock and fills every row up to n.
class StirlingTable {
public:
    // kind1: st(n,k) = st(n-1,k-1) + (n-1)*st(n-1,k)
    // kind2: S(n,k)  = S(n-1,k-1)  + k*S(n-1,k)
    explicit StirlingTable(bool kind1) : kind1_(kind1) { rows_.push_back({Integer(1)}); }

    Integer at(long long n, long long k) {
        if (n < 0) throw std::invalid_argument("stirling: negative n");
        if (k < 0 || k > n) return 0;
        {
            std::shared_lock lock(mu_);
            if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
        }
        grow(n);
        std::shared_lock lock(mu_);
        return rows_[n][k];
    }

    void grow(long long n) {
        std::unique_lock lock(mu_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t r = rows_.size();
            const auto& prev = rows_.back();
            std::vector<Integer> row(r + 1);
            row[0] = 0;
            row[r] = 1;
            for (std::size_t k = 1; k < r; ++k) {
                const Integer mult = kind1_ ? Integer(r - 1) : Integer(k);
                row[k] = prev[k - 1] + mult * prev[k];
            }
            rows_.push_back(std::move(row));
        }
    }

private:
    bool kind1_;
    std::shared_mutex mu_;
    std::vector<std::vector<Integer>> rows_;
};

StirlingTable& table1() {
    static StirlingTable t(true);
    return t;
}

StirlingTable& table2() {
    static StirlingTable t(false);
    return t;
}

}  // namespace

Integer stirling1(long long n, long long k) { return table1().at(n, k); }

Integer stirling2(long long n, long long k) { return table2().at(n, k); }

void prewarm_stirling(long long n) {
    if (n < 0) return;
    table1().grow(n);
    table2().grow(n);
}

}  // namespace polyb
