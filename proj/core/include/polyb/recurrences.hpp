#pragma once

#include "polyb/bipoly.hpp"
#include "polyb/numbers.hpp"
#include "polyb/unipoly.hpp"

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace polyb {

// Write-once keyed store shared by the recurrence engines. Entries never
// change after insertion, so contents are independent of evaluation order.
template <typename Key, typename Value>
class MemoTable {
public:
    const Value* find(const Key& key) const {
        std::shared_lock lock(mu_);
        const auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

    const Value& store(const Key& key, Value value) {
        std::unique_lock lock(mu_);
        return map_.emplace(key, std::move(value)).first->second;
    }

    std::map<Key, Value> snapshot() const {
        std::shared_lock lock(mu_);
        return map_;
    }

    void seed(const std::map<Key, Value>& entries) {
        std::unique_lock lock(mu_);
        map_.insert(entries.begin(), entries.end());
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, Value> map_;
};

// C_n^k(m) by the blue-element removal recurrence; bases C_n^0 = C_0^k = 1.
Integer bhat_rec(long long n, long long k, long long m);

// C_n^k(m) from the refined closed-form summands with r ordinary blocks;
// requires n, k >= 1.
Integer bhat_refined_rec(long long n, long long k, long long m);

// Callan polynomial recurrence; bases 1.
UniPoly callan_poly_rec(long long n, long long k);

// Tableau polynomial recurrence via the rightmost-column split; bases 1.
UniPoly tableau_poly_rec(long long n, long long k);

// Conjectured two-variable recurrence: rows and columns 0 and 1 come from the
// stated initial values, the recurrence applies for n, k >= 2.
BiPoly conjecture_rec(long long n, long long k);

// Persistence hooks for the CLI cache (bhat_rec results only).
using BhatKey = std::array<long long, 3>;
std::map<BhatKey, Integer> bhat_memo_snapshot();
void seed_bhat_memo(const std::map<BhatKey, Integer>& entries);

}  // namespace polyb
