#include "polyb/callan.hpp"

#include "polyb/permutation.hpp"
#include "polyb/stirling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyb {
namespace {

struct StarPartition {
    std::vector<std::vector<int>> ordinary;  // natural order (by least element)
    std::vector<int> extra;                  // numbered labels of the star block
};

// All partitions of {1..size} + star into exactly `blocks` non-empty blocks,
// enumerated by restricted growth strings with the star as the last ground
// element. Block order within a partition is first-appearance order, which
// for the ordinary blocks equals the natural order by least element.
std::vector<StarPartition> star_partitions(int size, int blocks) {
    std::vector<StarPartition> out;
    const int s = size + 1;  // ground: 1..size, then the star
    if (blocks < 1 || blocks > s) return out;
    std::vector<int> rgs(s, 0);

    auto emit = [&] {
        StarPartition part;
        std::vector<std::vector<int>> all(blocks);
        for (int i = 0; i < size; ++i) all[rgs[i]].push_back(i + 1);
        const int star_block = rgs[s - 1];
        part.extra = all[star_block];
        for (int b = 0; b < blocks; ++b)
            if (b != star_block) part.ordinary.push_back(std::move(all[b]));
        out.push_back(std::move(part));
    };

    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == s) {
            if (maxv + 1 == blocks) emit();
            return;
        }
        // values above `blocks-1` can never be completed into exactly `blocks` blocks
        const int hi = std::min(maxv + 1, blocks - 1);
        for (int v = 0; v <= hi; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

std::string labels_str(const std::vector<int>& labels, bool star) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ",";
        out << labels[i];
    }
    if (star) {
        if (!labels.empty()) out << ",";
        out << "*";
    }
    return out.str();
}

}  // namespace

std::string CallanSequence::text() const {
    std::ostringstream out;
    for (const auto& p : ordinary) out << "(" << labels_str(p.blue, false) << ";" << labels_str(p.red, false) << ")";
    out << "(" << labels_str(extra_blue, true) << ";" << labels_str(extra_red, true) << ")";
    return out.str();
}

std::string BarredCallanSequence::text() const {
    std::ostringstream out;
    const std::size_t r = base.ordinary.size();
    for (std::size_t g = 0; g <= r; ++g) {
        if (g < bars.size())
            for (int b = 0; b < bars[g]; ++b) out << "|";
        if (g < r) {
            const auto& p = base.ordinary[g];
            out << "(" << labels_str(p.blue, false) << ";" << labels_str(p.red, false) << ")";
        }
    }
    out << "(" << labels_str(base.extra_blue, true) << ";" << labels_str(base.extra_red, true) << ")";
    return out.str();
}

void enum_callan(int n, int k, const std::function<void(const CallanSequence&)>& visit) {
    if (n < 0 || k < 0) throw std::invalid_argument("enum_callan: negative size");
    for (int r = 0; r <= std::min(n, k); ++r) {
        const auto reds = star_partitions(n, r + 1);
        const auto blues = star_partitions(k, r + 1);
        std::vector<int> sigma(r), tau(r);
        for (const auto& red : reds) {
            for (const auto& blue : blues) {
                std::iota(sigma.begin(), sigma.end(), 0);
                do {
                    std::iota(tau.begin(), tau.end(), 0);
                    do {
                        CallanSequence seq;
                        seq.n = n;
                        seq.k = k;
                        seq.extra_blue = blue.extra;
                        seq.extra_red = red.extra;
                        seq.ordinary.resize(r);
                        for (int i = 0; i < r; ++i) {
                            seq.ordinary[i].blue = blue.ordinary[sigma[i]];
                            seq.ordinary[i].red = red.ordinary[tau[i]];
                        }
                        visit(seq);
                    } while (std::next_permutation(tau.begin(), tau.end()));
                } while (std::next_permutation(sigma.begin(), sigma.end()));
            }
        }
    }
}

std::vector<CallanSequence> all_callan(int n, int k) {
    std::vector<CallanSequence> out;
    enum_callan(n, k, [&](const CallanSequence& s) { out.push_back(s); });
    return out;
}

void enum_barred(int n, int k, int m, const std::function<void(const BarredCallanSequence&)>& visit) {
    if (m < 0) throw std::invalid_argument("enum_barred: negative bar count");
    enum_callan(n, k, [&](const CallanSequence& base) {
        const int gaps = static_cast<int>(base.ordinary.size()) + 1;
        std::vector<int> comp(gaps, 0);
        auto rec = [&](auto&& self, int gap, int left) -> void {
            if (gap == gaps - 1) {
                comp[gap] = left;
                visit(BarredCallanSequence{base, comp});
                return;
            }
            for (int v = 0; v <= left; ++v) {
                comp[gap] = v;
                self(self, gap + 1, left - v);
            }
        };
        rec(rec, 0, m);
    });
}

std::vector<BarredCallanSequence> all_barred(int n, int k, int m) {
    std::vector<BarredCallanSequence> out;
    enum_barred(n, k, m, [&](const BarredCallanSequence& s) { out.push_back(s); });
    return out;
}

int barred_weight(const BarredCallanSequence& a) {
    const int total = std::accumulate(a.bars.begin(), a.bars.end(), 0);
    if (total != 1) throw std::invalid_argument("barred_weight: requires exactly one bar");
    const int r = static_cast<int>(a.base.ordinary.size());

    // Rank the blue blocks by least element; the bar is the unique smallest item.
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a.base.ordinary[x].blue.front() < a.base.ordinary[y].blue.front();
    });
    std::vector<int> rank(r);
    for (int pos = 0; pos < r; ++pos) rank[order[pos]] = pos + 2;

    std::vector<int> word;
    word.reserve(r + 1);
    for (int g = 0; g <= r; ++g) {
        if (g < static_cast<int>(a.bars.size()) && a.bars[g] == 1) word.push_back(1);
        if (g < r) word.push_back(rank[g]);
    }
    return permutation_weight(word);
}

UniPoly callan_poly_enum(int n, int k) {
    std::vector<Rational> coeffs;
    enum_barred(n, k, 1, [&](const BarredCallanSequence& s) {
        const int w = barred_weight(s);
        if (static_cast<std::size_t>(w) >= coeffs.size()) coeffs.resize(w + 1);
        coeffs[w] += 1;
    });
    return UniPoly(std::move(coeffs));
}

std::vector<int> callan_to_permutation(const CallanSequence& s) {
    std::vector<int> word = s.extra_red;
    for (const auto& p : s.ordinary) {
        for (const int b : p.blue) word.push_back(b + s.n);
        for (const int r : p.red) word.push_back(r);
    }
    for (const int b : s.extra_blue) word.push_back(b + s.n);
    return word;
}

bool is_callan_permutation(std::span<const int> word, int n) {
    for (std::size_t i = 1; i < word.size(); ++i) {
        const bool small_prev = word[i - 1] <= n;
        const bool small_cur = word[i] <= n;
        if (small_prev == small_cur && word[i] < word[i - 1]) return false;
    }
    return true;
}

Integer count_c_callan(int n, int k) {
    if (k < 1) throw std::invalid_argument("count_c_callan: requires k >= 1");
    if (n < 0) throw std::invalid_argument("count_c_callan: negative n");
    // All red labels sit in ordinary blocks: partition [n] into r ordered
    // blocks and [k]+star into r+1 blocks with the ordinary ones ordered.
    Integer acc = 0;
    for (int r = 0; r <= std::min(n, k); ++r) {
        const Integer f = factorial(r);
        acc += f * f * stirling2(n, r) * stirling2(k + 1, r + 1);
    }
    return acc;
}

}  // namespace polyb
