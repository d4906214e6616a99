#pragma once

#include "polyb/numbers.hpp"
#include "polyb/unipoly.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace polyb {

// One Callan pair (B_i; R_i): a non-empty blue block over [k] and a
// non-empty red block over [n].
struct CallanPair {
    std::vector<int> blue;
    std::vector<int> red;
};

// Linear arrangement of ordinary Callan pairs plus the extra pair. The stars
// of the extra blocks are implicit; extra_blue/extra_red hold only numbered
// labels. Blue blocks together with extra_blue partition [k], red blocks
// with extra_red partition [n].
struct CallanSequence {
    int n = 0;
    int k = 0;
    std::vector<CallanPair> ordinary;
    std::vector<int> extra_blue;
    std::vector<int> extra_red;

    // "(1,2;1)(*;2,*)" style: pairs in order, then the extra pair with stars.
    std::string text() const;
};

// Callan sequence with m indistinguishable bars placed in the r+1 gaps
// around the ordinary pairs; bars[g] counts bars in gap g.
struct BarredCallanSequence {
    CallanSequence base;
    std::vector<int> bars;

    std::string text() const;
};

// Visit every Callan sequence of size n x k exactly once in canonical order:
// r ascending, red and blue partitions in restricted-growth-string order over
// the ground set with the star last, then block-to-position assignments in
// lexicographic order.
void enum_callan(int n, int k, const std::function<void(const CallanSequence&)>& visit);
std::vector<CallanSequence> all_callan(int n, int k);

// Every base sequence combined with every weak composition of m bars into
// r+1 gaps, compositions in lexicographic order.
void enum_barred(int n, int k, int m, const std::function<void(const BarredCallanSequence&)>& visit);
std::vector<BarredCallanSequence> all_barred(int n, int k, int m);

// Weight of a 1-barred sequence: rank the ordinary blue blocks and the bar as
// placed (bar smallest, blocks ordered by least element) and take the
// permutation weight of the rank word. Throws unless exactly one bar is set.
int barred_weight(const BarredCallanSequence& a);

// sum over 1-barred sequences of x^{weight}
UniPoly callan_poly_enum(int n, int k);

// Word over [n+k]: extra red labels first, then each pair (blue block shifted
// by n, then red block, elements ascending), extra blue labels last.
std::vector<int> callan_to_permutation(const CallanSequence& s);

// Maximal runs of elements <= n and of elements > n are both increasing.
bool is_callan_permutation(std::span<const int> word, int n);

// Number of Callan sequences of size n x k whose extra red block holds only
// the star. Counted directly from the model structure; requires k >= 1.
Integer count_c_callan(int n, int k);

}  // namespace polyb
