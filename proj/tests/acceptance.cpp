// Acceptance suite: one pass/fail line per criterion, all checks exact.

#include "polyb/callan.hpp"
#include "polyb/identities.hpp"
#include "polyb/numbers.hpp"
#include "polyb/oeis.hpp"
#include "polyb/permutation.hpp"
#include "polyb/polybern.hpp"
#include "polyb/recurrences.hpp"
#include "polyb/special.hpp"
#include "polyb/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

using namespace polyb;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::ostream&)> run;
};

SweepRanges ranges(long long maxn, long long maxk, long long maxm, long long maxj) {
    SweepRanges r;
    r.n = ParamRange{0, maxn};
    r.k = ParamRange{0, maxk};
    r.m = ParamRange{0, maxm};
    r.j = ParamRange{0, maxj};
    return r;
}

bool check_eq(std::ostream& log, const std::string& what, const std::string& got,
              const std::string& expected) {
    if (got == expected) return true;
    log << what << ": got " << got << ", expected " << expected << "; ";
    return false;
}

bool run_sweep(std::ostream& log, const std::string& name, const SweepRanges& r) {
    const IdentityReport rep = run_identity(name, r);
    if (rep.pass() && rep.cases_checked > 0) return true;
    log << name << " cases=" << rep.cases_checked;
    for (const auto& f : rep.failures) log << " [" << f.params << ": " << f.lhs << " != " << f.rhs << "]";
    log << "; ";
    return false;
}

const UniPoly kC22 = UniPoly({14, 15, 2});  // 2x^2 + 15x + 14

bool criterion1(std::ostream& log) {
    bool ok = true;
    ok &= check_eq(log, "closed", bhat_closed(2, 2, 0).str(), "14");
    ok &= check_eq(log, "recurrence", bhat_rec(2, 2, 0).str(), "14");
    ok &= check_eq(log, "refined recurrence", bhat_refined_rec(2, 2, 0).str(), "14");
    ok &= check_eq(log, "enumeration", std::to_string(all_callan(2, 2).size()), "14");
    return ok;
}

bool criterion2(std::ostream& log) {
    bool ok = true;
    ok &= check_eq(log, "closed", bhat_closed(3, 1, 2).str(), "22");
    ok &= check_eq(log, "recurrence", bhat_rec(3, 1, 2).str(), "22");
    ok &= check_eq(log, "refined recurrence", bhat_refined_rec(3, 1, 2).str(), "22");
    ok &= check_eq(log, "enumeration", std::to_string(all_barred(3, 1, 2).size()), "22");
    return ok;
}

bool criterion3(std::ostream& log) {
    bool ok = true;
    ok &= check_eq(log, "closed", callan_poly_closed(2, 2).str(), kC22.str());
    ok &= check_eq(log, "recurrence", callan_poly_rec(2, 2).str(), kC22.str());
    ok &= check_eq(log, "weighted enumeration", callan_poly_enum(2, 2).str(), kC22.str());
    ok &= check_eq(log, "tableau enumeration", tableau_poly(2, 2).str(), kC22.str());
    ok &= check_eq(log, "tableau recurrence", tableau_poly_rec(2, 2).str(), kC22.str());
    return ok;
}

bool criterion4(std::ostream& log) {
    bool ok = check_eq(log, "tableau count", std::to_string(all_tableaux(2, 2).size()), "31");
    ok &= check_eq(log, "two-variable polynomial", tableau_poly2(2, 2).str(),
                   "x^2*y + x*y^2 + x^2 + 7*x*y + y^2 + 7*x + 7*y + 6");
    return ok;
}

bool criterion5(std::ostream& log) {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        BiPoly expected;
        const Rational c{int_pow(2, n - 1)};
        expected.add_term(1, 1, c - 1);
        expected.add_term(1, 0, c);
        expected.add_term(0, 1, c);
        expected.add_term(0, 0, c);
        ok &= check_eq(log, "T(" + std::to_string(n) + ",1)", tableau_poly2(n, 1).str(), expected.str());
    }
    return ok;
}

bool criterion6(std::ostream& log) {
    std::vector<int> perm{1, 2, 3, 4};
    std::vector<Rational> coeffs(4, Rational(0));
    do {
        coeffs[permutation_weight(perm)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    bool ok = check_eq(log, "S_4 weight polynomial", UniPoly(coeffs).str(), "x^3 + 6*x^2 + 11*x + 6");
    const std::vector<int> pi{8, 6, 9, 5, 7, 2, 3, 4, 1};
    ok &= check_eq(log, "w(869572341)", std::to_string(permutation_weight(pi)), "4");
    return ok;
}

bool criterion7(std::ostream& log) {
    const std::vector<std::string> expected{"0", "1", "-1", "0", "1", "0", "-3", "0", "17", "0", "-155"};
    bool ok = true;
    for (std::size_t n = 0; n < expected.size(); ++n)
        ok &= check_eq(log, "G_" + std::to_string(n), genocchi(n).str(), expected[n]);
    return ok;
}

bool criterion8(std::ostream& log) {
    bool ok = true;
    ok &= run_sweep(log, "OS_THEOREM", ranges(4, 5, 5, 0));
    ok &= run_sweep(log, "OS_ORIGINAL", ranges(4, 5, 5, 0));
    ok &= run_sweep(log, "INNER_STIRLING", ranges(5, 0, 6, 6));
    ok &= run_sweep(log, "DIAG_SUM", ranges(6, 6, 0, 6));
    ok &= run_sweep(log, "LAH", ranges(6, 6, 0, 6));
    ok &= run_sweep(log, "FAULHABER", ranges(6, 6, 0, 6));
    ok &= run_sweep(log, "B_SEKI", ranges(6, 6, 0, 6));
    ok &= run_sweep(log, "DIAG_SUM_C", ranges(6, 6, 0, 6));
    ok &= run_sweep(log, "PERM_WEIGHT", ranges(7, 0, 0, 0));
    ok &= run_sweep(log, "SYMMETRY", ranges(6, 6, 4, 0));
    ok &= run_sweep(log, "B_ALTERNATING", ranges(10, 0, 0, 0));
    ok &= run_sweep(log, "GENOCCHI_DIAG", ranges(8, 0, 0, 0));
    ok &= run_sweep(log, "GANDHI_DIAG", ranges(8, 5, 0, 0));
    ok &= run_sweep(log, "NEG_INDEX", ranges(0, 10, 0, 0));
    ok &= run_sweep(log, "LAST_LEM", ranges(0, 10, 0, 10));
    return ok;
}

bool criterion9(std::ostream& log) {
    bool ok = true;
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            for (int m = 0; m <= 3; ++m) {
                const Integer lhs = factorial(m) * bhat_closed(n, k, m);
                const Integer rhs = symmetrized(n, k, m);
                if (lhs != rhs) {
                    log << "bridge n=" << n << " k=" << k << " m=" << m << ": " << lhs.str()
                        << " != " << rhs.str() << "; ";
                    ok = false;
                }
            }
    return ok;
}

bool criterion10(std::ostream& log) {
    const IdentityReport rep = conjecture_sweep(4, 4, 16, 2);
    bool ok = rep.pass();
    if (!ok)
        for (const auto& f : rep.failures) log << "asserted cell " << f.params << " mismatch; ";
    log << "cells=" << rep.cases_checked << " findings=" << rep.findings.size()
        << " skipped=" << rep.skipped.size() << "; ";
    // the three hand-verified cells must actually have been evaluated
    ok = ok && rep.cases_checked == 25 && rep.skipped.empty();
    return ok;
}

bool criterion11(std::ostream& log) {
    const std::vector<int> sigma{11, 6, 8, 10, 3, 1, 13, 14, 7, 5, 4, 2, 9, 12};
    const auto dec = decode_run_permutation(sigma, 7);
    bool ok = dec.pi == std::vector<int>{6, 3, 1, 7, 5, 4, 2} &&
              dec.word == std::vector<int>{1, 7, 1, 0, 7, 3, 3} &&
              encode_run_permutation(dec.pi, dec.word, 7) == sigma;
    if (!ok) log << "worked 14-element example failed; ";
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            std::vector<int> s(n + k + 1);
            std::iota(s.begin(), s.end(), 1);
            long long valid = 0;
            do {
                bool runs_ok = true;
                for (std::size_t i = 1; i < s.size(); ++i)
                    if (s[i - 1] > n && s[i] > n && s[i] < s[i - 1]) runs_ok = false;
                if (!runs_ok) continue;
                ++valid;
                const auto d = decode_run_permutation(s, n);
                if (encode_run_permutation(d.pi, d.word, n) != s) {
                    log << "round-trip failed at n=" << n << " k=" << k << "; ";
                    ok = false;
                }
            } while (std::next_permutation(s.begin(), s.end()));
            const Integer expected = factorial(n) * int_pow(Integer(n + 1), k + 1);
            if (Integer(valid) != expected) {
                log << "count n=" << n << " k=" << k << ": " << valid << " != " << expected.str() << "; ";
                ok = false;
            }
        }
    return ok;
}

bool criterion12(std::ostream& log) {
    bool ok = true;
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    for (const auto& m : mappings) {
        const BFile fixture = load_bfile(m.path, m.id);
        const long long depth = m.mode == CompareMode::Exact ? 10 : 6;
        const IdentityReport rep = check_sequence(m, fixture, depth);
        if (!rep.pass()) {
            log << m.id << " failed";
            for (const auto& f : rep.failures) log << " [" << f.params << "]";
            log << "; ";
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "C^2_2(0) = 14 by closed form, both recurrences and enumeration", criterion1},
        {2, "C^1_3(2) = 22 by closed form, both recurrences and enumeration", criterion2},
        {3, "C_2^2(x) = 2x^2+15x+14 by five routes", criterion3},
        {4, "31 tableaux of size 2x2 and the two-variable polynomial", criterion4},
        {5, "T_n^1(x,y) closed display for n = 1..8 by enumeration", criterion5},
        {6, "S_4 weight polynomial and the nine-element example", criterion6},
        {7, "Genocchi numbers n = 0..10 from the series oracle", criterion7},
        {8, "identity suite at the stated sweep ranges", criterion8},
        {9, "definition bridge m! * C^k_n(m) = series-oracle symmetrized", criterion9},
        {10, "two-variable conjecture: asserted cells and 4x4 sweep", criterion10},
        {11, "run-permutation decode bijection and counting", criterion11},
        {12, "OEIS fixtures: A001469 exact, arrays by antidiagonal multisets", criterion12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label << " ("
                  << secs << "s)";
        if (!ok) {
            std::cout << " -- " << log.str();
            ++failures;
        } else if (c.id == 10) {
            std::cout << " -- " << log.str();
        }
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
