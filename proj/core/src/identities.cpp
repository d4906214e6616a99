#include "polyb/identities.hpp"

#include "polyb/callan.hpp"
#include "polyb/numbers.hpp"
#include "polyb/parallel.hpp"
#include "polyb/permutation.hpp"
#include "polyb/polybern.hpp"
#include "polyb/recurrences.hpp"
#include "polyb/special.hpp"
#include "polyb/stirling.hpp"
#include "polyb/tableau.hpp"
#include "polyb/unipoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

namespace polyb {
namespace {

using json = nlohmann::ordered_json;

struct Tuple {
    long long n = 0, k = 0, m = 0, j = 0;
};

struct Bounds {
    ParamRange n, k, m, j;
};

constexpr ParamRange kDefaultN{0, 6};
constexpr ParamRange kDefaultK{0, 6};
constexpr ParamRange kDefaultM{0, 4};
constexpr ParamRange kDefaultJ{0, 6};

Bounds resolve(const SweepRanges& r) {
    return Bounds{r.n.value_or(kDefaultN), r.k.value_or(kDefaultK), r.m.value_or(kDefaultM),
                  r.j.value_or(kDefaultJ)};
}

std::string params_str(const Tuple& t, const std::string& used) {
    std::ostringstream out;
    bool first = true;
    for (const char p : used) {
        if (!first) out << " ";
        first = false;
        switch (p) {
            case 'n': out << "n=" << t.n; break;
            case 'k': out << "k=" << t.k; break;
            case 'm': out << "m=" << t.m; break;
            case 'j': out << "j=" << t.j; break;
        }
    }
    return out.str();
}

std::string ranges_str(const Bounds& b, const std::string& used) {
    std::ostringstream out;
    bool first = true;
    for (const char p : used) {
        if (!first) out << " ";
        first = false;
        const ParamRange& r = p == 'n' ? b.n : p == 'k' ? b.k : p == 'm' ? b.m : b.j;
        out << p << "=" << r.lo << ".." << r.hi;
    }
    return out.str();
}

using CheckFn = std::function<std::optional<IdentityFailure>(const Tuple&)>;
using CasesFn = std::function<std::vector<Tuple>(const Bounds&)>;

struct Entry {
    std::string name;
    std::string used;  // subset of "nkmj", display order
    CasesFn cases;
    CheckFn check;
};

std::optional<IdentityFailure> fail(const Tuple& t, const std::string& used, std::string lhs,
                                    std::string rhs) {
    return IdentityFailure{params_str(t, used), std::move(lhs), std::move(rhs)};
}

Integer sign(long long l) { return l % 2 == 0 ? 1 : -1; }

// ---- left-hand / right-hand evaluators ---------------------------------

UniPoly os_theorem_lhs(long long n, long long k, long long m) {
    UniPoly acc;
    for (long long l = 0; l <= m; ++l)
        acc += callan_poly_closed(n + l, k) * Rational(sign(l) * stirling1(m + 1, l + 1));
    return acc;
}

Integer os_original_lhs(long long n, long long k, long long m) {
    Integer acc = 0;
    for (long long l = 0; l <= m; ++l)
        for (long long i = 0; i <= l; ++i)
            acc += sign(i) * stirling1(m + 2, i + 1) * bhat_closed(n + l, k, 0);
    return acc;
}

UniPoly diag_sum_rhs(long long n, long long k) {
    const UniPoly x1 = UniPoly::variable() + UniPoly::constant(1);
    UniPoly acc;
    for (long long j = 0; j <= std::min(n, k); ++j)
        acc += rising(x1, j) * Rational(stirling2(k + 1, j + 1) * binomial(n + 1, j + 1));
    return acc * Rational(factorial(n));
}

UniPoly perm_weight_lhs(long long n) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<Rational> coeffs(n, Rational(0));
    do {
        coeffs[permutation_weight(pi)] += 1;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return UniPoly(std::move(coeffs));
}

BiPoly swap_vars(const BiPoly& p) {
    BiPoly out;
    for (const auto& [key, c] : p.terms_graded()) out.add_term(key.second, key.first, c);
    return out;
}

// ---- registry -----------------------------------------------------------

std::vector<Tuple> grid(const Bounds& b, bool use_n, bool use_k, bool use_m, bool use_j,
                        const std::function<bool(const Tuple&)>& in_domain = nullptr) {
    std::vector<Tuple> out;
    const auto span = [](const ParamRange& r, bool used) {
        return used ? r : ParamRange{0, 0};
    };
    const ParamRange rn = span(b.n, use_n), rk = span(b.k, use_k), rm = span(b.m, use_m),
                     rj = span(b.j, use_j);
    for (long long n = rn.lo; n <= rn.hi; ++n)
        for (long long k = rk.lo; k <= rk.hi; ++k)
            for (long long m = rm.lo; m <= rm.hi; ++m)
                for (long long j = rj.lo; j <= rj.hi; ++j) {
                    const Tuple t{n, k, m, j};
                    if (!in_domain || in_domain(t)) out.push_back(t);
                }
    return out;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> r;

        r.push_back({"OS_THEOREM", "nkm",
                     [](const Bounds& b) {
                         return grid(b, true, true, true, false,
                                     [](const Tuple& t) { return t.m > t.k && t.m >= 1; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const UniPoly lhs = os_theorem_lhs(t.n, t.k, t.m);
                         if (lhs.is_zero()) return std::nullopt;
                         return fail(t, "nkm", lhs.str(), "0");
                     }});

        r.push_back({"OS_ORIGINAL", "nkm",
                     [](const Bounds& b) {
                         return grid(b, true, true, true, false,
                                     [](const Tuple& t) { return t.k >= 1 && t.m >= t.k; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const Integer lhs = os_original_lhs(t.n, t.k, t.m);
                         if (lhs == 0) return std::nullopt;
                         return fail(t, "nkm", lhs.str(), "0");
                     }});

        r.push_back({"INNER_STIRLING", "nmj",
                     [](const Bounds& b) {
                         return grid(b, true, false, true, true,
                                     [](const Tuple& t) { return t.j < t.m; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer acc = 0;
                         for (long long l = 0; l <= t.m; ++l)
                             acc += sign(l) * stirling1(t.m + 1, l + 1) * stirling2(t.n + l + 1, t.j + 1);
                         if (acc == 0) return std::nullopt;
                         return fail(t, "nmj", acc.str(), "0");
                     }});

        r.push_back({"DIAG_SUM", "nk",
                     [](const Bounds& b) { return grid(b, true, true, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         UniPoly lhs;
                         for (long long l = 0; l <= t.n; ++l)
                             lhs += callan_poly_closed(l, t.k) * Rational(stirling1(t.n + 1, l + 1));
                         const UniPoly rhs = diag_sum_rhs(t.n, t.k);
                         if (lhs == rhs) return std::nullopt;
                         return fail(t, "nk", lhs.str(), rhs.str());
                     }});

        r.push_back({"LAH", "nj",
                     [](const Bounds& b) { return grid(b, true, false, false, true); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long l = 0; l <= t.n; ++l)
                             lhs += stirling1(t.n + 1, l + 1) * stirling2(l + 1, t.j + 1);
                         const Rational rhs = Rational(binomial(t.n, t.j) * factorial(t.n + 1), factorial(t.j + 1));
                         if (Rational(lhs) == rhs) return std::nullopt;
                         return fail(t, "nj", lhs.str(), rational_str(rhs));
                     }});

        r.push_back({"FAULHABER", "nk",
                     [](const Bounds& b) {
                         return grid(b, true, true, false, false,
                                     [](const Tuple& t) { return t.n >= 1; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long j = 0; j <= t.k; ++j)
                             lhs += factorial(j) * stirling2(t.k + 1, j + 1) * binomial(t.n, j + 1);
                         const Rational rhs = seki_polynomial(t.k).eval(Rational(t.n));
                         if (Rational(lhs) == rhs) return std::nullopt;
                         return fail(t, "nk", lhs.str(), rational_str(rhs));
                     }});

        r.push_back({"B_SEKI", "nk",
                     [](const Bounds& b) { return grid(b, true, true, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long l = 0; l <= t.n; ++l)
                             lhs += stirling1(t.n + 1, l + 1) * bhat_closed(l, t.k, 0);
                         const Rational rhs =
                             Rational(factorial(t.n)) * seki_polynomial(t.k).eval(Rational(t.n + 1));
                         if (Rational(lhs) == rhs) return std::nullopt;
                         return fail(t, "nk", lhs.str(), rational_str(rhs));
                     }});

        r.push_back({"DIAG_SUM_C", "nk",
                     [](const Bounds& b) { return grid(b, true, true, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long l = 0; l <= t.n; ++l)
                             lhs += stirling1(t.n + 1, l + 1) * bhat_closed(l, t.k, 1);
                         const Integer rhs = factorial(t.n) * int_pow(Integer(t.n + 1), t.k + 1);
                         if (lhs == rhs) return std::nullopt;
                         return fail(t, "nk", lhs.str(), rhs.str());
                     }});

        r.push_back({"GANDHI_DIAG", "nk",
                     [](const Bounds& b) { return grid(b, true, true, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long j = 0; j <= t.n; ++j) lhs += sign(j) * symmetrized(t.n - j, j, t.k);
                         if (t.n % 2 == 0) {
                             const Rational g = gandhi_polynomial(t.n).eval(Rational(t.k));
                             const Rational rhs = Rational(factorial(t.k)) * Rational(sign(t.n / 2)) * g;
                             if (Rational(lhs) == rhs) return std::nullopt;
                             return fail(t, "nk", lhs.str(), rational_str(rhs));
                         }
                         // Odd rows: the alternating sum vanishes and so does G_n.
                         if (lhs == 0 && gandhi_polynomial(t.n).is_zero()) return std::nullopt;
                         return fail(t, "nk", lhs.str(), "0");
                     }});

        r.push_back({"B_ALTERNATING", "n",
                     [](const Bounds& b) { return grid(b, true, false, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long j = 0; j <= t.n; ++j) lhs += sign(j) * bhat_closed(t.n - j, j, 0);
                         const Integer rhs = t.n == 0 ? 1 : 0;
                         if (lhs == rhs) return std::nullopt;
                         return fail(t, "n", lhs.str(), rhs.str());
                     }});

        r.push_back({"GENOCCHI_DIAG", "n",
                     [](const Bounds& b) { return grid(b, true, false, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long j = 0; j <= t.n; ++j) lhs += sign(j) * bhat_closed(t.n - j, j, 1);
                         const Integer rhs = -genocchi(t.n + 2);
                         if (lhs == rhs) return std::nullopt;
                         return fail(t, "n", lhs.str(), rhs.str());
                     }});

        r.push_back({"SYMMETRY", "nkm",
                     [](const Bounds& b) { return grid(b, true, true, true, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const Integer a = bhat_closed(t.n, t.k, t.m);
                         const Integer bb = bhat_closed(t.k, t.n, t.m);
                         if (a != bb) return fail(t, "nkm", a.str(), bb.str());
                         const UniPoly pa = callan_poly_closed(t.n, t.k);
                         const UniPoly pb = callan_poly_closed(t.k, t.n);
                         if (pa != pb) return fail(t, "nkm", pa.str(), pb.str());
                         return std::nullopt;
                     }});

        r.push_back({"PERM_WEIGHT", "n",
                     [](const Bounds& b) {
                         return grid(b, true, false, false, false,
                                     [](const Tuple& t) { return t.n >= 1; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const UniPoly lhs = perm_weight_lhs(t.n);
                         const UniPoly rhs =
                             rising(UniPoly::variable() + UniPoly::constant(1), t.n - 1);
                         if (lhs == rhs) return std::nullopt;
                         return fail(t, "n", lhs.str(), rhs.str());
                     }});

        r.push_back({"MODEL_TRIPLE", "nkm",
                     [](const Bounds& b) { return grid(b, true, true, true, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const Integer closed = bhat_closed(t.n, t.k, t.m);
                         const Integer rec = bhat_rec(t.n, t.k, t.m);
                         if (closed != rec) return fail(t, "nkm", rec.str(), closed.str());
                         if (t.n >= 1 && t.k >= 1) {
                             const Integer refined = bhat_refined_rec(t.n, t.k, t.m);
                             if (closed != refined) return fail(t, "nkm", refined.str(), closed.str());
                         }
                         const UniPoly cp = callan_poly_closed(t.n, t.k);
                         if (cp != callan_poly_rec(t.n, t.k))
                             return fail(t, "nkm", callan_poly_rec(t.n, t.k).str(), cp.str());
                         if (cp != tableau_poly_rec(t.n, t.k))
                             return fail(t, "nkm", tableau_poly_rec(t.n, t.k).str(), cp.str());
                         // Enumeration legs only at desk scale.
                         if (std::max(t.n, t.k) <= 4 && t.m <= 3) {
                             long long count = 0;
                             enum_barred(static_cast<int>(t.n), static_cast<int>(t.k),
                                         static_cast<int>(t.m),
                                         [&](const BarredCallanSequence&) { ++count; });
                             if (Integer(count) != closed)
                                 return fail(t, "nkm", Integer(count).str(), closed.str());
                         }
                         if (std::max(t.n, t.k) <= 4 && t.m == 0) {
                             if (callan_poly_enum(static_cast<int>(t.n), static_cast<int>(t.k)) != cp)
                                 return fail(t, "nkm", "enum weight polynomial", cp.str());
                             if (tableau_poly(static_cast<int>(t.n), static_cast<int>(t.k)) != cp)
                                 return fail(t, "nkm", "tableau weight polynomial", cp.str());
                         }
                         return std::nullopt;
                     }});

        r.push_back({"NEG_INDEX", "k",
                     [](const Bounds& b) { return grid(b, false, true, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const UniPoly lhs = negative_index_callan(t.k);
                         const UniPoly rhs =
                             (-seki_polynomial(t.k).subst_scaled_x(Rational(-1))).divided_by_x();
                         if (lhs == rhs) return std::nullopt;
                         return fail(t, "k", lhs.str(), rhs.str());
                     }});

        r.push_back({"LAST_LEM", "kj",
                     [](const Bounds& b) {
                         return grid(b, false, true, false, true,
                                     [](const Tuple& t) { return t.j <= t.k; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         Integer lhs = 0;
                         for (long long l = t.j; l <= t.k; ++l)
                             lhs += sign(l + t.j) * stirling1(t.k + 2, l + 2) * stirling2(l + 1, t.j + 1);
                         const Rational rhs = Rational(factorial(t.k + 1), factorial(t.j + 1));
                         if (Rational(lhs) == rhs) return std::nullopt;
                         return fail(t, "kj", lhs.str(), rational_str(rhs));
                     }});

        r.push_back({"CONJ_MARGINAL", "nk",
                     [](const Bounds& b) { return grid(b, true, true, false, false); },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const BiPoly bi = conjecture_rec(t.n, t.k);
                         const UniPoly expect = callan_poly_closed(t.n, t.k);
                         const UniPoly at_y1 = bi.eval_y(1);
                         const UniPoly at_x1 = bi.eval_x(1);
                         if (at_y1 == expect && at_x1 == expect) return std::nullopt;
                         return fail(t, "nk", at_y1.str() + " / " + at_x1.str(), expect.str());
                     }});

        r.push_back({"T_SYMMETRY", "nk",
                     [](const Bounds& b) {
                         return grid(b, true, true, false, false,
                                     [](const Tuple& t) { return t.n * t.k <= 16; });
                     },
                     [](const Tuple& t) -> std::optional<IdentityFailure> {
                         const BiPoly a = tableau_poly2(static_cast<int>(t.n), static_cast<int>(t.k));
                         const BiPoly bb =
                             swap_vars(tableau_poly2(static_cast<int>(t.k), static_cast<int>(t.n)));
                         if (a == bb) return std::nullopt;
                         return fail(t, "nk", a.str(), bb.str());
                     }});

        return r;
    }();
    return entries;
}

const Entry& find_entry(const std::string& name) {
    for (const Entry& e : registry())
        if (e.name == name) return e;
    throw UnknownIdentityError("unknown identity: " + name);
}

bool any_used_range_empty(const Entry& e, const Bounds& b) {
    for (const char p : e.used) {
        const ParamRange& r = p == 'n' ? b.n : p == 'k' ? b.k : p == 'm' ? b.m : b.j;
        if (r.empty()) return true;
    }
    return false;
}

IdentityReport run_entry(const Entry& entry, const Bounds& bounds, int jobs) {
    const auto started = std::chrono::steady_clock::now();
    IdentityReport report;
    report.name = entry.name;
    report.ranges = ranges_str(bounds, entry.used);

    const std::vector<Tuple> cases = entry.cases(bounds);
    // tables grow on demand anyway; prewarming just avoids write contention
    prewarm_stirling(std::min<long long>(bounds.n.hi + bounds.k.hi + bounds.m.hi + bounds.j.hi + 4, 512));

    std::vector<std::optional<IdentityFailure>> results(cases.size());
    parallel_for(cases.size(), jobs, [&](std::size_t i) { results[i] = entry.check(cases[i]); });

    report.cases_checked = static_cast<long long>(cases.size());
    for (auto& res : results)
        if (res) report.failures.push_back(std::move(*res));
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace

std::string IdentityReport::json() const {
    using ojson = nlohmann::ordered_json;
    ojson out;
    out["name"] = name;
    out["ranges"] = ranges;
    out["cases_checked"] = cases_checked;
    out["failures"] = ojson::array();
    for (const auto& f : failures)
        out["failures"].push_back(ojson{{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    out["findings"] = ojson::array();
    for (const auto& f : findings) out["findings"].push_back(ojson{{"params", f.params}, {"note", f.note}});
    out["skipped"] = ojson::array();
    for (const auto& s : skipped) out["skipped"].push_back(ojson{{"params", s.params}, {"note", s.note}});
    out["status"] = pass() ? "pass" : "fail";
    return out.dump();
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Entry& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

IdentityReport run_identity(const std::string& name, const SweepRanges& ranges) {
    const Entry& entry = find_entry(name);
    const Bounds bounds = resolve(ranges);
    if (!any_used_range_empty(entry, bounds) && entry.cases(bounds).empty())
        throw RangeDomainError(name + ": requested ranges violate the identity's domain constraints");
    return run_entry(entry, bounds, ranges.jobs);
}

std::vector<IdentityReport> run_all(const SweepRanges& ranges) {
    const Bounds bounds = resolve(ranges);
    std::vector<IdentityReport> out;
    for (const Entry& e : registry()) out.push_back(run_entry(e, bounds, ranges.jobs));
    return out;
}

IdentityReport conjecture_sweep(long long max_n, long long max_k, long long cell_cap, int jobs) {
    const auto started = std::chrono::steady_clock::now();
    IdentityReport report;
    report.name = "CONJECTURE";
    {
        std::ostringstream r;
        r << "n=0.." << max_n << " k=0.." << max_k;
        report.ranges = r.str();
    }

    struct CellResult {
        bool skipped = false;
        bool equal = false;
        std::string lhs, rhs;
    };
    std::vector<Tuple> cells;
    for (long long n = 0; n <= max_n; ++n)
        for (long long k = 0; k <= max_k; ++k) cells.push_back(Tuple{n, k, 0, 0});

    std::vector<CellResult> results(cells.size());
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const Tuple& t = cells[i];
        CellResult& res = results[i];
        if (t.n * t.k > cell_cap) {
            res.skipped = true;
            return;
        }
        const BiPoly conj = conjecture_rec(t.n, t.k);
        const BiPoly enumerated = tableau_poly2(static_cast<int>(t.n), static_cast<int>(t.k));
        res.equal = conj == enumerated;
        if (!res.equal) {
            res.lhs = conj.str();
            res.rhs = enumerated.str();
        }
    });

    const auto is_hard = [](const Tuple& t) {
        return (t.n == 2 && t.k == 2) || (t.n == 3 && t.k == 2) || (t.n == 2 && t.k == 3);
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Tuple& t = cells[i];
        const CellResult& res = results[i];
        const std::string params = params_str(t, "nk");
        if (res.skipped) {
            report.skipped.push_back({params, "cell exceeds enumeration cap n*k <= " + std::to_string(cell_cap)});
            continue;
        }
        ++report.cases_checked;
        if (res.equal) continue;
        if (is_hard(t)) {
            report.failures.push_back({params, res.lhs, res.rhs});
        } else {
            report.findings.push_back({params, "recurrence != enumeration: " + res.lhs + " vs " + res.rhs});
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace polyb
