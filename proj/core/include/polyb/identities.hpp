#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyb {

// Inclusive parameter range; hi < lo denotes the empty range.
struct ParamRange {
    long long lo = 0;
    long long hi = -1;
    bool empty() const { return hi < lo; }
};

// Sweep bounds for identity verification. Unset parameters fall back to the
// desk defaults (n, k up to 6, m up to 4, j up to 6).
struct SweepRanges {
    std::optional<ParamRange> n;
    std::optional<ParamRange> k;
    std::optional<ParamRange> m;
    std::optional<ParamRange> j;
    int jobs = 1;
};

struct IdentityFailure {
    std::string params;
    std::string lhs;
    std::string rhs;
};

struct CellNote {
    std::string params;
    std::string note;
};

struct IdentityReport {
    std::string name;
    std::string ranges;
    long long cases_checked = 0;
    std::vector<IdentityFailure> failures;
    std::vector<CellNote> findings;  // informational mismatches, never failures
    std::vector<CellNote> skipped;   // cells skipped by an enumeration cap
    double elapsed_seconds = 0.0;

    bool pass() const { return failures.empty(); }

    // Stable machine-readable form; excludes elapsed so reruns are
    // byte-identical.
    std::string json() const;
};

class UnknownIdentityError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested ranges are non-empty but contain no tuple of the identity's
// declared domain (for example OS_THEOREM pinned to m = k).
class RangeDomainError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& identity_names();

// Evaluate both sides exactly for every in-domain tuple within `ranges`.
// Throws UnknownIdentityError / RangeDomainError; never stops early.
IdentityReport run_identity(const std::string& name, const SweepRanges& ranges);

// Every registry entry on the intersection of `ranges` with its domain.
// Out-of-domain requests clip to nothing instead of erroring.
std::vector<IdentityReport> run_all(const SweepRanges& ranges);

// Compare the conjectured two-variable recurrence against tableau
// enumeration on every cell n <= max_n, k <= max_k. The cells (2,2), (3,2),
// (2,3) are hard assertions (mismatches become failures); all other cells
// are reported as findings. Cells with n*k > cell_cap are marked skipped.
IdentityReport conjecture_sweep(long long max_n, long long max_k, long long cell_cap = 16, int jobs = 1);

}  // namespace polyb
