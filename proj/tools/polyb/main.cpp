// polyb: exact computations around symmetrized poly-Bernoulli numbers,
// Callan/tableau polynomials, model enumeration and identity verification.

#include "polyb/callan.hpp"
#include "polyb/identities.hpp"
#include "polyb/numbers.hpp"
#include "polyb/oeis.hpp"
#include "polyb/permutation.hpp"
#include "polyb/polybern.hpp"
#include "polyb/recurrences.hpp"
#include "polyb/special.hpp"
#include "polyb/tableau.hpp"
#include "polyb/unipoly.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace polyb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

constexpr long long kTableauCellCap = 16;  // n*k for tableau enumeration
constexpr long long kCallanSizeCap = 10;   // n+k for Callan/barred listings

struct Options {
    std::string format = "text";
    std::string method = "closed";
    int jobs = 1;
    std::string cache_dir;
    bool unsafe_cap = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- cache ---------------------------------------------------------------

fs::path resolve_cache_dir(const Options& opt) {
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    if (const char* env = std::getenv("POLYB_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "polyb";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "polyb";
    return fs::temp_directory_path() / "polyb";
}

fs::path cache_file(const Options& opt) { return resolve_cache_dir(opt) / "cache.json"; }

// The cache is an optimization only: a corrupt or missing file is ignored.
std::size_t load_cache(const Options& opt) {
    std::ifstream in(cache_file(opt));
    if (!in) return 0;
    std::map<BhatKey, Integer> entries;
    try {
        const json doc = json::parse(in);
        for (const auto& [key, value] : doc.items()) {
            BhatKey k{};
            char slash1 = 0, slash2 = 0, slash3 = 0;
            std::istringstream ks(key);
            std::string head;
            std::getline(ks, head, '/');
            if (head != "bhat") continue;
            if (!(ks >> k[0] >> slash1 >> k[1] >> slash2 >> k[2]) || slash1 != '/' || slash2 != '/')
                continue;
            (void)slash3;
            entries.emplace(k, Integer(value.get<std::string>()));
        }
    } catch (const std::exception&) {
        return 0;
    }
    seed_bhat_memo(entries);
    return entries.size();
}

void save_cache(const Options& opt, std::size_t loaded) {
    const auto entries = bhat_memo_snapshot();
    if (entries.size() <= loaded) return;
    json doc = json::object();
    for (const auto& [key, value] : entries) {
        std::ostringstream name;
        name << "bhat/" << key[0] << "/" << key[1] << "/" << key[2];
        doc[name.str()] = value.str();
    }
    std::error_code ec;
    fs::create_directories(resolve_cache_dir(opt), ec);
    const fs::path target = cache_file(opt);
    const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << doc.dump(2) << "\n";
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

// ---- rendering -------------------------------------------------------------

json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    json out = json::object();
    for (const auto& [k, v] : params) out[k] = v;
    return out;
}

void print_value(const Options& opt, const std::string& target,
                 const std::vector<std::pair<std::string, std::string>>& params, const std::string& value) {
    if (opt.format == "json") {
        json out;
        out["target"] = target;
        out["params"] = params_json(params);
        out["value"] = value;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

void print_unipoly(const Options& opt, const std::string& target,
                   const std::vector<std::pair<std::string, std::string>>& params, const UniPoly& p,
                   const std::string& var) {
    if (opt.format == "json") {
        json out;
        out["target"] = target;
        out["params"] = params_json(params);
        out["vars"] = json::array({var});
        json terms = json::array();
        for (int d = p.degree(); d >= 0; --d) {
            if (p.coeff(d) == 0) continue;
            terms.push_back(json{{"exps", json::array({d})}, {"coeff", rational_str(p.coeff(d))}});
        }
        out["terms"] = terms;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << p.str(var) << "\n";
    }
}

void print_bipoly(const Options& opt, const std::string& target,
                  const std::vector<std::pair<std::string, std::string>>& params, const BiPoly& p) {
    if (opt.format == "json") {
        json out;
        out["target"] = target;
        out["params"] = params_json(params);
        out["vars"] = json::array({"x", "y"});
        json terms = json::array();
        for (const auto& [key, c] : p.terms_graded())
            terms.push_back(json{{"exps", json::array({key.first, key.second})}, {"coeff", rational_str(c)}});
        out["terms"] = terms;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
}

json report_to_json(const IdentityReport& r) { return json::parse(r.json()); }

void print_report_text(const IdentityReport& r) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases_checked
              << " ranges=[" << r.ranges << "]";
    if (!r.findings.empty()) std::cout << " findings=" << r.findings.size();
    if (!r.skipped.empty()) std::cout << " skipped=" << r.skipped.size();
    std::cout << "\n";
    for (const auto& f : r.failures)
        std::cout << "  FAILED at " << f.params << ": " << f.lhs << " != " << f.rhs << "\n";
    for (const auto& f : r.findings) std::cout << "  finding at " << f.params << ": " << f.note << "\n";
    for (const auto& s : r.skipped) std::cout << "  skipped " << s.params << ": " << s.note << "\n";
}

// ---- caps ------------------------------------------------------------------

void check_tableau_cap(const Options& opt, long long n, long long k) {
    if (!opt.unsafe_cap && n * k > kTableauCellCap)
        throw UsageError("tableau enumeration cap n*k <= " + std::to_string(kTableauCellCap) +
                         " exceeded (n*k = " + std::to_string(n * k) + "); pass --unsafe-cap to override");
}

void check_callan_cap(const Options& opt, long long n, long long k) {
    if (!opt.unsafe_cap && n + k > kCallanSizeCap)
        throw UsageError("Callan enumeration cap n+k <= " + std::to_string(kCallanSizeCap) +
                         " exceeded (n+k = " + std::to_string(n + k) + "); pass --unsafe-cap to override");
}

// ---- compute ---------------------------------------------------------------

Integer bhat_by_method(const Options& opt, long long n, long long k, long long m) {
    if (opt.method == "closed") return bhat_closed(n, k, m);
    if (opt.method == "recurrence") return bhat_rec(n, k, m);
    if (opt.method == "enumeration") {
        check_callan_cap(opt, n, k);
        long long count = 0;
        enum_barred(static_cast<int>(n), static_cast<int>(k), static_cast<int>(m),
                    [&](const BarredCallanSequence&) { ++count; });
        return count;
    }
    throw UsageError("unknown method '" + opt.method + "' for bhat");
}

UniPoly cpoly_by_method(const Options& opt, long long n, long long k) {
    if (opt.method == "closed") return callan_poly_closed(n, k);
    if (opt.method == "recurrence") return callan_poly_rec(n, k);
    if (opt.method == "enumeration") {
        check_callan_cap(opt, n, k);
        return callan_poly_enum(static_cast<int>(n), static_cast<int>(k));
    }
    throw UsageError("unknown method '" + opt.method + "' for cpoly");
}

UniPoly tpoly_by_method(const Options& opt, long long n, long long k) {
    if (opt.method == "closed") return callan_poly_closed(n, k);
    if (opt.method == "recurrence") return tableau_poly_rec(n, k);
    if (opt.method == "enumeration") {
        check_tableau_cap(opt, n, k);
        return tableau_poly(static_cast<int>(n), static_cast<int>(k));
    }
    throw UsageError("unknown method '" + opt.method + "' for tpoly");
}

struct ComputeArgs {
    std::string target;
    long long n = 0, k = 0, m = 0;
    std::string x = "0";
    bool has_n = false, has_k = false;
};

int cmd_compute(const Options& opt, const ComputeArgs& args) {
    const auto need = [&](bool present, const char* flag) {
        if (!present) throw UsageError(std::string("compute ") + args.target + " requires " + flag);
    };
    std::vector<std::pair<std::string, std::string>> params;
    const auto note = [&](const std::string& key, long long v) { params.emplace_back(key, std::to_string(v)); };

    if (args.target == "bhat") {
        need(args.has_n, "--n");
        need(args.has_k, "--k");
        note("n", args.n), note("k", args.k), note("m", args.m);
        print_value(opt, args.target, params, bhat_by_method(opt, args.n, args.k, args.m).str());
    } else if (args.target == "cpoly") {
        need(args.has_n, "--n");
        need(args.has_k, "--k");
        note("n", args.n), note("k", args.k);
        print_unipoly(opt, args.target, params, cpoly_by_method(opt, args.n, args.k), "x");
    } else if (args.target == "tpoly") {
        need(args.has_n, "--n");
        need(args.has_k, "--k");
        note("n", args.n), note("k", args.k);
        print_unipoly(opt, args.target, params, tpoly_by_method(opt, args.n, args.k), "x");
    } else if (args.target == "tpoly2") {
        need(args.has_n, "--n");
        need(args.has_k, "--k");
        if (opt.method != "closed" && opt.method != "enumeration")
            throw UsageError("tpoly2 supports only the enumeration method");
        check_tableau_cap(opt, args.n, args.k);
        note("n", args.n), note("k", args.k);
        print_bipoly(opt, args.target, params, tableau_poly2(static_cast<int>(args.n), static_cast<int>(args.k)));
    } else if (args.target == "symmetrized") {
        need(args.has_n, "--n");
        need(args.has_k, "--k");
        note("n", args.n), note("k", args.k), note("m", args.m);
        print_value(opt, args.target, params, symmetrized(args.n, args.k, args.m).str());
    } else if (args.target == "pb") {
        need(args.has_n, "--n");
        need(args.has_k, "--k");
        note("n", args.n), note("k", args.k);
        params.emplace_back("x", args.x);
        print_value(opt, args.target, params, rational_str(pb_poly_value(args.n, args.k, parse_rational(args.x))));
    } else if (args.target == "gandhi") {
        need(args.has_n, "--n");
        note("n", args.n);
        print_unipoly(opt, args.target, params, gandhi_polynomial(args.n), "z");
    } else if (args.target == "genocchi") {
        need(args.has_n, "--n");
        note("n", args.n);
        print_value(opt, args.target, params, genocchi(args.n).str());
    } else if (args.target == "seki") {
        need(args.has_k, "--k");
        note("k", args.k);
        print_unipoly(opt, args.target, params, seki_polynomial(args.k), "x");
    } else if (args.target == "negindex") {
        need(args.has_k, "--k");
        note("k", args.k);
        print_unipoly(opt, args.target, params, negative_index_callan(args.k), "x");
    } else {
        throw UsageError("unknown compute target '" + args.target + "'");
    }
    return kExitOk;
}

// ---- enumerate ---------------------------------------------------------------

json sequence_json(const BarredCallanSequence& s, bool with_bars) {
    json pairs = json::array();
    for (const auto& p : s.base.ordinary) pairs.push_back(json{{"blue", p.blue}, {"red", p.red}});
    json out;
    out["pairs"] = pairs;
    out["extra_blue"] = s.base.extra_blue;
    out["extra_red"] = s.base.extra_red;
    if (with_bars) out["bars"] = s.bars;
    return out;
}

int cmd_enumerate(const Options& opt, const std::string& model, long long n, long long k, long long m,
                  bool list) {
    if (opt.format == "csv") throw UsageError("enumerate does not support csv output");
    long long count = 0;
    if (model == "callan" || model == "barred") {
        if (model == "callan") m = 0;
        check_callan_cap(opt, n, k);
        enum_barred(static_cast<int>(n), static_cast<int>(k), static_cast<int>(m),
                    [&](const BarredCallanSequence& s) {
                        ++count;
                        if (!list) return;
                        if (opt.format == "json")
                            std::cout << sequence_json(s, model == "barred").dump() << "\n";
                        else
                            std::cout << (model == "barred" ? s.text() : s.base.text()) << "\n";
                    });
    } else if (model == "tableaux") {
        check_tableau_cap(opt, n, k);
        enum_tableaux(static_cast<int>(n), static_cast<int>(k), [&](const AltTableau& t) {
            ++count;
            if (!list) return;
            const auto rows = t.rows();
            if (opt.format == "json") {
                std::cout << json{{"rows", rows}}.dump() << "\n";
            } else {
                std::string line;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i) line += "/";
                    line += rows[i];
                }
                std::cout << (rows.empty() ? "(empty)" : line) << "\n";
            }
        });
    } else {
        throw UsageError("unknown model '" + model + "'");
    }
    if (!list) {
        if (opt.format == "json")
            std::cout << json{{"model", model}, {"n", n}, {"k", k}, {"m", m}, {"count", count}}.dump() << "\n";
        else
            std::cout << count << "\n";
    }
    return kExitOk;
}

// ---- verify / conjecture ----------------------------------------------------

int cmd_verify(const Options& opt, const std::string& name, const SweepRanges& ranges) {
    std::vector<IdentityReport> reports;
    if (name == "all") {
        reports = run_all(ranges);
    } else {
        reports.push_back(run_identity(name, ranges));
    }
    bool ok = true;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            ok = ok && r.pass();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            print_report_text(r);
            ok = ok && r.pass();
        }
    }
    return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_conjecture(const Options& opt, long long max_n, long long max_k, long long cell_cap) {
    const IdentityReport report = conjecture_sweep(max_n, max_k, cell_cap, opt.jobs);
    if (opt.format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        print_report_text(report);
        std::cout << "summary: checked=" << report.cases_checked << " unequal=" << report.findings.size()
                  << " skipped=" << report.skipped.size()
                  << " asserted_cells=" << (report.pass() ? "ok" : "FAILED") << "\n";
    }
    return report.pass() ? kExitOk : kExitVerifyFailure;
}

// ---- table -------------------------------------------------------------------

int cmd_table(const Options& opt, const std::string& target, long long max_n, long long max_k, long long m) {
    std::vector<std::vector<std::string>> cells(max_n + 1, std::vector<std::string>(max_k + 1));
    for (long long n = 0; n <= max_n; ++n) {
        for (long long k = 0; k <= max_k; ++k) {
            if (target == "bhat")
                cells[n][k] = bhat_by_method(opt, n, k, m).str();
            else if (target == "symmetrized")
                cells[n][k] = symmetrized(n, k, m).str();
            else if (target == "cpoly")
                cells[n][k] = callan_poly_closed(n, k).str();
            else if (target == "tpoly")
                cells[n][k] = tableau_poly_rec(n, k).str();
            else
                throw UsageError("unknown table target '" + target + "'");
        }
    }
    if (opt.format == "json") {
        json out;
        out["target"] = target;
        out["m"] = m;
        out["rows"] = cells;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    // header: n/k,0,1,...
    std::cout << "n/k";
    for (long long k = 0; k <= max_k; ++k) std::cout << "," << k;
    std::cout << "\n";
    for (long long n = 0; n <= max_n; ++n) {
        std::cout << n;
        for (long long k = 0; k <= max_k; ++k) std::cout << "," << cells[n][k];
        std::cout << "\n";
    }
    return kExitOk;
}

// ---- oeis ---------------------------------------------------------------------

int cmd_oeis(const Options& opt, const std::string& seq, long long depth, bool fetch,
             const std::string& data_dir) {
    const fs::path dir = data_dir.empty() ? default_data_dir() : fs::path(data_dir);
    const auto mappings = load_manifest(dir / "manifest.json");
    const auto it = std::find_if(mappings.begin(), mappings.end(),
                                 [&](const SequenceMapping& m) { return m.id == seq; });
    if (it == mappings.end()) throw UsageError("no fixture mapping for sequence '" + seq + "'");
    BFile bfile;
    if (fetch) {
        bfile = parse_bfile(fetch_bfile_text(seq), seq);
    } else {
        bfile = load_bfile(it->path, seq);
    }
    const IdentityReport report = check_sequence(*it, bfile, depth);
    if (opt.format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        print_report_text(report);
    return report.pass() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact symmetrized poly-Bernoulli toolkit"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", opt.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", opt.cache_dir, "Memo cache directory");
    app.add_flag("--unsafe-cap", opt.unsafe_cap, "Override enumeration caps");
    app.fallthrough();

    ComputeArgs cargs;
    auto* compute = app.add_subcommand("compute", "Compute one value or polynomial");
    compute->add_option("target", cargs.target, "bhat|cpoly|tpoly|tpoly2|symmetrized|pb|gandhi|genocchi|seki|negindex")
        ->required();
    auto* copt_n = compute->add_option("--n", cargs.n, "Lower index n");
    auto* copt_k = compute->add_option("--k", cargs.k, "Upper index k");
    compute->add_option("--m", cargs.m, "Bar count m");
    compute->add_option("--x", cargs.x, "Rational argument, e.g. 3 or -1/2");
    compute->add_option("--method", opt.method, "closed|recurrence|enumeration")
        ->check(CLI::IsMember({"closed", "recurrence", "enumeration"}));

    std::string model;
    long long en = 0, ek = 0, em = 0;
    bool want_list = false, want_count = false;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate a combinatorial model");
    enumerate->add_option("model", model, "callan|barred|tableaux")->required();
    enumerate->add_option("--n", en)->required();
    enumerate->add_option("--k", ek)->required();
    enumerate->add_option("--m", em);
    enumerate->add_flag("--list", want_list, "Stream canonical-order serializations");
    enumerate->add_flag("--count", want_count, "Print the exact count (default)");

    std::string vname;
    long long max_n = 6, max_k = 6, max_m = 4, max_j = 6;
    long long min_n = 0, min_k = 0, min_m = 0, min_j = 0;
    auto* verify = app.add_subcommand("verify", "Verify identities over exact sweeps");
    verify->add_option("name", vname, "Identity name or 'all'")->required();
    verify->add_option("--max-n", max_n);
    verify->add_option("--max-k", max_k);
    verify->add_option("--max-m", max_m);
    verify->add_option("--max-j", max_j);
    verify->add_option("--min-n", min_n);
    verify->add_option("--min-k", min_k);
    verify->add_option("--min-m", min_m);
    verify->add_option("--min-j", min_j);

    long long conj_n = 3, conj_k = 3, cell_cap = kTableauCellCap;
    auto* conjecture = app.add_subcommand("conjecture", "Sweep the two-variable conjecture");
    conjecture->add_option("--max-n", conj_n);
    conjecture->add_option("--max-k", conj_k);
    conjecture->add_option("--cell-cap", cell_cap, "Skip cells with n*k beyond this");

    std::string ttarget;
    long long tn = 3, tk = 3, tm = 0;
    auto* table = app.add_subcommand("table", "Emit an (n,k) matrix");
    table->add_option("target", ttarget, "bhat|symmetrized|cpoly|tpoly")->required();
    table->add_option("--max-n", tn);
    table->add_option("--max-k", tk);
    table->add_option("--m", tm);

    std::string seq, data_dir;
    long long depth = 10;
    bool fetch = false;
    auto* oeis = app.add_subcommand("oeis", "Check a computed sequence against an OEIS b-file");
    oeis->add_option("--seq", seq, "Sequence id, e.g. A001469")->required();
    oeis->add_option("--depth", depth);
    oeis->add_flag("--fetch", fetch, "Fetch the b-file from oeis.org instead of the vendored fixture");
    oeis->add_option("--data-dir", data_dir, "Fixture directory (default: POLYB_DATA_DIR or built-in)");

    std::string cache_action = "info";
    auto* cache = app.add_subcommand("cache", "Inspect or clear the memo cache");
    cache->add_option("action", cache_action, "info|path|clear")
        ->check(CLI::IsMember({"info", "path", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            cargs.has_n = copt_n->count() > 0;
            cargs.has_k = copt_k->count() > 0;
            const std::size_t loaded = load_cache(opt);
            const int rc = cmd_compute(opt, cargs);
            save_cache(opt, loaded);
            return rc;
        }
        if (enumerate->parsed()) {
            if (want_list && want_count) throw UsageError("choose one of --list / --count");
            return cmd_enumerate(opt, model, en, ek, em, want_list);
        }
        if (verify->parsed()) {
            SweepRanges ranges;
            ranges.n = ParamRange{min_n, max_n};
            ranges.k = ParamRange{min_k, max_k};
            ranges.m = ParamRange{min_m, max_m};
            ranges.j = ParamRange{min_j, max_j};
            ranges.jobs = opt.jobs;
            return cmd_verify(opt, vname, ranges);
        }
        if (conjecture->parsed()) return cmd_conjecture(opt, conj_n, conj_k, cell_cap);
        if (table->parsed()) {
            const std::size_t loaded = load_cache(opt);
            const int rc = cmd_table(opt, ttarget, tn, tk, tm);
            save_cache(opt, loaded);
            return rc;
        }
        if (oeis->parsed()) return cmd_oeis(opt, seq, depth, fetch, data_dir);
        if (cache->parsed()) {
            const fs::path file = cache_file(opt);
            if (cache_action == "path") {
                std::cout << file.string() << "\n";
            } else if (cache_action == "clear") {
                std::error_code ec;
                fs::remove(file, ec);
                std::cout << "cleared " << file.string() << "\n";
            } else {
                const std::size_t loaded = load_cache(opt);
                std::cout << file.string() << ": " << loaded << " entries\n";
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownIdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
