#include "polyb/oeis.hpp"

#include "polyb/polybern.hpp"
#include "polyb/special.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef POLYB_HAS_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

#ifndef POLYB_DEFAULT_DATA_DIR
#define POLYB_DEFAULT_DATA_DIR "data/oeis"
#endif

namespace polyb {
namespace {

using json = nlohmann::json;

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    return std::all_of(tok.begin() + i, tok.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer computed_value(const std::string& target, long long n, long long k) {
    if (target == "bhat_m0") return bhat_closed(n, k, 0);
    if (target == "bhat_m1") return symmetrized(n, k, 1);
    throw std::invalid_argument("check_sequence: unknown target '" + target + "'");
}

}  // namespace

const Integer& BFile::at_index(long long index) const {
    for (const auto& e : entries)
        if (e.index == index) return e.value;
    throw std::out_of_range(id + ": no entry with index " + std::to_string(index));
}

const Integer& BFile::at_position(std::size_t pos) const {
    if (pos >= entries.size())
        throw std::out_of_range(id + ": depth beyond fixture length (need position " +
                                std::to_string(pos) + ", have " + std::to_string(entries.size()) + ")");
    return entries[pos].value;
}

BFile parse_bfile(std::string_view text, std::string id) {
    BFile out;
    out.id = std::move(id);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;       // blank
        if (first[0] == '#') continue;      // comment
        std::string second;
        if (!(ls >> second) || !is_integer_token(first) || !is_integer_token(second))
            throw BFileParseError("expected '<index> <value>', got '" + line + "'", lineno);
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            throw BFileParseError("trailing content '" + extra + "'", lineno);
        BFileEntry entry{std::stoll(first), Integer(second)};
        if (!out.entries.empty() && entry.index <= out.entries.back().index)
            throw BFileParseError("indices not strictly increasing", lineno);
        out.entries.push_back(std::move(entry));
    }
    return out;
}

std::string render_bfile(const BFile& f) {
    std::ostringstream out;
    for (const auto& e : f.entries) out << e.index << " " << e.value.str() << "\n";
    return out.str();
}

BFile load_bfile(const std::filesystem::path& path, const std::string& id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str(), id);
}

std::vector<SequenceMapping> load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest " + manifest_path.string());
    json doc = json::parse(in);
    std::vector<SequenceMapping> out;
    for (const auto& f : doc.at("fixtures")) {
        SequenceMapping m;
        m.id = f.at("id").get<std::string>();
        m.path = (manifest_path.parent_path() / f.at("path").get<std::string>()).string();
        const std::string mode = f.at("mode").get<std::string>();
        if (mode == "exact")
            m.mode = CompareMode::Exact;
        else if (mode == "antidiagonal-multiset")
            m.mode = CompareMode::AntidiagonalMultiset;
        else
            throw std::runtime_error("manifest: unknown mode '" + mode + "'");
        m.target = f.at("target").get<std::string>();
        m.description = f.value("mapping", "");
        out.push_back(std::move(m));
    }
    return out;
}

IdentityReport check_sequence(const SequenceMapping& mapping, const BFile& bfile, long long depth) {
    IdentityReport report;
    report.name = "OEIS_" + mapping.id;
    report.ranges = "depth=0.." + std::to_string(depth);
    if (depth < 0) return report;

    if (mapping.mode == CompareMode::Exact) {
        // A001469 keeps only the even-index values: a(i) = -G(2i). The values
        // G(0) = 0, G(1) = 1 and G(odd >= 3) = 0 are part of the mapping.
        for (long long n = 0; n <= depth; ++n) {
            Integer expected;
            if (n == 0)
                expected = 0;
            else if (n == 1)
                expected = 1;
            else if (n % 2 == 1)
                expected = 0;
            else
                expected = -bfile.at_index(n / 2);
            const Integer got = genocchi(n);
            ++report.cases_checked;
            if (got != expected)
                report.failures.push_back({"n=" + std::to_string(n), got.str(), expected.str()});
        }
        return report;
    }

    // Antidiagonal d occupies positions d(d+1)/2 .. d(d+1)/2+d from the first
    // entry; both arrays are symmetric, so diagonals compare as multisets.
    for (long long d = 0; d <= depth; ++d) {
        std::vector<Integer> fixture, computed;
        const std::size_t base = static_cast<std::size_t>(d * (d + 1) / 2);
        for (long long s = 0; s <= d; ++s) {
            fixture.push_back(bfile.at_position(base + s));
            computed.push_back(computed_value(mapping.target, s, d - s));
        }
        std::sort(fixture.begin(), fixture.end());
        std::sort(computed.begin(), computed.end());
        ++report.cases_checked;
        if (fixture != computed) {
            std::ostringstream lhs, rhs;
            for (const auto& v : computed) lhs << v.str() << " ";
            for (const auto& v : fixture) rhs << v.str() << " ";
            report.failures.push_back({"d=" + std::to_string(d), lhs.str(), rhs.str()});
        }
    }
    return report;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("POLYB_DATA_DIR"); env && *env) return env;
    return POLYB_DEFAULT_DATA_DIR;
}

std::string fetch_bfile_text(const std::string& id) {
#ifdef POLYB_HAS_OPENSSL
    if (id.size() != 7 || id[0] != 'A')
        throw std::invalid_argument("fetch_bfile_text: expected id like A001469");
    httplib::SSLClient client("oeis.org");
    client.set_follow_location(true);
    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = client.Get(path.c_str());
    if (!res || res->status != 200)
        throw std::runtime_error("fetch failed for " + id +
                                 (res ? " (status " + std::to_string(res->status) + ")" : " (no response)"));
    return res->body;
#else
    throw std::runtime_error("fetch_bfile_text: built without TLS support");
#endif
}

}  // namespace polyb
