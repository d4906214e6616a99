#pragma once

#include "polyb/identities.hpp"
#include "polyb/numbers.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyb {

struct BFileEntry {
    long long index = 0;
    Integer value;
};

// Parsed OEIS b-file: "<index> <value>" per line, '#' comments and blank
// lines ignored, indices strictly increasing.
struct BFile {
    std::string id;
    std::vector<BFileEntry> entries;

    // Value at an absolute b-file index; throws std::out_of_range if absent.
    const Integer& at_index(long long index) const;
    // Value by position from the first entry; throws std::out_of_range.
    const Integer& at_position(std::size_t pos) const;
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

BFile parse_bfile(std::string_view text, std::string id = {});
std::string render_bfile(const BFile& f);
BFile load_bfile(const std::filesystem::path& path, const std::string& id);

enum class CompareMode { Exact, AntidiagonalMultiset };

// How a vendored b-file lines up against a computed sequence. `target`
// selects the computed side: "genocchi", "bhat_m0" (values at m=0 read by
// antidiagonals) or "bhat_m1" (values at m=1).
struct SequenceMapping {
    std::string id;
    std::string path;  // relative to the manifest file
    CompareMode mode = CompareMode::Exact;
    std::string target;
    std::string description;
};

std::vector<SequenceMapping> load_manifest(const std::filesystem::path& manifest_path);

// Compare computed values against the fixture up to `depth`: for exact mode
// depth is the largest sequence index n, for antidiagonal mode the largest
// antidiagonal. Throws std::out_of_range when the fixture is too short.
IdentityReport check_sequence(const SequenceMapping& mapping, const BFile& bfile, long long depth);

// POLYB_DATA_DIR environment variable, else the compiled-in default.
std::filesystem::path default_data_dir();

// GET https://oeis.org/<id>/b<digits>.txt. Opt-in; never used by tests.
std::string fetch_bfile_text(const std::string& id);

}  // namespace polyb
