#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyb/oeis.hpp"

#include <fstream>
#include <sstream>

using namespace polyb;

TEST_CASE("b-file parsing") {
    const BFile f = parse_bfile("0 0\n1 1\n2 -1\n");
    REQUIRE(f.entries.size() == 3);
    CHECK(f.entries[0].index == 0);
    CHECK(f.entries[2].value == -1);

    const BFile g = parse_bfile("# comment\n5 17\n");
    REQUIRE(g.entries.size() == 1);
    CHECK(g.entries[0].index == 5);
    CHECK(g.entries[0].value == 17);

    CHECK(parse_bfile("").entries.empty());
    CHECK(parse_bfile("\n  \n# only comments\n").entries.empty());
    CHECK(parse_bfile("  3   42  \n").entries.size() == 1);  // whitespace tolerant
}

TEST_CASE("malformed lines carry their line number") {
    try {
        parse_bfile("3 x\n");
        FAIL("expected parse error");
    } catch (const BFileParseError& e) {
        CHECK(e.line() == 1);
    }
    try {
        parse_bfile("# ok\n1 2\n2 3 junk\n");
        FAIL("expected parse error");
    } catch (const BFileParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_bfile("2 5\n1 6\n"), BFileParseError);  // decreasing index
}

TEST_CASE("render round-trips the fixtures modulo comments") {
    for (const char* name : {"b001469.txt", "b099594.txt", "b136126.txt"}) {
        const auto path = default_data_dir() / name;
        std::ifstream in(path);
        REQUIRE(in);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string stripped;
        std::string line;
        std::istringstream lines(buf.str());
        while (std::getline(lines, line))
            if (!line.empty() && line[0] != '#') stripped += line + "\n";

        const BFile parsed = parse_bfile(buf.str(), name);
        CHECK(render_bfile(parsed) == stripped);
        const BFile reparsed = parse_bfile(render_bfile(parsed), name);
        CHECK(reparsed.entries.size() == parsed.entries.size());
    }
}

TEST_CASE("manifest loads all three fixtures") {
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    REQUIRE(mappings.size() == 3);
    CHECK(mappings[0].id == "A001469");
    CHECK(mappings[0].mode == CompareMode::Exact);
    CHECK(mappings[1].mode == CompareMode::AntidiagonalMultiset);
}

TEST_CASE("fixture checks pass at the acceptance depths") {
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    for (const auto& m : mappings) {
        const BFile fixture = load_bfile(m.path, m.id);
        const long long depth = m.mode == CompareMode::Exact ? 10 : 6;
        const auto report = check_sequence(m, fixture, depth);
        CHECK(report.pass());
        CHECK(report.cases_checked == depth + 1);
        const auto rerun = check_sequence(m, fixture, depth);
        CHECK(report.json() == rerun.json());
    }
}

TEST_CASE("depth 0 gives an empty pass report") {
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    const BFile fixture = load_bfile(mappings[0].path, mappings[0].id);
    const auto report = check_sequence(mappings[0], fixture, 0);
    CHECK(report.pass());
    CHECK(report.failures.empty());
}

TEST_CASE("depth beyond the fixture length errors") {
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    const BFile fixture = load_bfile(mappings[0].path, mappings[0].id);
    CHECK_THROWS_AS(check_sequence(mappings[0], fixture, 500), std::out_of_range);
}

TEST_CASE("a doctored fixture is caught") {
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    BFile fixture = load_bfile(mappings[0].path, mappings[0].id);
    fixture.entries[1].value += 1;  // a(2) wrong => genocchi(4) mismatch
    const auto report = check_sequence(mappings[0], fixture, 10);
    CHECK_FALSE(report.pass());
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].params == "n=4");
}

TEST_CASE("antidiagonal multiset comparison ignores within-diagonal order") {
    const auto mappings = load_manifest(default_data_dir() / "manifest.json");
    const auto& m99 = mappings[1];
    BFile fixture = load_bfile(m99.path, m99.id);
    // reverse one full antidiagonal (positions 3..5 hold diagonal d = 2)
    std::swap(fixture.entries[3].value, fixture.entries[5].value);
    CHECK(check_sequence(m99, fixture, 2).pass());
}
