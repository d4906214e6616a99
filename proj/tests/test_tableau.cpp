#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyb/polybern.hpp"
#include "polyb/tableau.hpp"

using namespace polyb;

namespace {

AltTableau make(int n, int k, std::vector<Cell> cells) {
    AltTableau t;
    t.n = n;
    t.k = k;
    t.cells = std::move(cells);
    REQUIRE(t.valid());
    return t;
}

constexpr Cell E = Cell::Empty, L = Cell::Left, D = Cell::Down;

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(all_tableaux(2, 2).size() == 31);
    CHECK(all_tableaux(1, 1).size() == 3);
    CHECK(all_tableaux(0, 3).size() == 1);
    CHECK(all_tableaux(3, 0).size() == 1);
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) {
            long long count = 0;
            enum_tableaux(n, k, [&](const AltTableau&) { ++count; });
            CHECK(Integer(count) == bhat_closed(n, k, 1));
        }
}

TEST_CASE("every enumerated tableau is valid and arrows are unique per line") {
    enum_tableaux(3, 3, [](const AltTableau& t) {
        CHECK(t.valid());
        for (int i = 0; i < t.n; ++i) {
            int lefts = 0;
            for (int j = 0; j < t.k; ++j) lefts += t.at(i, j) == Cell::Left;
            CHECK(lefts <= 1);
        }
        for (int j = 0; j < t.k; ++j) {
            int downs = 0;
            for (int i = 0; i < t.n; ++i) downs += t.at(i, j) == Cell::Down;
            CHECK(downs <= 1);
        }
    });
}

TEST_CASE("left weight chain statistic") {
    CHECK(weight_left(make(2, 2, {E, E, E, E})) == 0);
    // Lefts at (1,2) and (2,1): both rows count
    CHECK(weight_left(make(2, 2, {E, L, L, E})) == 2);
    CHECK(weight_left(make(2, 2, {E, L, L, D})) == 2);
    // Left only in row 2: prefix stops at row 1
    CHECK(weight_left(make(2, 2, {E, E, L, E})) == 0);
    // equal columns do not extend the chain
    CHECK(weight_left(make(2, 2, {L, E, E, E})) == 1);

    long long weight0 = 0;
    enum_tableaux(2, 2, [&](const AltTableau& t) {
        if (weight_left(t) == 0) ++weight0;
    });
    CHECK(weight0 == 14);
}

TEST_CASE("down weight chain statistic") {
    CHECK(weight_down(make(2, 2, {E, E, E, E})) == 0);
    // Downs at (1,2) and (2,1): both columns count
    CHECK(weight_down(make(2, 2, {E, D, D, E})) == 2);
    // Down only in column 1: the prefix from the right is empty
    CHECK(weight_down(make(2, 2, {D, E, E, E})) == 0);
    CHECK(weight_down(make(2, 2, {E, E, D, E})) == 0);
    // Down only in the rightmost column counts vacuously
    CHECK(weight_down(make(2, 2, {E, D, E, E})) == 1);
}

TEST_CASE("tableau polynomials match the Callan polynomial") {
    CHECK(tableau_poly(2, 2) == UniPoly({14, 15, 2}));
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) CHECK(tableau_poly(n, k) == callan_poly_closed(n, k));
}

TEST_CASE("two-variable polynomial at (2,2)") {
    BiPoly expected;
    expected.add_term(2, 1, 1);
    expected.add_term(1, 2, 1);
    expected.add_term(2, 0, 1);
    expected.add_term(1, 1, 7);
    expected.add_term(0, 2, 1);
    expected.add_term(1, 0, 7);
    expected.add_term(0, 1, 7);
    expected.add_term(0, 0, 6);
    CHECK(tableau_poly2(2, 2) == expected);
    CHECK(tableau_poly2(2, 2).str() == "x^2*y + x*y^2 + x^2 + 7*x*y + y^2 + 7*x + 7*y + 6");
}

TEST_CASE("single-column and single-row closed display") {
    for (int n = 1; n <= 8; ++n) {
        BiPoly expected;
        const Rational c{int_pow(2, n - 1)};
        expected.add_term(1, 1, c - 1);
        expected.add_term(1, 0, c);
        expected.add_term(0, 1, c);
        expected.add_term(0, 0, c);
        CHECK(tableau_poly2(n, 1) == expected);
        CHECK(tableau_poly2(1, n) == expected);
    }
}

TEST_CASE("empirical transpose symmetry") {
    const auto swap_vars = [](const BiPoly& p) {
        BiPoly out;
        for (const auto& [key, c] : p.terms_graded()) out.add_term(key.second, key.first, c);
        return out;
    };
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) CHECK(tableau_poly2(n, k) == swap_vars(tableau_poly2(k, n)));
}

TEST_CASE("row rendering") {
    const auto t = make(2, 3, {E, L, D, E, E, E});
    CHECK(t.rows() == std::vector<std::string>{".<v", "..."});
    AltTableau bad;
    bad.n = 1;
    bad.k = 2;
    bad.cells = {Cell::Down, Cell::Left};  // Left points at the Down
    CHECK_FALSE(bad.valid());
}
