#pragma once

#include "polyb/bipoly.hpp"
#include "polyb/unipoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace polyb {

enum class Cell : unsigned char { Empty, Left, Down };

// Rectangular alternative tableau: n rows (row 1 on top) by k columns
// (column 1 on the left), partially filled with left and down arrows such
// that every cell an arrow points at is empty.
struct AltTableau {
    int n = 0;
    int k = 0;
    std::vector<Cell> cells;  // row-major

    Cell at(int row, int col) const { return cells[static_cast<std::size_t>(row) * k + col]; }  // 0-based
    bool valid() const;
    std::vector<std::string> rows() const;  // '.', '<', 'v'
};

// Visit every valid tableau exactly once, column-major backtracking with the
// choice order Empty < Left < Down at each cell.
void enum_tableaux(int n, int k, const std::function<void(const AltTableau&)>& visit);
std::vector<AltTableau> all_tableaux(int n, int k);

// Chain statistic on the top prefix of rows that all contain a left arrow:
// count rows whose arrow sits strictly left of every arrow above it.
int weight_left(const AltTableau& t);

// Mirror statistic on the right prefix of columns that all contain a down
// arrow: count columns whose arrow sits strictly below every arrow to its right.
int weight_down(const AltTableau& t);

UniPoly tableau_poly(int n, int k);    // sum of x^{weight_left}
BiPoly tableau_poly2(int n, int k);    // sum of x^{weight_left} y^{weight_down}

}  // namespace polyb
