#include "polyb/tableau.hpp"

#include <stdexcept>

namespace polyb {

bool AltTableau::valid() const {
    if (cells.size() != static_cast<std::size_t>(n) * k) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) {
            if (at(i, j) == Cell::Left) {
                for (int jj = 0; jj < j; ++jj)
                    if (at(i, jj) != Cell::Empty) return false;
            } else if (at(i, j) == Cell::Down) {
                for (int ii = i + 1; ii < n; ++ii)
                    if (at(ii, j) != Cell::Empty) return false;
            }
        }
    }
    return true;
}

std::vector<std::string> AltTableau::rows() const {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) {
        std::string row(k, '.');
        for (int j = 0; j < k; ++j) {
            if (at(i, j) == Cell::Left) row[j] = '<';
            if (at(i, j) == Cell::Down) row[j] = 'v';
        }
        out[i] = std::move(row);
    }
    return out;
}

void enum_tableaux(int n, int k, const std::function<void(const AltTableau&)>& visit) {
    if (n < 0 || k < 0) throw std::invalid_argument("enum_tableaux: negative size");
    AltTableau t;
    t.n = n;
    t.k = k;
    t.cells.assign(static_cast<std::size_t>(n) * k, Cell::Empty);
    // row_blocked[i]: row i already holds an arrow in an earlier column, so no
    // Left may appear in it further right. col_blocked: a Down above in the
    // current column forbids any arrow below it.
    std::vector<char> row_blocked(n, 0);

    auto cell = [&](int i, int j) -> Cell& { return t.cells[static_cast<std::size_t>(i) * k + j]; };

    auto rec = [&](auto&& self, int j, int i, bool col_blocked) -> void {
        if (j == k) {
            visit(t);
            return;
        }
        if (i == n) {
            self(self, j + 1, 0, false);
            return;
        }
        cell(i, j) = Cell::Empty;
        self(self, j, i + 1, col_blocked);
        if (!col_blocked) {
            if (!row_blocked[i]) {
                cell(i, j) = Cell::Left;
                row_blocked[i] = 1;
                self(self, j, i + 1, col_blocked);
                row_blocked[i] = 0;
            }
            const char saved = row_blocked[i];
            cell(i, j) = Cell::Down;
            row_blocked[i] = 1;
            self(self, j, i + 1, true);
            row_blocked[i] = saved;
        }
        cell(i, j) = Cell::Empty;
    };
    rec(rec, 0, 0, false);
}

std::vector<AltTableau> all_tableaux(int n, int k) {
    std::vector<AltTableau> out;
    enum_tableaux(n, k, [&](const AltTableau& t) { out.push_back(t); });
    return out;
}

int weight_left(const AltTableau& t) {
    // Column of the unique Left per row, -1 when absent.
    std::vector<int> left(t.n, -1);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.k; ++j)
            if (t.at(i, j) == Cell::Left) left[i] = j;

    int prefix = 0;
    while (prefix < t.n && left[prefix] >= 0) ++prefix;

    int count = 0;
    int min_col = -1;
    for (int i = 0; i < prefix; ++i) {
        if (min_col < 0 || left[i] < min_col) {
            ++count;
            min_col = left[i];
        }
    }
    return count;
}

int weight_down(const AltTableau& t) {
    std::vector<int> down(t.k, -1);
    for (int j = 0; j < t.k; ++j)
        for (int i = 0; i < t.n; ++i)
            if (t.at(i, j) == Cell::Down) down[j] = i;

    int prefix = 0;
    while (prefix < t.k && down[t.k - 1 - prefix] >= 0) ++prefix;

    int count = 0;
    int max_row = -1;
    for (int c = t.k - 1; c > t.k - 1 - prefix; --c) {
        if (down[c] > max_row) {
            ++count;
            max_row = down[c];
        }
    }
    return count;
}

UniPoly tableau_poly(int n, int k) {
    std::vector<Rational> coeffs;
    enum_tableaux(n, k, [&](const AltTableau& t) {
        const int w = weight_left(t);
        if (static_cast<std::size_t>(w) >= coeffs.size()) coeffs.resize(w + 1);
        coeffs[w] += 1;
    });
    return UniPoly(std::move(coeffs));
}

BiPoly tableau_poly2(int n, int k) {
    BiPoly acc;
    enum_tableaux(n, k, [&](const AltTableau& t) { acc.add_term(weight_left(t), weight_down(t), 1); });
    return acc;
}

}  // namespace polyb
