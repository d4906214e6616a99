#include "polyb/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace polyb {

BiPoly BiPoly::constant(const Rational& c) { return term(0, 0, c); }
BiPoly BiPoly::x() { return term(1, 0, 1); }
BiPoly BiPoly::y() { return term(0, 1, 1); }

BiPoly BiPoly::term(int dx, int dy, const Rational& c) {
    BiPoly p;
    p.add_term(dx, dy, c);
    return p;
}

Rational BiPoly::coeff(int dx, int dy) const {
    const auto it = coeffs_.find({dx, dy});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int dx, int dy, const Rational& c) {
    if (c == 0) return;
    const Key key{dx, dy};
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out(*this);
    for (const auto& [key, c] : o.coeffs_) out.add_term(key.first, key.second, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly out(*this);
    for (const auto& [key, c] : o.coeffs_) out.add_term(key.first, key.second, -c);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    BiPoly out;
    if (s == 0) return out;
    for (const auto& [key, c] : coeffs_) out.coeffs_.emplace(key, c * s);
    return out;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [key, c] : coeffs_) {
        Rational t = c;
        for (int i = 0; i < key.first; ++i) t *= x;
        for (int i = 0; i < key.second; ++i) t *= y;
        acc += t;
    }
    return acc;
}

UniPoly BiPoly::eval_y(const Rational& y) const {
    int dmax = -1;
    for (const auto& [key, c] : coeffs_) dmax = std::max(dmax, key.first);
    std::vector<Rational> out(dmax + 1);
    for (const auto& [key, c] : coeffs_) {
        Rational t = c;
        for (int i = 0; i < key.second; ++i) t *= y;
        out[key.first] += t;
    }
    return UniPoly(std::move(out));
}

UniPoly BiPoly::eval_x(const Rational& x) const {
    int dmax = -1;
    for (const auto& [key, c] : coeffs_) dmax = std::max(dmax, key.second);
    std::vector<Rational> out(dmax + 1);
    for (const auto& [key, c] : coeffs_) {
        Rational t = c;
        for (int i = 0; i < key.first; ++i) t *= x;
        out[key.second] += t;
    }
    return UniPoly(std::move(out));
}

std::vector<std::pair<BiPoly::Key, Rational>> BiPoly::terms_graded() const {
    std::vector<std::pair<Key, Rational>> out(coeffs_.begin(), coeffs_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second;
        const int tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    return out;
}

std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_graded()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational mag = neg ? Rational(-c) : c;
        const auto [dx, dy] = key;
        std::vector<std::string> parts;
        if (mag != 1 || (dx == 0 && dy == 0)) parts.push_back(rational_str(mag));
        if (dx > 0) parts.push_back(dx == 1 ? vx : vx + "^" + std::to_string(dx));
        if (dy > 0) parts.push_back(dy == 1 ? vy : vy + "^" + std::to_string(dy));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out << "*";
            out << parts[i];
        }
    }
    return out.str();
}

}  // namespace polyb
