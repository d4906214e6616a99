#include "polyb/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyb {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::variable() {
    UniPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[i];
}

UniPoly UniPoly::operator-() const {
    UniPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    UniPoly p(*this);
    for (auto& c : p.coeffs_) c *= s;
    return p;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::subst_x_plus(const Rational& c) const {
    // Horner in (x + c)
    UniPoly shift;
    shift.coeffs_ = {c, Rational(1)};
    shift.trim();
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * shift + constant(*it);
    return acc;
}

UniPoly UniPoly::subst_scaled_x(const Rational& c) const {
    UniPoly p(*this);
    Rational f = 1;
    for (auto& co : p.coeffs_) {
        co *= f;
        f *= c;
    }
    p.trim();
    return p;
}

UniPoly UniPoly::divided_by_x() const {
    if (is_zero()) return {};
    if (coeffs_[0] != 0) throw std::domain_error("divided_by_x: nonzero constant term");
    return UniPoly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational c = coeff(d);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational mag = neg ? Rational(-c) : c;
        if (d == 0) {
            out << rational_str(mag);
        } else {
            if (mag != 1) out << rational_str(mag) << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

UniPoly rising(const UniPoly& p, long long j) {
    if (j < 0) throw std::invalid_argument("rising: negative length");
    UniPoly acc = UniPoly::constant(1);
    for (long long i = 0; i < j; ++i) acc = acc * (p + UniPoly::constant(Rational(i)));
    return acc;
}

}  // namespace polyb
