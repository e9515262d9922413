#include "hsball/rational_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hsball {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    strip();
}

RationalPoly RationalPoly::constant(const Rational& c) {
    return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::term(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return RationalPoly(std::move(v));
}

Rational RationalPoly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

void RationalPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RationalPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[k].get_str();
        if (k >= 1) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

RationalPoly add(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()),
                            Rational(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) v[i] += a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) v[i] += b.coefficients()[i];
    return RationalPoly(std::move(v));
}

RationalPoly subtract(const RationalPoly& a, const RationalPoly& b) {
    return add(a, scale(b, Rational(-1)));
}

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> v(a.coefficients().size() + b.coefficients().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            v[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
    return RationalPoly(std::move(v));
}

RationalPoly scale(const RationalPoly& a, const Rational& c) {
    std::vector<Rational> v(a.coefficients());
    for (auto& x : v) x *= c;
    return RationalPoly(std::move(v));
}

RationalPoly power(const RationalPoly& a, unsigned k) {
    RationalPoly acc = RationalPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) acc = multiply(acc, a);
    return acc;
}

RationalPoly derivative(const RationalPoly& p, unsigned m) {
    RationalPoly cur = p;
    for (unsigned step = 0; step < m; ++step) {
        const auto& c = cur.coefficients();
        if (c.size() <= 1) return RationalPoly();
        std::vector<Rational> v(c.size() - 1, Rational(0));
        for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * Rational(static_cast<long>(i));
        cur = RationalPoly(std::move(v));
    }
    return cur;
}

std::vector<mpz_class> binomial_row(unsigned n) {
    std::vector<mpz_class> row{1};
    for (unsigned level = 1; level <= n; ++level) {
        std::vector<mpz_class> next(level + 1, 0);
        next[0] = 1;
        next[level] = 1;
        for (unsigned k = 1; k < level; ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return row;
}

}  // namespace hsball
