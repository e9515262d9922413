#include "hsball/series.hpp"

#include <cmath>
#include <stdexcept>

namespace hsball {

TruncSeries::TruncSeries(int n, int truncation_degree) : n_(n), degree_cap_(truncation_degree) {
    if (n < 1) throw std::invalid_argument("TruncSeries: n must be >= 1");
    if (truncation_degree < 0) throw std::invalid_argument("TruncSeries: negative truncation");
}

TruncSeries TruncSeries::constant(int n, int truncation_degree, Complex value) {
    TruncSeries s(n, truncation_degree);
    s.set_coefficient(MultiIndex::zero(n), value);
    return s;
}

TruncSeries TruncSeries::coordinate(int n, int truncation_degree, int index) {
    if (truncation_degree < 1)
        throw std::invalid_argument("TruncSeries::coordinate: need truncation >= 1");
    TruncSeries s(n, truncation_degree);
    s.set_coefficient(MultiIndex::unit(n, index), 1.0);
    return s;
}

TruncSeries TruncSeries::monomial(int n, int truncation_degree, const MultiIndex& alpha,
                                  Complex value) {
    TruncSeries s(n, truncation_degree);
    s.set_coefficient(alpha, value);
    return s;
}

int TruncSeries::max_term_degree() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.degree();
}

bool TruncSeries::is_zero() const {
    for (const auto& [alpha, c] : coeffs_)
        if (c != Complex(0.0)) return false;
    return true;
}

Complex TruncSeries::coefficient(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void TruncSeries::set_coefficient(const MultiIndex& alpha, Complex value) {
    if (alpha.dimension() != n_)
        throw std::invalid_argument("TruncSeries: index dimension mismatch");
    if (alpha.degree() > degree_cap_)
        throw std::invalid_argument("TruncSeries: index degree exceeds truncation");
    coeffs_[alpha] = value;
}

TruncSeries TruncSeries::with_truncation(int new_degree) const {
    TruncSeries out(n_, new_degree);
    for (const auto& [alpha, c] : coeffs_)
        if (alpha.degree() <= new_degree) out.coeffs_.emplace(alpha, c);
    return out;
}

TruncSeries radial_derivative(const TruncSeries& f, double beta) {
    TruncSeries out(f.dimension(), f.truncation_degree());
    for (const auto& [alpha, c] : f.terms()) {
        const int k = alpha.degree();
        if (k == 0) continue;  // the sum starts at k = 1
        out.set_coefficient(alpha, c * std::pow(static_cast<double>(k), beta));
    }
    return out;
}

TruncSeries multiply(const TruncSeries& f, const TruncSeries& g, int cap) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("multiply: dimension mismatch");
    TruncSeries out(f.dimension(), cap);
    for (const auto& [a, ca] : f.terms()) {
        if (a.degree() > cap) continue;
        for (const auto& [b, cb] : g.terms()) {
            if (a.degree() + b.degree() > cap) continue;
            const MultiIndex sum = a.plus(b);
            out.set_coefficient(sum, out.coefficient(sum) + ca * cb);
        }
    }
    return out;
}

TruncSeries add(const TruncSeries& f, const TruncSeries& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("add: dimension mismatch");
    const int cap = std::min(f.truncation_degree(), g.truncation_degree());
    TruncSeries out = f.with_truncation(cap);
    for (const auto& [alpha, c] : g.terms()) {
        if (alpha.degree() > cap) continue;
        out.set_coefficient(alpha, out.coefficient(alpha) + c);
    }
    return out;
}

TruncSeries subtract(const TruncSeries& f, const TruncSeries& g) {
    return add(f, scale(g, Complex(-1.0)));
}

TruncSeries scale(const TruncSeries& f, Complex factor) {
    TruncSeries out(f.dimension(), f.truncation_degree());
    for (const auto& [alpha, c] : f.terms()) out.set_coefficient(alpha, factor * c);
    return out;
}

TruncSeries power(const TruncSeries& f, int k, int cap) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    TruncSeries acc = TruncSeries::constant(f.dimension(), cap, 1.0);
    for (int i = 0; i < k; ++i) acc = multiply(acc, f, cap);
    return acc;
}

Complex evaluate(const TruncSeries& f, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != f.dimension())
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Complex total = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        Complex mono = 1.0;
        for (int i = 0; i < alpha.dimension(); ++i)
            for (int p = 0; p < alpha[i]; ++p) mono *= z[static_cast<std::size_t>(i)];
        total += c * mono;
    }
    return total;
}

TruncSeries homogeneous_part(const TruncSeries& f, int k) {
    if (k < 0 || k > f.truncation_degree())
        throw std::invalid_argument("homogeneous_part: degree out of range");
    TruncSeries out(f.dimension(), f.truncation_degree());
    for (const auto& [alpha, c] : f.terms())
        if (alpha.degree() == k) out.set_coefficient(alpha, c);
    return out;
}

}  // namespace hsball
