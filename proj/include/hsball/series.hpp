#pragma once

#include <complex>
#include <map>
#include <span>

#include "hsball/multi_index.hpp"

namespace hsball {

using Complex = std::complex<double>;

/// Truncated power series (holomorphic polynomial) on the ball of C^n.
/// Coefficients are kept sparsely; an absent index means a zero coefficient
/// and no stored index exceeds the truncation degree. Operations are pure and
/// return new values, so shared instances can be read concurrently.
class TruncSeries {
public:
    TruncSeries(int n, int truncation_degree);

    static TruncSeries constant(int n, int truncation_degree, Complex value);
    static TruncSeries coordinate(int n, int truncation_degree, int index);
    static TruncSeries monomial(int n, int truncation_degree, const MultiIndex& alpha,
                                Complex value);

    int dimension() const { return n_; }
    int truncation_degree() const { return degree_cap_; }

    /// Highest degree among stored terms (0 for the zero series).
    int max_term_degree() const;

    bool is_zero() const;

    Complex coefficient(const MultiIndex& alpha) const;
    void set_coefficient(const MultiIndex& alpha, Complex value);

    const std::map<MultiIndex, Complex>& terms() const { return coeffs_; }

    /// Same coefficients re-capped at new_degree (terms above it dropped).
    TruncSeries with_truncation(int new_degree) const;

private:
    int n_ = 1;
    int degree_cap_ = 0;
    std::map<MultiIndex, Complex> coeffs_;
};

/// Fractional radial derivative: the degree-k homogeneous part is scaled by
/// k^beta for k >= 1 and the constant term is dropped.
TruncSeries radial_derivative(const TruncSeries& f, double beta);

/// Product truncated at total degree cap.
TruncSeries multiply(const TruncSeries& f, const TruncSeries& g, int cap);

TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries subtract(const TruncSeries& f, const TruncSeries& g);
TruncSeries scale(const TruncSeries& f, Complex factor);

/// Integer power phi^k truncated at cap.
TruncSeries power(const TruncSeries& f, int k, int cap);

Complex evaluate(const TruncSeries& f, std::span<const Complex> z);

/// Restriction of f to its terms of total degree exactly k.
TruncSeries homogeneous_part(const TruncSeries& f, int k);

}  // namespace hsball
