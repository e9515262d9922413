#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hsball {

using Rational = mpq_class;

/// Univariate polynomial over exact rationals; coefficient index = power of x.
/// Trailing zero coefficients are stripped, the zero polynomial is the empty
/// list. All arithmetic is exact.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coefficients);

    static RationalPoly constant(const Rational& c);
    /// x^power with the given coefficient.
    static RationalPoly term(const Rational& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coefficient(std::size_t power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }

    std::string to_string() const;

private:
    void strip();
    std::vector<Rational> coeffs_;
};

RationalPoly add(const RationalPoly& a, const RationalPoly& b);
RationalPoly subtract(const RationalPoly& a, const RationalPoly& b);
RationalPoly multiply(const RationalPoly& a, const RationalPoly& b);
RationalPoly scale(const RationalPoly& a, const Rational& c);
RationalPoly power(const RationalPoly& a, unsigned k);

/// Exact m-th derivative; m = 0 returns the argument.
RationalPoly derivative(const RationalPoly& p, unsigned m);

/// Row N of Pascal's triangle: C(N,0) ... C(N,N), computed by the recurrence.
std::vector<mpz_class> binomial_row(unsigned n);

}  // namespace hsball
