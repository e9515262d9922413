#include "hsball/identity.hpp"

#include <stdexcept>

namespace hsball {

bool cross_equal(const PolyFraction& a, const PolyFraction& b) {
    if (!(a.base == b.base))
        throw std::invalid_argument("cross_equal: fractions have different bases");
    const unsigned common = std::max(a.power, b.power);
    const RationalPoly lhs = multiply(a.numerator, power(a.base, common - a.power));
    const RationalPoly rhs = multiply(b.numerator, power(b.base, common - b.power));
    return lhs == rhs;
}

RationalPoly derivative_identity_residual(const RationalPoly& f, const RationalPoly& g,
                                          unsigned N) {
    if (N < 1) throw std::invalid_argument("derivative_identity_residual: N must be >= 1");
    const auto binom = binomial_row(N);
    std::vector<RationalPoly> gpow(N + 1);
    gpow[0] = RationalPoly::constant(1);
    for (unsigned k = 1; k <= N; ++k) gpow[k] = multiply(gpow[k - 1], g);

    RationalPoly total;
    for (unsigned k = 0; k <= N; ++k) {
        RationalPoly term = multiply(gpow[k], derivative(multiply(gpow[N - k], f), N - 1));
        Rational c(binom[k]);
        if (k % 2 == 1) c = -c;
        total = add(total, scale(term, c));
    }
    return total;
}

PolyFraction quotient_derivative(const RationalPoly& f, const RationalPoly& g, unsigned N) {
    if (g.is_zero()) throw std::invalid_argument("quotient_derivative: zero denominator");
    if (N < 1) throw std::invalid_argument("quotient_derivative: N must be >= 1");
    const auto binom = binomial_row(N + 1);
    std::vector<RationalPoly> gpow(N + 1);
    gpow[0] = RationalPoly::constant(1);
    for (unsigned k = 1; k <= N; ++k) gpow[k] = multiply(gpow[k - 1], g);

    RationalPoly sum;
    for (unsigned k = 0; k <= N; ++k) {
        RationalPoly term = multiply(gpow[k], derivative(multiply(gpow[N - k], f), N));
        Rational c(binom[k]);
        if (k % 2 == 1) c = -c;
        sum = add(sum, scale(term, c));
    }
    if (N % 2 == 1) sum = scale(sum, Rational(-1));
    return PolyFraction{sum, g, N + 1};
}

PolyFraction quotient_derivative_by_steps(const RationalPoly& f, const RationalPoly& g,
                                          unsigned N) {
    if (g.is_zero())
        throw std::invalid_argument("quotient_derivative_by_steps: zero denominator");
    if (N < 1) throw std::invalid_argument("quotient_derivative_by_steps: N must be >= 1");
    const RationalPoly dg = derivative(g, 1);
    RationalPoly num = f;
    unsigned m = 1;
    for (unsigned step = 0; step < N; ++step) {
        // D(num/g^m) = (D(num) g - m num D(g)) / g^{m+1}
        num = subtract(multiply(derivative(num, 1), g),
                       scale(multiply(num, dg), Rational(static_cast<long>(m))));
        ++m;
    }
    return PolyFraction{num, g, m};
}

RationalPoly random_rational_poly(std::mt19937& rng, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("random_rational_poly: negative degree");
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        const long numer = static_cast<long>(rng() % 19u) - 9;
        const long denom = static_cast<long>(rng() % 3u) + 1;
        Rational q(numer, denom);
        q.canonicalize();
        coeffs.push_back(q);
    }
    return RationalPoly(std::move(coeffs));
}

}  // namespace hsball
