#pragma once

#include <random>

#include "hsball/rational_poly.hpp"

namespace hsball {

/// numerator / base^power with a fixed denominator polynomial. No gcd
/// reduction is performed; equality is decided by cross-multiplication.
struct PolyFraction {
    RationalPoly numerator;
    RationalPoly base;
    unsigned power = 0;
};

/// True when the two fractions (sharing the same base polynomial) agree as
/// rational functions: numerator_a * base^power_b == numerator_b * base^power_a.
bool cross_equal(const PolyFraction& a, const PolyFraction& b);

/// The alternating sum
///   sum_{k=0}^{N} (-1)^k C(N,k) g^k D^{N-1}(g^{N-k} f)
/// computed exactly, without assuming it vanishes. N >= 1.
RationalPoly derivative_identity_residual(const RationalPoly& f, const RationalPoly& g,
                                          unsigned N);

/// Closed-form N-th derivative of f/g as a fraction over g^{N+1}:
///   (-1)^N sum_{k=0}^{N} (-1)^k C(N+1,k) g^k D^N(g^{N-k} f)  /  g^{N+1}.
/// Requires g != 0 and N >= 1.
PolyFraction quotient_derivative(const RationalPoly& f, const RationalPoly& g, unsigned N);

/// Independent route to D^N(f/g): N-fold application of the elementary rule
/// D(p/g^m) = (D(p) g - m p D(g)) / g^{m+1}, starting from f/g.
PolyFraction quotient_derivative_by_steps(const RationalPoly& f, const RationalPoly& g,
                                          unsigned N);

/// Reproducible random polynomial of degree <= max_degree: integer numerators
/// in [-9, 9] over denominators in {1, 2, 3}, drawn from raw mt19937 output so
/// the stream does not depend on the standard library's distributions.
RationalPoly random_rational_poly(std::mt19937& rng, int max_degree);

}  // namespace hsball
