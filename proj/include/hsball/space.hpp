#pragma once

#include <span>

#include "hsball/series.hpp"

namespace hsball {

/// Square norm of the monomial z^alpha in the Hardy space of the ball:
/// (n-1)! alpha! / (n-1+|alpha|)!, evaluated through log-gamma differences.
double hardy_square_norm(const MultiIndex& alpha);

/// Square norm of z^alpha in the weighted Bergman space with weight
/// (1-|z|^2)^t against normalized volume: alpha! Gamma(n+t+1) / Gamma(n+t+1+|alpha|).
/// Requires t > -1.
double bergman_square_norm(const MultiIndex& alpha, double t);

/// Inner-product model of the Hardy-Sobolev space on the ball of C^n with
/// smoothness parameter beta. The monomial weight is
///   w_alpha = 1                          for |alpha| = 0,
///   w_alpha = |alpha|^{2 beta} h(alpha)  for |alpha| >= 1,
/// where h is the Hardy monomial square norm, so that
/// ||f||^2 = |f(0)|^2 + ||R^beta f||^2_{H^2} holds coefficient-wise.
/// Weights are computed on demand from pure functions; instances are
/// immutable and safe to share across threads.
class SpaceModel {
public:
    SpaceModel(int n, double beta);

    int dimension() const { return n_; }
    double beta() const { return beta_; }

    double log_weight(const MultiIndex& alpha) const;
    double weight(const MultiIndex& alpha) const;

    double norm(const TruncSeries& f) const;
    Complex inner(const TruncSeries& f, const TruncSeries& g) const;

    /// Reproducing kernel K(z, w) = 1 + sum_k k^{-2 beta} C(n+k-1, k) <z,w>^k,
    /// summed until a certified geometric tail bound drops below tol.
    /// Throws if |<z,w>| >= 1.
    Complex kernel(std::span<const Complex> z, std::span<const Complex> w, double tol) const;

    /// Degree-<=D section of the kernel at a: coefficients conj(a)^alpha / w_alpha.
    TruncSeries kernel_section(std::span<const Complex> a, int D) const;

private:
    int n_;
    double beta_;
};

/// Ratio of two norm computations the model treats as equivalent: the
/// Bergman-type quantity (|f(0)|^2 + ||R^N f||^2_{A^2_t})^{1/2} with
/// t = 2(N - beta) - 1 against the model norm of f. Requires integer N > beta
/// and f not identically zero.
double norm_equivalence_ratio(const TruncSeries& f, const SpaceModel& model, int N);

}  // namespace hsball
