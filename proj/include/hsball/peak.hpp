#pragma once

#include <vector>

#include "hsball/series.hpp"

namespace hsball {

/// Square norm of the k-th power of the boundary peak function
/// ((1 + conj(zeta) z)/2)^k on the disk (n = 1):
///   4^{-k} (1 + sum_{j=1}^{k} C(k,j)^2 j^{2 beta}).
/// Independent of the unimodular zeta. Computed from a Pascal row up to
/// k = 300 and in log space beyond.
double peak_norm_sq(int k, double beta);

struct PeakRatio {
    int k;
    double norm_sq;
    double ratio;  // norm_sq / (k+1)^{2 beta - 1}
};

/// Ratio sequence norm^2 / (k+1)^{2 beta - 1} for k = 1..kmax.
std::vector<PeakRatio> peak_norm_ratios(double beta, int kmax);

/// Least-squares slope of log norm^2 against log(k+1) over k in [kmax/2, kmax].
double observed_growth_exponent(double beta, int kmax);

/// |f_k(a)| / ||f_k|| for k = 1..kmax: the normalized peak powers evaluated at
/// a fixed interior point, which decay to 0 as k grows.
std::vector<double> weak_decay_probe(double beta, Complex a, int kmax, Complex zeta = 1.0);

}  // namespace hsball
