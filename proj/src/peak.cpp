#include "hsball/peak.hpp"

#include <cmath>
#include <stdexcept>

namespace hsball {

namespace {

// Stable log(sum exp(l_j)) accumulation for the k > 300 regime.
double log_sum_exp(const std::vector<double>& logs) {
    double mx = logs.front();
    for (double l : logs) mx = std::max(mx, l);
    double s = 0.0;
    for (double l : logs) s += std::exp(l - mx);
    return mx + std::log(s);
}

}  // namespace

double peak_norm_sq(int k, double beta) {
    if (k < 0) throw std::invalid_argument("peak_norm_sq: k must be >= 0");
    if (k == 0) return 1.0;

    if (k <= 300) {
        // Pascal row keeps the binomials exactly rounded in binary64.
        std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
        row[0] = 1.0;
        for (int level = 1; level <= k; ++level)
            for (int j = level; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[j - 1];
        double sum = 1.0;
        for (int j = 1; j <= k; ++j)
            sum += row[static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(j)] *
                   std::pow(static_cast<double>(j), 2.0 * beta);
        return std::pow(0.25, k) * sum;
    }

    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(k) + 1);
    logs.push_back(0.0);
    const double lgk = std::lgamma(k + 1.0);
    for (int j = 1; j <= k; ++j) {
        const double lc = lgk - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0);
        logs.push_back(2.0 * lc + 2.0 * beta * std::log(static_cast<double>(j)));
    }
    return std::exp(log_sum_exp(logs) - k * std::log(4.0));
}

std::vector<PeakRatio> peak_norm_ratios(double beta, int kmax) {
    if (kmax < 10) throw std::invalid_argument("peak_norm_ratios: kmax must be >= 10");
    std::vector<PeakRatio> out;
    out.reserve(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        const double nsq = peak_norm_sq(k, beta);
        out.push_back({k, nsq, nsq / std::pow(k + 1.0, 2.0 * beta - 1.0)});
    }
    return out;
}

double observed_growth_exponent(double beta, int kmax) {
    if (kmax < 100) throw std::invalid_argument("observed_growth_exponent: kmax must be >= 100");
    const int k0 = kmax / 2;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (int k = k0; k <= kmax; ++k) {
        const double x = std::log(k + 1.0);
        const double y = std::log(peak_norm_sq(k, beta));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::vector<double> weak_decay_probe(double beta, Complex a, int kmax, Complex zeta) {
    if (kmax < 1) throw std::invalid_argument("weak_decay_probe: kmax must be >= 1");
    const Complex base = 0.5 * (1.0 + std::conj(zeta) * a);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(kmax));
    Complex p = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        p *= base;
        out.push_back(std::abs(p) / std::sqrt(peak_norm_sq(k, beta)));
    }
    return out;
}

}  // namespace hsball
