#include "hsball/space.hpp"

#include <cmath>
#include <stdexcept>

namespace hsball {

namespace {

double log_factorial(double x) { return std::lgamma(x + 1.0); }

}  // namespace

double hardy_square_norm(const MultiIndex& alpha) {
    const int n = alpha.dimension();
    const int k = alpha.degree();
    if (n == 1) return 1.0;
    double lg = log_factorial(n - 1.0) - log_factorial(n - 1.0 + k);
    for (int i = 0; i < n; ++i) lg += log_factorial(alpha[i]);
    return std::exp(lg);
}

double bergman_square_norm(const MultiIndex& alpha, double t) {
    if (t <= -1.0) throw std::invalid_argument("bergman_square_norm: need t > -1");
    const int n = alpha.dimension();
    const int k = alpha.degree();
    double lg = std::lgamma(n + t + 1.0) - std::lgamma(n + t + 1.0 + k);
    for (int i = 0; i < n; ++i) lg += log_factorial(alpha[i]);
    return std::exp(lg);
}

SpaceModel::SpaceModel(int n, double beta) : n_(n), beta_(beta) {
    if (n < 1) throw std::invalid_argument("SpaceModel: n must be >= 1");
}

double SpaceModel::log_weight(const MultiIndex& alpha) const {
    if (alpha.dimension() != n_)
        throw std::invalid_argument("SpaceModel: index dimension mismatch");
    const int k = alpha.degree();
    if (k == 0) return 0.0;
    double lg = 2.0 * beta_ * std::log(static_cast<double>(k));
    if (n_ > 1) {
        lg += log_factorial(n_ - 1.0) - log_factorial(n_ - 1.0 + k);
        for (int i = 0; i < n_; ++i) lg += log_factorial(alpha[i]);
    }
    return lg;
}

double SpaceModel::weight(const MultiIndex& alpha) const { return std::exp(log_weight(alpha)); }

double SpaceModel::norm(const TruncSeries& f) const {
    if (f.dimension() != n_) throw std::invalid_argument("SpaceModel::norm: dimension mismatch");
    double total = 0.0;
    for (const auto& [alpha, c] : f.terms()) total += std::norm(c) * weight(alpha);
    return std::sqrt(total);
}

Complex SpaceModel::inner(const TruncSeries& f, const TruncSeries& g) const {
    if (f.dimension() != n_ || g.dimension() != n_)
        throw std::invalid_argument("SpaceModel::inner: dimension mismatch");
    Complex total = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        const Complex d = g.coefficient(alpha);
        if (d != Complex(0.0)) total += c * std::conj(d) * weight(alpha);
    }
    return total;
}

Complex SpaceModel::kernel(std::span<const Complex> z, std::span<const Complex> w,
                           double tol) const {
    if (static_cast<int>(z.size()) != n_ || static_cast<int>(w.size()) != n_)
        throw std::invalid_argument("SpaceModel::kernel: point dimension mismatch");
    if (tol <= 0.0) throw std::invalid_argument("SpaceModel::kernel: tol must be positive");
    Complex s = 0.0;
    for (int i = 0; i < n_; ++i)
        s += z[static_cast<std::size_t>(i)] * std::conj(w[static_cast<std::size_t>(i)]);
    const double r = std::abs(s);
    if (r >= 1.0)
        throw std::runtime_error("SpaceModel::kernel: |<z,w>| >= 1, series does not converge");
    if (r == 0.0) return 1.0;

    Complex total = 1.0;
    Complex spow = 1.0;      // s^k
    double dim_coef = 1.0;   // C(n+k-1, k)
    const double growth = std::max(0.0, -2.0 * beta_);
    for (int k = 1; k <= 20000000; ++k) {
        spow *= s;
        dim_coef *= static_cast<double>(n_ + k - 1) / static_cast<double>(k);
        const double scale_k = std::pow(static_cast<double>(k), -2.0 * beta_);
        const Complex term = scale_k * dim_coef * spow;
        total += term;
        // Valid ratio bound for every later term: the three factors below are
        // each non-increasing in k.
        const double rho = r * std::pow((k + 1.0) / k, growth) *
                           (static_cast<double>(n_ + k) / (k + 1.0));
        if (rho < 1.0 && std::abs(term) * rho / (1.0 - rho) < tol) return total;
    }
    throw std::runtime_error("SpaceModel::kernel: tail bound did not certify convergence");
}

TruncSeries SpaceModel::kernel_section(std::span<const Complex> a, int D) const {
    if (static_cast<int>(a.size()) != n_)
        throw std::invalid_argument("SpaceModel::kernel_section: point dimension mismatch");
    TruncSeries out(n_, D);
    for (const MultiIndex& alpha : graded_basis(n_, D)) {
        Complex mono = 1.0;
        for (int i = 0; i < n_; ++i)
            for (int p = 0; p < alpha[i]; ++p) mono *= std::conj(a[static_cast<std::size_t>(i)]);
        out.set_coefficient(alpha, mono * std::exp(-log_weight(alpha)));
    }
    return out;
}

double norm_equivalence_ratio(const TruncSeries& f, const SpaceModel& model, int N) {
    if (f.is_zero()) throw std::invalid_argument("norm_equivalence_ratio: zero series");
    if (static_cast<double>(N) <= model.beta() || N < 0)
        throw std::invalid_argument("norm_equivalence_ratio: need nonnegative integer N > beta");
    const double t = 2.0 * (N - model.beta()) - 1.0;
    double num_sq = std::norm(f.coefficient(MultiIndex::zero(f.dimension())));
    for (const auto& [alpha, c] : f.terms()) {
        const int k = alpha.degree();
        if (k == 0) continue;
        const double rn = std::pow(static_cast<double>(k), static_cast<double>(N));
        num_sq += std::norm(c * rn) * bergman_square_norm(alpha, t);
    }
    return std::sqrt(num_sq) / model.norm(f);
}

}  // namespace hsball
