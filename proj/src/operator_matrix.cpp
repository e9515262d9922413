#include "hsball/operator_matrix.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hsball {

OperatorMatrix build_matrix(const TruncSeries& phi, const SpaceModel& model, int D) {
    if (phi.dimension() != model.dimension())
        throw std::invalid_argument("build_matrix: symbol/model dimension mismatch");
    if (phi.max_term_degree() > D)
        throw std::invalid_argument("build_matrix: symbol degree exceeds truncation");

    OperatorMatrix T{model, D, phi, graded_basis(model.dimension(), D), {}};
    const int m = T.size();

    std::map<MultiIndex, int> index_of;
    for (int i = 0; i < m; ++i) index_of.emplace(T.basis[static_cast<std::size_t>(i)], i);

    std::vector<double> logw(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        logw[static_cast<std::size_t>(i)] = model.log_weight(T.basis[static_cast<std::size_t>(i)]);

    T.entries = Eigen::MatrixXcd::Zero(m, m);
    for (int col = 0; col < m; ++col) {
        const MultiIndex& alpha = T.basis[static_cast<std::size_t>(col)];
        for (const auto& [gamma, c] : phi.terms()) {
            if (alpha.degree() + gamma.degree() > D) continue;
            const auto it = index_of.find(alpha.plus(gamma));
            const int row = it->second;
            T.entries(row, col) =
                c * std::exp(0.5 * (logw[static_cast<std::size_t>(row)] -
                                    logw[static_cast<std::size_t>(col)]));
        }
    }
    return T;
}

NormEstimate operator_norm(const OperatorMatrix& T, double tol, int max_iterations) {
    if (tol <= 0.0) throw std::invalid_argument("operator_norm: tol must be positive");
    const int m = T.size();
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m) / std::sqrt(static_cast<double>(m));

    NormEstimate est;
    double prev = -1.0;
    int stable = 0;
    for (int it = 1; it <= max_iterations; ++it) {
        Eigen::VectorXcd u = T.entries * v;
        const double sigma = u.norm();  // Rayleigh estimate, non-decreasing
        if (sigma == 0.0) return {0.0, true, it};
        Eigen::VectorXcd w = T.entries.adjoint() * u;
        const double wn = w.norm();
        if (wn == 0.0) return {sigma, true, it};
        v = w / wn;

        est.value = sigma;
        est.iterations = it;
        if (prev >= 0.0 && std::abs(sigma - prev) <= 0.5 * tol * sigma) {
            if (++stable >= 3) {
                est.converged = true;
                return est;
            }
        } else {
            stable = 0;
        }
        prev = sigma;
    }
    est.converged = false;
    return est;
}

Eigen::VectorXcd kernel_vector(const OperatorMatrix& T, std::span<const Complex> a) {
    const int m = T.size();
    Eigen::VectorXcd kappa(m);
    for (int i = 0; i < m; ++i) {
        const MultiIndex& alpha = T.basis[static_cast<std::size_t>(i)];
        Complex mono = 1.0;
        for (int d = 0; d < alpha.dimension(); ++d)
            for (int p = 0; p < alpha[d]; ++p) mono *= std::conj(a[static_cast<std::size_t>(d)]);
        kappa(i) = mono * std::exp(-0.5 * T.model.log_weight(alpha));
    }
    return kappa;
}

Eigen::VectorXcd adjoint_applied_to_kernel(const OperatorMatrix& T, std::span<const Complex> a) {
    return T.entries.adjoint() * kernel_vector(T, a);
}

TruncSeries reciprocal_series(const TruncSeries& phi, int D) {
    const Complex c0 = phi.coefficient(MultiIndex::zero(phi.dimension()));
    if (c0 == Complex(0.0))
        throw std::invalid_argument("reciprocal_series: symbol vanishes at the origin");

    // phi * psi = 1 degree by degree: psi_k = -(1/c0) sum_{j=1}^{k} phi_j psi_{k-j}.
    TruncSeries psi = TruncSeries::constant(phi.dimension(), D, 1.0 / c0);
    std::vector<TruncSeries> phi_parts;
    for (int j = 0; j <= std::min(D, phi.max_term_degree()); ++j)
        phi_parts.push_back(homogeneous_part(phi.with_truncation(D), j));

    for (int k = 1; k <= D; ++k) {
        TruncSeries acc(phi.dimension(), D);
        for (int j = 1; j <= k && j < static_cast<int>(phi_parts.size()); ++j)
            acc = add(acc, multiply(phi_parts[static_cast<std::size_t>(j)],
                                    homogeneous_part(psi, k - j), D));
        for (const auto& [alpha, c] : acc.terms())
            if (alpha.degree() == k) psi.set_coefficient(alpha, -c / c0);
    }
    return psi;
}

}  // namespace hsball
