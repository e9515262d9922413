#pragma once

#include <Eigen/Dense>
#include <span>

#include "hsball/space.hpp"

namespace hsball {

/// Compression of a multiplication operator to polynomial degrees <= D in the
/// graded orthonormal monomial basis e_alpha = z^alpha / sqrt(w_alpha).
/// Entry (alpha', alpha) = c_{alpha'-alpha} sqrt(w_alpha' / w_alpha), so the
/// matrix is lower triangular in the graded order with constant diagonal
/// phi(0). Immutable after construction.
struct OperatorMatrix {
    SpaceModel model;
    int D = 0;
    TruncSeries symbol;
    std::vector<MultiIndex> basis;
    Eigen::MatrixXcd entries;

    int size() const { return static_cast<int>(basis.size()); }
};

/// Requires deg(phi) <= D and matching dimensions. Exact for input vectors of
/// degree <= D - deg(phi).
OperatorMatrix build_matrix(const TruncSeries& phi, const SpaceModel& model, int D);

struct NormEstimate {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Largest singular value by power iteration on T*T, started from the
/// all-ones vector. Non-convergence within the iteration cap is reported via
/// the flag, never silently.
NormEstimate operator_norm(const OperatorMatrix& T, double tol, int max_iterations = 20000);

/// Coefficient vector of the degree-<=D kernel section at a in the
/// orthonormal basis: component alpha is conj(a^alpha) / sqrt(w_alpha).
Eigen::VectorXcd kernel_vector(const OperatorMatrix& T, std::span<const Complex> a);

/// T* applied to the kernel vector at a; approximately conj(phi(a)) times the
/// kernel vector, up to the truncation tail.
Eigen::VectorXcd adjoint_applied_to_kernel(const OperatorMatrix& T, std::span<const Complex> a);

/// Degree-<=D power series of 1/phi from the coefficient recursion; requires
/// phi(0) != 0. multiply(phi, result, D) is the constant 1 through degree D.
TruncSeries reciprocal_series(const TruncSeries& phi, int D);

}  // namespace hsball
