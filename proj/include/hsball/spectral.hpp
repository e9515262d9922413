#pragma once

#include <optional>
#include <stdexcept>

#include "hsball/operator_matrix.hpp"
#include "hsball/sampling.hpp"

namespace hsball {

struct GridRegion {
    double re_min = -1.5, re_max = 1.5;
    double im_min = -1.5, im_max = 1.5;
    int resolution = 201;  // points per axis

    void validate() const;
    Complex point(int ix, int iy) const;
};

struct SminOptions {
    double tol = 1e-4;        // relative tolerance of the estimate
    int max_iterations = 2000;
    int threads = 0;          // 0 = resolve from HS_THREADS / hardware
};

/// Scalar field of smallest singular values of (lambda I - T) over a grid.
/// Row-major storage: index = iy * resolution + ix. Non-convergent points are
/// flagged, never silently dropped.
struct SminField {
    GridRegion grid;
    std::vector<double> values;
    std::vector<std::uint8_t> converged;
    std::size_t non_converged = 0;
};

/// Smallest singular value of (lambda I - T) by inverse power iteration with
/// triangular-aware solves. The compression is lower triangular in the graded
/// basis, so its eigenvalues are useless for spectra; resolvent sublevel sets
/// are the finite-dimensional surrogate computed here.
double smin_at(const OperatorMatrix& T, Complex lambda, double tol = 1e-6,
               int max_iterations = 4000, bool* converged_out = nullptr);

SminField smin_field(const OperatorMatrix& T, const GridRegion& grid,
                     const SminOptions& options = {});

/// Image cloud {phi(z_j)} over deterministic low-discrepancy ball samples.
std::vector<Complex> spectrum_image(const TruncSeries& phi, std::size_t samples,
                                    std::uint64_t seed);

/// For each radius r, the image of phi over the shell {r < |z| < 1}. Radii
/// must be strictly increasing with the last one below 1.
std::vector<std::vector<Complex>> essential_cluster(const TruncSeries& phi,
                                                    const std::vector<double>& radii,
                                                    std::size_t samples, std::uint64_t seed);

struct WindingError : std::runtime_error {
    explicit WindingError(const std::string& what) : std::runtime_error(what) {}
};

/// Winding number of t -> phi(r e^{2 pi i t}) around 0, from summed
/// principal-branch argument increments with adaptive refinement until every
/// increment is below pi/2. Throws WindingError when the curve passes too
/// close to 0 for refinement to certify an integer. Requires n = 1 and
/// min_samples >= 64.
int winding_number(const TruncSeries& phi, double radius, int min_samples = 256);

enum class FredholmKind { invertible, fredholm, not_fredholm, inconclusive };

struct FredholmVerdict {
    FredholmKind kind = FredholmKind::inconclusive;
    std::optional<int> index;            // set for invertible / fredholm
    std::optional<double> passing_radius;
    std::vector<double> probe_radii;
    std::vector<double> min_modulus;     // min |lambda - phi| per probe shell
    double delta = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Sampled Fredholm test for lambda I - M_phi: passes when the shell minimum
/// of |lambda - phi| clears delta at some probe radius. For n = 1 the index is
/// minus the winding number of lambda - phi at the first passing radius; a
/// zero winding upgrades the verdict to invertible. For n > 1 a passing probe
/// yields the invertible verdict with index 0. Shell minima inside
/// (delta/2, delta) at every probe are reported as inconclusive, never
/// silently classified.
FredholmVerdict fredholm_index(const TruncSeries& phi, Complex lambda, const SpaceModel& model,
                               std::vector<double> probe_radii = {0.9, 0.99, 0.999},
                               double delta = 1e-3, std::size_t samples = 20000,
                               std::uint64_t seed = 1);

}  // namespace hsball
