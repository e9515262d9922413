#include "hsball/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "hsball/parallel.hpp"

namespace hsball {

void GridRegion::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max))
        throw std::invalid_argument("GridRegion: degenerate rectangle");
    if (resolution < 2) throw std::invalid_argument("GridRegion: resolution must be >= 2");
}

Complex GridRegion::point(int ix, int iy) const {
    const double dre = (re_max - re_min) / (resolution - 1);
    const double dim = (im_max - im_min) / (resolution - 1);
    return {re_min + ix * dre, im_min + iy * dim};
}

namespace {

constexpr double kGrowthCap = 1e140;

// Strictly-lower-triangular entries of the compression, kept per column so
// that (lambda I - T) admits O(nnz) forward and adjoint substitution. The
// diagonal of T is the constant phi(0).
struct TriangularAction {
    int m = 0;
    Complex diag;
    std::vector<std::vector<std::pair<int, Complex>>> cols;
};

TriangularAction make_action(const OperatorMatrix& T) {
    TriangularAction act;
    act.m = T.size();
    act.diag = T.symbol.coefficient(MultiIndex::zero(T.symbol.dimension()));
    act.cols.resize(static_cast<std::size_t>(act.m));

    std::map<MultiIndex, int> index_of;
    for (int i = 0; i < act.m; ++i) index_of.emplace(T.basis[static_cast<std::size_t>(i)], i);
    std::vector<double> logw(static_cast<std::size_t>(act.m));
    for (int i = 0; i < act.m; ++i)
        logw[static_cast<std::size_t>(i)] =
            T.model.log_weight(T.basis[static_cast<std::size_t>(i)]);

    for (int col = 0; col < act.m; ++col) {
        const MultiIndex& alpha = T.basis[static_cast<std::size_t>(col)];
        for (const auto& [gamma, c] : T.symbol.terms()) {
            if (gamma.degree() == 0 || c == Complex(0.0)) continue;
            if (alpha.degree() + gamma.degree() > T.D) continue;
            const int row = index_of.at(alpha.plus(gamma));
            act.cols[static_cast<std::size_t>(col)].emplace_back(
                row, c * std::exp(0.5 * (logw[static_cast<std::size_t>(row)] -
                                         logw[static_cast<std::size_t>(col)])));
        }
    }
    return act;
}

// Solve (lambda I - T) y = b by column-oriented forward substitution.
// Returns false when entries outgrow the cap (the resolvent is then so large
// that smin is numerically zero).
bool forward_solve(const TriangularAction& act, Complex d, std::vector<Complex>& y) {
    for (int k = 0; k < act.m; ++k) {
        auto& yk = y[static_cast<std::size_t>(k)];
        yk /= d;
        if (std::abs(yk) > kGrowthCap) return false;
        for (const auto& [row, val] : act.cols[static_cast<std::size_t>(k)])
            y[static_cast<std::size_t>(row)] += val * yk;
    }
    return true;
}

// Solve (lambda I - T)^* y = b.
bool adjoint_solve(const TriangularAction& act, Complex d, std::vector<Complex>& y) {
    const Complex dc = std::conj(d);
    for (int k = act.m - 1; k >= 0; --k) {
        Complex s = y[static_cast<std::size_t>(k)];
        for (const auto& [row, val] : act.cols[static_cast<std::size_t>(k)])
            s += std::conj(val) * y[static_cast<std::size_t>(row)];
        s /= dc;
        if (std::abs(s) > kGrowthCap) return false;
        y[static_cast<std::size_t>(k)] = s;
    }
    return true;
}

double norm_of(const std::vector<Complex>& v) {
    double t = 0.0;
    for (const Complex& x : v) t += std::norm(x);
    return std::sqrt(t);
}

double smin_action(const TriangularAction& act, Complex lambda, double tol, int maxit,
                   bool* converged_out) {
    auto done = [&](double value, bool flag) {
        if (converged_out) *converged_out = flag;
        return value;
    };

    const Complex d = lambda - act.diag;
    // smin <= |d| (the last basis column of lambda I - T has norm |d|), so a
    // vanishing diagonal settles the value outright.
    if (std::abs(d) < 1e-200) return done(std::abs(d), true);

    // Deterministic pseudo-random start; bit-identical across runs and thread
    // layouts.
    std::vector<Complex> v(static_cast<std::size_t>(act.m));
    std::uint64_t state = 0x243F6A8885A308D3ull;
    for (auto& x : v) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double a = static_cast<double>(state >> 11) / 9007199254740992.0;
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double b = static_cast<double>(state >> 11) / 9007199254740992.0;
        x = Complex(2.0 * a - 1.0, 2.0 * b - 1.0);
    }
    {
        const double nv = norm_of(v);
        for (auto& x : v) x /= nv;
    }

    double sigma_prev = -1.0;
    int stable = 0;
    for (int it = 1; it <= maxit; ++it) {
        // Power step for ((A^* A)^{-1}): x = A^{-*} v, y = A^{-1} x. With v a
        // unit vector, ||x||^2 is the Rayleigh quotient, so 1/||x|| decreases
        // monotonically to smin.
        std::vector<Complex> x = v;
        if (!adjoint_solve(act, d, x)) return done(0.0, true);
        const double g1 = norm_of(x);
        if (!(g1 > 0.0) || !std::isfinite(g1)) return done(0.0, true);
        if (g1 > kGrowthCap) return done(1.0 / g1, true);
        const double sigma = 1.0 / g1;

        if (!forward_solve(act, d, x)) return done(0.0, true);
        const double g2 = norm_of(x);
        if (!(g2 > 0.0) || !std::isfinite(g2)) return done(0.0, true);
        for (auto& t : x) t /= g2;
        v = std::move(x);

        if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= tol * sigma) {
            if (++stable >= 2) return done(sigma, true);
        } else {
            stable = 0;
        }
        sigma_prev = sigma;
    }
    return done(sigma_prev, false);
}

}  // namespace

double smin_at(const OperatorMatrix& T, Complex lambda, double tol, int max_iterations,
               bool* converged_out) {
    const TriangularAction act = make_action(T);
    return smin_action(act, lambda, tol, max_iterations, converged_out);
}

SminField smin_field(const OperatorMatrix& T, const GridRegion& grid,
                     const SminOptions& options) {
    grid.validate();
    const TriangularAction act = make_action(T);
    const std::size_t total =
        static_cast<std::size_t>(grid.resolution) * static_cast<std::size_t>(grid.resolution);

    SminField field;
    field.grid = grid;
    field.values.assign(total, 0.0);
    field.converged.assign(total, 0);

    parallel_for(total, options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int iy = static_cast<int>(idx) / grid.resolution;
            const int ix = static_cast<int>(idx) % grid.resolution;
            bool ok = false;
            field.values[idx] =
                smin_action(act, grid.point(ix, iy), options.tol, options.max_iterations, &ok);
            field.converged[idx] = ok ? 1 : 0;
        }
    });
    for (std::size_t i = 0; i < total; ++i)
        if (!field.converged[i]) ++field.non_converged;
    return field;
}

std::vector<Complex> spectrum_image(const TruncSeries& phi, std::size_t samples,
                                    std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("spectrum_image: samples must be >= 1");
    const auto pts = sample_ball(phi.dimension(), samples, seed);
    std::vector<Complex> out;
    out.reserve(pts.size());
    for (const auto& z : pts) out.push_back(evaluate(phi, z));
    return out;
}

std::vector<std::vector<Complex>> essential_cluster(const TruncSeries& phi,
                                                    const std::vector<double>& radii,
                                                    std::size_t samples, std::uint64_t seed) {
    if (radii.empty()) throw std::invalid_argument("essential_cluster: no radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0 || radii[i] >= 1.0)
            throw std::invalid_argument("essential_cluster: radii must lie in (0, 1)");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("essential_cluster: radii must be strictly increasing");
    }
    std::vector<std::vector<Complex>> clouds;
    clouds.reserve(radii.size());
    for (const double r : radii) {
        const auto pts = sample_shell(phi.dimension(), r, samples, seed);
        std::vector<Complex> cloud;
        cloud.reserve(pts.size());
        for (const auto& z : pts) cloud.push_back(evaluate(phi, z));
        clouds.push_back(std::move(cloud));
    }
    return clouds;
}

namespace {

struct CurvePoint {
    double t;
    Complex w;
};

}  // namespace

int winding_number(const TruncSeries& phi, double radius, int min_samples) {
    if (phi.dimension() != 1)
        throw std::invalid_argument("winding_number: defined for n = 1 only");
    if (radius <= 0.0 || radius >= 1.0)
        throw std::invalid_argument("winding_number: radius must lie in (0, 1)");
    if (min_samples < 64) throw std::invalid_argument("winding_number: need >= 64 samples");

    const auto at = [&](double t) {
        const double ang = 2.0 * std::numbers::pi * t;
        const Complex z(radius * std::cos(ang), radius * std::sin(ang));
        const Complex w = evaluate(phi, std::span<const Complex>(&z, 1));
        if (std::abs(w) < 1e-13)
            throw WindingError("winding_number: curve passes through 0 within tolerance");
        return w;
    };

    // Argument increments are taken segment by segment on the principal
    // branch; any segment turning by pi/2 or more is split, which rules out
    // 2 pi aliasing under the sampling hypothesis.
    constexpr double kMaxTurn = std::numbers::pi / 2.0;
    constexpr int kMaxDepth = 48;

    struct Rec {
        const decltype(at)& f;
        double operator()(double t0, Complex w0, double t1, Complex w1, int depth) const {
            const double turn = std::arg(w1 / w0);
            if (std::abs(turn) < kMaxTurn) return turn;
            if (depth >= kMaxDepth)
                throw WindingError(
                    "winding_number: refinement failed, curve passes too near 0");
            const double tm = 0.5 * (t0 + t1);
            const Complex wm = f(tm);
            return (*this)(t0, w0, tm, wm, depth + 1) + (*this)(tm, wm, t1, w1, depth + 1);
        }
    } rec{at};

    double total = 0.0;
    Complex w_prev = at(0.0);
    const Complex w_first = w_prev;
    for (int j = 1; j <= min_samples; ++j) {
        const double t0 = static_cast<double>(j - 1) / min_samples;
        const double t1 = static_cast<double>(j) / min_samples;
        const Complex w_next = (j == min_samples) ? w_first : at(t1);
        total += rec(t0, w_prev, t1, w_next, 0);
        w_prev = w_next;
    }

    const double turns = total / (2.0 * std::numbers::pi);
    const long long rounded = std::llround(turns);
    if (std::abs(turns - static_cast<double>(rounded)) > 0.25)
        throw WindingError("winding_number: accumulated argument is not close to an integer");
    return static_cast<int>(rounded);
}

FredholmVerdict fredholm_index(const TruncSeries& phi, Complex lambda, const SpaceModel& model,
                               std::vector<double> probe_radii, double delta,
                               std::size_t samples, std::uint64_t seed) {
    if (phi.dimension() != model.dimension())
        throw std::invalid_argument("fredholm_index: symbol/model dimension mismatch");
    if (delta <= 0.0) throw std::invalid_argument("fredholm_index: delta must be positive");
    if (probe_radii.empty()) throw std::invalid_argument("fredholm_index: no probe radii");
    std::sort(probe_radii.begin(), probe_radii.end());

    const int n = phi.dimension();
    const TruncSeries psi =
        subtract(TruncSeries::constant(n, phi.truncation_degree(), lambda), phi);

    FredholmVerdict verdict;
    verdict.probe_radii = probe_radii;
    verdict.delta = delta;
    verdict.samples = samples;
    verdict.seed = seed;

    bool boundary_case = false;
    for (const double r : probe_radii) {
        const auto pts = sample_shell(n, r, samples, seed);
        double min_mod = std::numeric_limits<double>::infinity();
        for (const auto& z : pts) min_mod = std::min(min_mod, std::abs(evaluate(psi, z)));
        verdict.min_modulus.push_back(min_mod);

        if (min_mod >= delta) {
            verdict.passing_radius = r;
            if (n > 1) {
                verdict.kind = FredholmKind::invertible;
                verdict.index = 0;
            } else {
                const int wind = winding_number(psi, r);
                verdict.index = -wind;
                verdict.kind = wind == 0 ? FredholmKind::invertible : FredholmKind::fredholm;
            }
            return verdict;
        }
        if (min_mod > 0.5 * delta) boundary_case = true;
    }
    verdict.kind = boundary_case ? FredholmKind::inconclusive : FredholmKind::not_fredholm;
    return verdict;
}

}  // namespace hsball
