#include <doctest.h>

#include <cmath>

#include "hsball/peak.hpp"
#include "hsball/space.hpp"

using namespace hsball;

namespace {

// Series route: expand ((1 + conj(zeta) z)/2)^k and take the model norm.
double norm_sq_via_series(int k, double beta, Complex zeta) {
    TruncSeries base(1, k == 0 ? 0 : k);
    base.set_coefficient(MultiIndex({0}), 0.5);
    if (k > 0) base.set_coefficient(MultiIndex({1}), 0.5 * std::conj(zeta));
    const TruncSeries fk = power(base, k, std::max(k, 1));
    const SpaceModel model(1, beta);
    const double n = model.norm(fk);
    return n * n;
}

}  // namespace

TEST_CASE("peak norms at small k") {
    CHECK(peak_norm_sq(0, 1.7) == 1.0);
    CHECK(peak_norm_sq(1, 0.0) == doctest::Approx(0.5));
    CHECK(peak_norm_sq(1, 1.0) == doctest::Approx(0.5));
    CHECK(peak_norm_sq(2, 1.0) == doctest::Approx(9.0 / 16.0));
}

TEST_CASE("peak norm agrees with the expanded series route") {
    for (double beta : {0.0, 0.6, 1.0, 1.5}) {
        for (int k : {1, 5, 17, 40, 60}) {
            const double direct = peak_norm_sq(k, beta);
            const double expanded = norm_sq_via_series(k, beta, 1.0);
            CHECK(direct == doctest::Approx(expanded).epsilon(1e-10));
        }
    }
}

TEST_CASE("peak norm does not depend on the boundary point") {
    const Complex zetas[] = {Complex(1.0), Complex(0.0, 1.0),
                             std::polar(1.0, std::acos(-1.0) / 7.0)};
    for (int k : {3, 20, 45}) {
        const double reference = norm_sq_via_series(k, 1.0, zetas[0]);
        for (const Complex& zeta : zetas)
            CHECK(norm_sq_via_series(k, 1.0, zeta) == doctest::Approx(reference).epsilon(1e-12));
    }
}

TEST_CASE("log-space evaluation takes over smoothly past k = 300") {
    for (double beta : {0.0, 1.0}) {
        const double left = peak_norm_sq(300, beta);
        const double right = peak_norm_sq(301, beta);
        // consecutive values of a slowly varying sequence
        CHECK(right / left > 0.5);
        CHECK(right / left < 2.0);
        CHECK(std::isfinite(peak_norm_sq(400, beta)));
    }
}

TEST_CASE("norm ratios stay above their frozen floors") {
    // floors observed from the exact formula, then frozen
    struct Floor {
        double beta;
        double c;
    };
    for (const Floor f : {Floor{0.6, 0.35}, Floor{1.0, 0.18}, Floor{1.5, 0.09},
                          Floor{2.0, 0.048}}) {
        const auto ratios = peak_norm_ratios(f.beta, 200);
        for (const auto& r : ratios) CHECK(r.ratio >= f.c);
    }
}

TEST_CASE("ratio sequence is eventually non-decreasing") {
    const auto ratios = peak_norm_ratios(1.0, 200);
    for (std::size_t i = 10; i + 1 < ratios.size(); ++i)
        CHECK(ratios[i + 1].ratio >= ratios[i].ratio * (1.0 - 1e-12));
}

TEST_CASE("ratio value at the base point for beta = 0") {
    // k = 1: norm^2 = 1/2 against (k+1)^{-1} = 1/2
    const auto ratios = peak_norm_ratios(0.0, 10);
    CHECK(ratios[0].k == 1);
    CHECK(ratios[0].ratio == doctest::Approx(1.0));
}

TEST_CASE("observed growth exponents") {
    struct Slope {
        double beta;
        double expected;
    };
    for (const Slope s : {Slope{0.0, -0.5}, Slope{1.0, 1.5}, Slope{0.25, 0.0}}) {
        const double slope = observed_growth_exponent(s.beta, 200);
        CHECK(std::abs(slope - s.expected) <= 0.1);
    }
}

TEST_CASE("normalized peak values decay at interior points") {
    const auto probe = weak_decay_probe(1.0, Complex(0.9, 0.0), 200);
    CHECK(probe.size() == 200);
    CHECK(probe[199] <= 1e-3);
    for (std::size_t k = 20; k + 1 < probe.size(); ++k) CHECK(probe[k + 1] <= probe[k]);

    const auto at0 = weak_decay_probe(1.0, Complex(0.0, 0.0), 60);
    for (std::size_t i = 1; i < at0.size(); ++i) CHECK(at0[i] < at0[i - 1]);
    CHECK(at0[59] < 1e-15);

    const auto antipode = weak_decay_probe(0.7, Complex(-1.0, 0.0), 30);
    for (double v : antipode) CHECK(v == 0.0);
}
