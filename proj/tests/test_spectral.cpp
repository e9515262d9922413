#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "hsball/spectral.hpp"
#include "hsball/symbol_parser.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace hsball;
using testutil::random_root_separated_poly;
using testutil::roots_inside;

namespace {

double svd_smin(const Eigen::MatrixXcd& A) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace

TEST_CASE("smin of the zero operator is the modulus of lambda") {
    const SpaceModel model(1, 0.0);
    const OperatorMatrix T = build_matrix(TruncSeries(1, 10), model, 10);
    CHECK(smin_at(T, Complex(0.3, 0.4)) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("smin vanishes at the diagonal value of a shift") {
    const SpaceModel model(1, 0.0);
    const OperatorMatrix T = build_matrix(TruncSeries::coordinate(1, 30, 0), model, 30);
    CHECK(smin_at(T, Complex(0.0)) == 0.0);
}

TEST_CASE("smin dominates the distance to the norm ball") {
    const SpaceModel model(1, 1.0);
    const OperatorMatrix T = build_matrix(TruncSeries::coordinate(1, 40, 0), model, 40);
    const double norm = operator_norm(T, 1e-8).value;
    CHECK(smin_at(T, Complex(2.0)) >= 2.0 - norm - 1e-9);
}

TEST_CASE("triangular inverse iteration matches dense SVD") {
    std::mt19937 rng(2024);
    const SpaceModel model(1, 0.5);
    const TruncSeries phi = parse_symbol("0.4+z-0.3i*z^2+0.2*z^3", 1).with_truncation(25);
    const OperatorMatrix T = build_matrix(phi, model, 25);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(T.size(), T.size());
    for (int trial = 0; trial < 12; ++trial) {
        const Complex lambda{-2.0 + 4.0 * testutil::draw_unit(rng),
                             -2.0 + 4.0 * testutil::draw_unit(rng)};
        bool converged = false;
        const double fast = smin_at(T, lambda, 1e-10, 20000, &converged);
        const double exact = svd_smin(lambda * I - T.entries);
        CHECK(converged);
        CHECK(fast == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("smin field is 1-Lipschitz and its sublevel sets nest") {
    const SpaceModel model(1, 0.5);
    const TruncSeries phi = parse_symbol("z^2-z", 1).with_truncation(40);
    const OperatorMatrix T = build_matrix(phi, model, 40);
    GridRegion grid{-1.0, 1.2, -0.9, 1.1, 13};
    SminOptions opts;
    opts.tol = 1e-9;
    opts.max_iterations = 20000;
    const SminField field = smin_field(T, grid, opts);
    CHECK(field.non_converged == 0);

    for (int i = 0; i < grid.resolution * grid.resolution; ++i) {
        for (int j = i + 1; j < grid.resolution * grid.resolution; ++j) {
            const Complex li = grid.point(i % grid.resolution, i / grid.resolution);
            const Complex lj = grid.point(j % grid.resolution, j / grid.resolution);
            const double ds = std::abs(field.values[static_cast<std::size_t>(i)] -
                                       field.values[static_cast<std::size_t>(j)]);
            CHECK(ds <= std::abs(li - lj) + 1e-6);
        }
    }

    const double eps1 = 0.05, eps2 = 0.2;
    for (std::size_t i = 0; i < field.values.size(); ++i)
        if (field.values[i] < eps1) CHECK(field.values[i] < eps2);
}

TEST_CASE("shift pseudospectra trap the unit disk at moderate degree") {
    for (double beta : {0.0, 1.0}) {
        const SpaceModel model(1, beta);
        const OperatorMatrix T = build_matrix(TruncSeries::coordinate(1, 150, 0), model, 150);
        GridRegion grid{-1.5, 1.5, -1.5, 1.5, 41};
        SminOptions opts;
        opts.tol = 1e-5;
        const SminField field = smin_field(T, grid, opts);
        const double eps = 1e-2;
        for (int iy = 0; iy < grid.resolution; ++iy)
            for (int ix = 0; ix < grid.resolution; ++ix) {
                const Complex lambda = grid.point(ix, iy);
                const double v =
                    field.values[static_cast<std::size_t>(iy * grid.resolution + ix)];
                if (std::abs(lambda) <= 0.9) CHECK(v < eps);
                if (std::abs(lambda) >= 1.1) CHECK(v >= eps);
            }
    }
}

TEST_CASE("threaded field evaluation matches sequential exactly") {
    const SpaceModel model(1, 0.5);
    const TruncSeries phi = parse_symbol("z^2+0.3", 1).with_truncation(30);
    const OperatorMatrix T = build_matrix(phi, model, 30);
    GridRegion grid{-1.2, 1.2, -1.2, 1.2, 9};
    SminOptions seq;
    seq.threads = 1;
    SminOptions par;
    par.threads = 4;
    const SminField a = smin_field(T, grid, seq);
    const SminField b = smin_field(T, grid, par);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("image cloud of a constant is a single value") {
    const TruncSeries c = TruncSeries::constant(1, 2, Complex(0.7, -0.1));
    for (const Complex& w : spectrum_image(c, 500, 3))
        CHECK(std::abs(w - Complex(0.7, -0.1)) == 0.0);
}

TEST_CASE("image clouds of z and z^2 fill the disk") {
    const TruncSeries z = TruncSeries::coordinate(1, 2, 0);
    const auto cloud = spectrum_image(z, 40000, 11);
    CHECK(convex_hull_area(cloud) == doctest::Approx(std::numbers::pi).epsilon(0.05));

    const auto cloud2 = spectrum_image(parse_symbol("z^2", 1), 40000, 11);
    CHECK(convex_hull_area(cloud2) == doctest::Approx(std::numbers::pi).epsilon(0.05));
}

TEST_CASE("essential clusters of z hug the circle as the shell tightens") {
    const TruncSeries z = TruncSeries::coordinate(1, 2, 0);
    const auto clouds = essential_cluster(z, {0.9, 0.99}, 30000, 21);
    REQUIRE(clouds.size() == 2);
    for (const Complex& w : clouds[1]) {
        CHECK(std::abs(w) >= 0.99);
        CHECK(std::abs(w) < 1.0);
    }
    CHECK(testutil::hausdorff_to_unit_circle(clouds[1]) <= 0.02);
}

TEST_CASE("essential cluster of a constant is that constant") {
    const TruncSeries c = TruncSeries::constant(1, 2, Complex(-0.3, 0.2));
    const auto clouds = essential_cluster(c, {0.5, 0.999}, 200, 2);
    for (const auto& cloud : clouds)
        for (const Complex& w : cloud) CHECK(std::abs(w - Complex(-0.3, 0.2)) == 0.0);
}

TEST_CASE("first-coordinate shells in the two-ball still fill the disk") {
    const TruncSeries z1 = TruncSeries::coordinate(2, 2, 0);
    const auto clouds = essential_cluster(z1, {0.999}, 40000, 31);
    const double cluster_hull = convex_hull_area(clouds[0]);
    const double image_hull = convex_hull_area(spectrum_image(z1, 40000, 31));
    CHECK(cluster_hull == doctest::Approx(std::numbers::pi).epsilon(0.02));
    CHECK(cluster_hull == doctest::Approx(image_hull).epsilon(0.02));
}

TEST_CASE("winding numbers of canonical curves") {
    const TruncSeries z = TruncSeries::coordinate(1, 5, 0);
    for (double r : {0.2, 0.5, 0.99}) CHECK(winding_number(z, r) == 1);
    CHECK(winding_number(parse_symbol("z-2", 1), 0.99) == 0);
    CHECK(winding_number(parse_symbol("z^2-0.25", 1), 0.9) == 2);
    CHECK(roots_inside(parse_symbol("z^2-0.25", 1), 0.9) == 2);
}

TEST_CASE("winding is stable under sample doubling") {
    const TruncSeries phi = parse_symbol("z^3-0.1*z+0.05", 1);
    const int w256 = winding_number(phi, 0.95, 256);
    CHECK(winding_number(phi, 0.95, 512) == w256);
    CHECK(winding_number(phi, 0.95, 1024) == w256);
}

TEST_CASE("winding refuses curves through zero") {
    CHECK_THROWS_AS(winding_number(parse_symbol("z-0.9", 1), 0.9), WindingError);
}

TEST_CASE("fredholm verdicts for the coordinate symbol") {
    const SpaceModel model(1, 0.5);
    const TruncSeries z = TruncSeries::coordinate(1, 5, 0);

    const FredholmVerdict at0 = fredholm_index(z, Complex(0.0), model);
    CHECK(at0.kind == FredholmKind::fredholm);
    REQUIRE(at0.index.has_value());
    CHECK(*at0.index == -1);

    const FredholmVerdict at2 = fredholm_index(z, Complex(2.0), model);
    CHECK(at2.kind == FredholmKind::invertible);
    CHECK(*at2.index == 0);
}

TEST_CASE("fredholm verdict for two enclosed roots") {
    const SpaceModel model(1, 1.0);
    const TruncSeries phi = parse_symbol("z^2-0.25", 1);
    const FredholmVerdict v = fredholm_index(phi, Complex(0.0), model, {0.9}, 1e-3, 20000, 1);
    CHECK(v.kind == FredholmKind::fredholm);
    CHECK(*v.index == -2);
}

TEST_CASE("boundary-band minima are reported as inconclusive") {
    // The sampled shell minimum sits slightly above the true infimum 0.015,
    // inside the band (delta/2, delta) = (0.01, 0.02).
    const SpaceModel model(1, 0.0);
    const TruncSeries z = TruncSeries::coordinate(1, 5, 0);
    const FredholmVerdict v =
        fredholm_index(z, Complex(1.015, 0.0), model, {0.9}, 0.02, 200000, 1);
    CHECK(v.kind == FredholmKind::inconclusive);
    CHECK_FALSE(v.index.has_value());
}

TEST_CASE("two-ball verdicts: invertible outside, not fredholm on the image") {
    const SpaceModel model(2, 0.5);
    const TruncSeries z1 = TruncSeries::coordinate(2, 5, 0);

    const FredholmVerdict far = fredholm_index(z1, Complex(2.0), model);
    CHECK(far.kind == FredholmKind::invertible);
    CHECK(*far.index == 0);

    // lambda sits in the image of every shell; delta is sized to the sampled
    // resolution of the four-real-dimensional shell.
    const FredholmVerdict inside =
        fredholm_index(z1, Complex(0.5), model, {0.9, 0.99, 0.999}, 0.05, 20000, 1);
    CHECK(inside.kind == FredholmKind::not_fredholm);
}

TEST_CASE("index agrees with the companion-matrix root count") {
    std::mt19937 rng(777);
    const SpaceModel model(1, 0.5);
    for (int trial = 0; trial < 10; ++trial) {
        const TruncSeries phi = random_root_separated_poly(rng);
        const FredholmVerdict v = fredholm_index(phi, Complex(0.0), model, {0.9}, 1e-3, 20000, 1);
        REQUIRE(v.index.has_value());
        CHECK(*v.index == -roots_inside(phi, 0.9));
    }
}
