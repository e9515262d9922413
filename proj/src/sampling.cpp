#include "hsball/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsball {

namespace {

constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

double radical_inverse(std::uint32_t base, std::uint64_t index) {
    double r = 0.0;
    double digit = 1.0 / base;
    while (index > 0) {
        r += digit * static_cast<double>(index % base);
        index /= base;
        digit /= base;
    }
    return r;
}

std::vector<std::vector<Complex>> sample_shell(int n, double inner_radius, std::size_t count,
                                               std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_shell: n must be >= 1");
    if (inner_radius < 0.0 || inner_radius >= 1.0)
        throw std::invalid_argument("sample_shell: inner radius must lie in [0, 1)");
    const int dims = 2 * n;  // radial + (n-1) direction + n phases
    if (dims > static_cast<int>(std::size(kPrimes)))
        throw std::invalid_argument("sample_shell: dimension too large");

    // |z|^2 has density n s^{n-1} on (0,1); restricted to (r^2, 1) via the cdf.
    const double r2n = std::pow(inner_radius, 2.0 * n);
    const std::uint64_t start = 4096 + seed * 0x9E3779B9ull;

    std::vector<std::vector<Complex>> points;
    points.reserve(count);
    std::vector<double> u(static_cast<std::size_t>(dims));
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t idx = start + i;
        for (int d = 0; d < dims; ++d)
            u[static_cast<std::size_t>(d)] = radical_inverse(kPrimes[d], idx);

        const double S = std::pow(r2n + u[0] * (1.0 - r2n), 1.0 / n);

        // Spacings of n-1 sorted uniforms are uniform on the unit simplex,
        // giving the squared-modulus split across coordinates.
        std::vector<double> cuts(u.begin() + 1, u.begin() + n);
        std::sort(cuts.begin(), cuts.end());
        std::vector<Complex> z(static_cast<std::size_t>(n));
        double prev = 0.0;
        for (int j = 0; j < n; ++j) {
            const double next = (j == n - 1) ? 1.0 : cuts[static_cast<std::size_t>(j)];
            const double share = next - prev;
            prev = next;
            const double theta =
                2.0 * std::numbers::pi * u[static_cast<std::size_t>(n + j)];
            z[static_cast<std::size_t>(j)] =
                std::sqrt(S * share) * Complex(std::cos(theta), std::sin(theta));
        }
        points.push_back(std::move(z));
    }
    return points;
}

double convex_hull_area(const std::vector<Complex>& points) {
    if (points.size() < 3) return 0.0;
    std::vector<Complex> p = points;
    std::sort(p.begin(), p.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return 0.0;

    auto cross = [](const Complex& o, const Complex& a, const Complex& b) {
        return (a.real() - o.real()) * (b.imag() - o.imag()) -
               (a.imag() - o.imag()) * (b.real() - o.real());
    };

    // Andrew's monotone chain.
    std::vector<Complex> hull(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
        hull[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
        hull[k++] = p[i];
    }
    hull.resize(k);

    double area2 = 0.0;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        area2 += hull[i].real() * hull[i + 1].imag() - hull[i + 1].real() * hull[i].imag();
    area2 += hull.back().real() * hull.front().imag() - hull.front().real() * hull.back().imag();
    return 0.5 * std::abs(area2);
}

}  // namespace hsball
