// hsball command-line front end: one subcommand per experiment family, every
// randomized quantity controlled by --seed, reports written as JSON verdicts
// or plot-ready CSV fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "hsball/config.hpp"
#include "hsball/identity.hpp"
#include "hsball/operator_matrix.hpp"
#include "hsball/parallel.hpp"
#include "hsball/peak.hpp"
#include "hsball/reports.hpp"
#include "hsball/space.hpp"
#include "hsball/spectral.hpp"
#include "hsball/symbol_parser.hpp"

namespace {

using namespace hsball;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitFlagged = 3;
constexpr int kExitError = 70;

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stod(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::vector<Complex> parse_point(const std::string& text, int n) {
    std::vector<Complex> out;
    std::size_t pos = 0;
    while (pos <= text.size() && out.size() < static_cast<std::size_t>(n) + 1) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(parse_complex(text.substr(pos, next - pos)));
        pos = next + 1;
        if (pos > text.size()) break;
    }
    if (static_cast<int>(out.size()) != n)
        throw std::invalid_argument("point has " + std::to_string(out.size()) +
                                    " components, expected " + std::to_string(n));
    return out;
}

std::string default_out(const ExperimentConfig& cfg) {
    return cfg.command + (cfg.format == "csv" ? ".csv" : ".json");
}

// The symbol comes from --phi-json (series interchange file) when given,
// otherwise from the --phi expression.
TruncSeries load_symbol(const ExperimentConfig& cfg) {
    if (!cfg.phi_json.empty()) {
        std::ifstream in(cfg.phi_json);
        if (!in) throw std::runtime_error("cannot open series file: " + cfg.phi_json);
        json j;
        in >> j;
        const TruncSeries f = series_from_json(j);
        if (f.dimension() != cfg.n)
            throw std::runtime_error("series file dimension " + std::to_string(f.dimension()) +
                                     " does not match --n " + std::to_string(cfg.n));
        return f;
    }
    return parse_symbol(cfg.phi, cfg.n);
}

void emit(const ExperimentConfig& cfg, const std::string& content, const std::string& summary) {
    const std::string path = cfg.out.empty() ? default_out(cfg) : cfg.out;
    write_text_file(path, content);
    std::cout << cfg.command << ": " << summary << " -> " << path << "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json base_report(const ExperimentConfig& cfg) {
    json j;
    j["config"] = cfg;
    j["flags"] = json::array();
    return j;
}

// ---------------------------------------------------------------- identity

int run_verify_identity(ExperimentConfig cfg) {
    std::mt19937 rng(static_cast<std::uint32_t>(cfg.seed));
    json first_failure;
    bool all_zero = true;
    for (int N = 1; N <= cfg.nmax && all_zero; ++N) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const RationalPoly f = random_rational_poly(rng, cfg.max_degree);
            RationalPoly g = random_rational_poly(rng, cfg.max_degree);
            if (g.is_zero()) g = RationalPoly::constant(1);
            const RationalPoly residual =
                derivative_identity_residual(f, g, static_cast<unsigned>(N));
            if (!residual.is_zero()) {
                all_zero = false;
                first_failure = {{"N", N},
                                 {"trial", trial},
                                 {"f", f.to_string()},
                                 {"g", g.to_string()},
                                 {"residual", residual.to_string()}};
                break;
            }
        }
    }
    json j = base_report(cfg);
    j["N"] = cfg.nmax;
    j["trials"] = cfg.trials;
    j["all_zero"] = all_zero;
    j["first_failure"] = all_zero ? json(nullptr) : first_failure;
    emit(cfg, dump(j), std::string("all_zero=") + (all_zero ? "true" : "false"));
    return all_zero ? 0 : 1;
}

int run_quotient_check(ExperimentConfig cfg) {
    std::mt19937 rng(static_cast<std::uint32_t>(cfg.seed));
    json first_failure;
    bool all_equal = true;
    for (int N = 1; N <= cfg.nmax && all_equal; ++N) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const RationalPoly f = random_rational_poly(rng, cfg.max_degree);
            RationalPoly g = random_rational_poly(rng, cfg.max_degree);
            if (g.is_zero()) g = RationalPoly::constant(1);
            const PolyFraction closed = quotient_derivative(f, g, static_cast<unsigned>(N));
            const PolyFraction steps = quotient_derivative_by_steps(f, g, static_cast<unsigned>(N));
            if (!cross_equal(closed, steps)) {
                all_equal = false;
                first_failure = {{"N", N}, {"trial", trial}, {"f", f.to_string()},
                                 {"g", g.to_string()}};
                break;
            }
        }
    }
    json j = base_report(cfg);
    j["N"] = cfg.nmax;
    j["trials"] = cfg.trials;
    j["all_equal"] = all_equal;
    j["first_failure"] = all_equal ? json(nullptr) : first_failure;
    emit(cfg, dump(j), std::string("all_equal=") + (all_equal ? "true" : "false"));
    return all_equal ? 0 : 1;
}

// ------------------------------------------------------------------- space

int run_space_norm(ExperimentConfig cfg) {
    const TruncSeries f = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const double value = model.norm(f);
    json j = base_report(cfg);
    j["beta"] = cfg.beta;
    j["n"] = cfg.n;
    j["value"] = value;
    j["tolerance"] = 0.0;
    emit(cfg, dump(j), "norm=" + format_double(value));
    return 0;
}

int run_kernel_eval(ExperimentConfig cfg) {
    const SpaceModel model(cfg.n, cfg.beta);
    const auto z = parse_point(cfg.point_z, cfg.n);
    const auto w = parse_point(cfg.point_w, cfg.n);
    const Complex value = model.kernel(z, w, cfg.tol);
    json j = base_report(cfg);
    j["beta"] = cfg.beta;
    j["n"] = cfg.n;
    j["value"] = {{"re", value.real()}, {"im", value.imag()}};
    j["tolerance"] = cfg.tol;
    emit(cfg, dump(j),
         "K=" + format_double(value.real()) + "+" + format_double(value.imag()) + "i");
    return 0;
}

int run_prop2_check(ExperimentConfig cfg) {
    const TruncSeries f = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const double value = norm_equivalence_ratio(f, model, cfg.N);
    json j = base_report(cfg);
    j["beta"] = cfg.beta;
    j["n"] = cfg.n;
    j["value"] = value;
    j["tolerance"] = 0.0;
    emit(cfg, dump(j), "ratio=" + format_double(value));
    return 0;
}

// ---------------------------------------------------------------- operator

int run_op_norm(ExperimentConfig cfg) {
    const TruncSeries phi = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const OperatorMatrix T = build_matrix(phi, model, cfg.degree);
    const NormEstimate est = operator_norm(T, cfg.tol);
    json j = base_report(cfg);
    j["beta"] = cfg.beta;
    j["n"] = cfg.n;
    j["degree"] = cfg.degree;
    j["value"] = est.value;
    j["tolerance"] = cfg.tol;
    j["converged"] = est.converged;
    if (!est.converged) j["flags"].push_back("power_iteration_did_not_converge");
    emit(cfg, dump(j), "norm=" + format_double(est.value));
    return est.converged ? 0 : kExitFlagged;
}

int run_op_matrix(ExperimentConfig cfg) {
    cfg.format = "csv";
    const TruncSeries phi = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const OperatorMatrix T = build_matrix(phi, model, cfg.degree);
    std::string csv = "row,col,re,im\n";
    for (int r = 0; r < T.size(); ++r)
        for (int c = 0; c < T.size(); ++c) {
            const Complex v = T.entries(r, c);
            if (v == Complex(0.0)) continue;
            csv += std::to_string(r) + "," + std::to_string(c) + "," +
                   format_double(v.real()) + "," + format_double(v.imag()) + "\n";
        }
    emit(cfg, csv, "dimension=" + std::to_string(T.size()));
    return 0;
}

int run_adjoint_kernel_check(ExperimentConfig cfg) {
    const TruncSeries phi = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const OperatorMatrix T = build_matrix(phi, model, cfg.degree);
    const auto a = parse_point(cfg.a, cfg.n);
    const Eigen::VectorXcd kappa = kernel_vector(T, a);
    const Eigen::VectorXcd lhs = adjoint_applied_to_kernel(T, a);
    const Complex phi_a = evaluate(phi, a);
    const double residual = (lhs - std::conj(phi_a) * kappa).norm() / kappa.norm();
    json j = base_report(cfg);
    j["beta"] = cfg.beta;
    j["n"] = cfg.n;
    j["degree"] = cfg.degree;
    j["value"] = residual;
    j["tolerance"] = cfg.tol;
    emit(cfg, dump(j), "relative_residual=" + format_double(residual));
    return 0;
}

// ---------------------------------------------------------------- spectral

int run_pseudospectrum(ExperimentConfig cfg) {
    const TruncSeries phi = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const OperatorMatrix T = build_matrix(phi, model, cfg.degree);
    SminOptions opts;
    opts.tol = cfg.tol;
    opts.threads = cfg.threads;
    const SminField field = smin_field(T, cfg.grid, opts);

    std::size_t below = 0;
    for (double v : field.values)
        if (v < cfg.eps) ++below;

    SpectrumReport report;
    report.kind = "pseudospectrum";
    report.metadata = base_report(cfg);
    report.metadata["eps"] = cfg.eps;
    report.field = &field;
    if (field.non_converged > 0)
        report.metadata["flags"].push_back("smin_iteration_did_not_converge_at_" +
                                           std::to_string(field.non_converged) + "_points");

    const std::string summary = "points_below_eps=" + std::to_string(below) +
                                " non_converged=" + std::to_string(field.non_converged);
    emit(cfg, cfg.format == "csv" ? report.to_csv() : dump(report.to_json()), summary);
    return field.non_converged == 0 ? 0 : kExitFlagged;
}

int run_spectrum_image(ExperimentConfig cfg) {
    const TruncSeries phi = load_symbol(cfg);
    SpectrumReport report;
    report.kind = "spectrum";
    report.metadata = base_report(cfg);
    report.cloud = spectrum_image(phi, cfg.samples, cfg.seed);
    const double hull = convex_hull_area(report.cloud);
    report.metadata["hull_area"] = hull;
    emit(cfg, cfg.format == "csv" ? report.to_csv() : dump(report.to_json()),
         "samples=" + std::to_string(report.cloud.size()) + " hull_area=" + format_double(hull));
    return 0;
}

int run_essential(ExperimentConfig cfg) {
    const TruncSeries phi = load_symbol(cfg);
    SpectrumReport report;
    report.kind = "essential";
    report.metadata = base_report(cfg);
    report.radii = cfg.radii;
    report.cloud_family = essential_cluster(phi, cfg.radii, cfg.samples, cfg.seed);
    const double hull = convex_hull_area(report.cloud_family.back());
    report.metadata["final_hull_area"] = hull;
    emit(cfg, cfg.format == "csv" ? report.to_csv() : dump(report.to_json()),
         "radii=" + std::to_string(cfg.radii.size()) +
             " final_hull_area=" + format_double(hull));
    return 0;
}

int run_index(ExperimentConfig cfg) {
    const TruncSeries phi = load_symbol(cfg);
    const SpaceModel model(cfg.n, cfg.beta);
    const Complex lambda = parse_complex(cfg.lambda);
    const FredholmVerdict verdict =
        fredholm_index(phi, lambda, model, cfg.radii, cfg.delta, cfg.samples, cfg.seed);

    SpectrumReport report;
    report.kind = "index";
    report.metadata = base_report(cfg);
    report.verdict = &verdict;
    if (verdict.kind == FredholmKind::inconclusive)
        report.metadata["flags"].push_back("min_modulus_in_boundary_band");

    json j = report.to_json();
    std::string summary = "verdict=" + std::string(j["result"]["verdict"].get<std::string>());
    if (verdict.index) summary += " index=" + std::to_string(*verdict.index);
    emit(cfg, dump(j), summary);

    switch (verdict.kind) {
        case FredholmKind::invertible: return 0;
        case FredholmKind::fredholm: return 1;
        case FredholmKind::not_fredholm: return 2;
        case FredholmKind::inconclusive: return kExitFlagged;
    }
    return kExitError;
}

int run_peak_norms(ExperimentConfig cfg) {
    cfg.format = "csv";
    const Complex a = parse_complex(cfg.a);
    const auto ratios = peak_norm_ratios(cfg.beta, cfg.kmax);
    const auto probe = weak_decay_probe(cfg.beta, a, cfg.kmax);
    std::string csv = "k,norm_sq,ratio,g_at_a\n";
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        csv += std::to_string(ratios[i].k) + "," + format_double(ratios[i].norm_sq) + "," +
               format_double(ratios[i].ratio) + "," + format_double(probe[i]) + "\n";
    }
    emit(cfg, csv, "kmax=" + std::to_string(cfg.kmax));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Hardy-Sobolev spaces on the unit ball"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string grid_spec = "-1.5,1.5,-1.5,1.5";
    std::string radii_spec;
    std::map<std::string, bool> csv_by_default;

    auto add_symbol = [&](CLI::App* sub) {
        sub->add_option("--phi", cfg.phi, "symbol as a polynomial expression");
        sub->add_option("--phi-json", cfg.phi_json,
                        "symbol as a series interchange file (overrides --phi)")
            ->check(CLI::ExistingFile);
    };

    auto add_common = [&](CLI::App* sub, bool csv_default) {
        sub->add_option("--beta", cfg.beta, "smoothness parameter");
        sub->add_option("--n", cfg.n, "complex dimension of the ball");
        sub->add_option("--seed", cfg.seed, "seed for every randomized quantity");
        sub->add_option("--out", cfg.out, "report path (default <command>.<format>)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", cfg.threads, "worker threads (0 = HS_THREADS/hardware)");
        csv_by_default[sub->get_name()] = csv_default;
    };

    int exit_code = 0;
    auto wire = [&](CLI::App* sub, int (*runner)(ExperimentConfig)) {
        sub->callback([&, sub, runner] {
            cfg.command = sub->get_name();
            if (sub->count("--format") == 0 && csv_by_default[cfg.command])
                cfg.format = "csv";
            if (!radii_spec.empty()) cfg.radii = parse_double_list(radii_spec);
            const auto g = parse_double_list(grid_spec);
            if (g.size() != 4) throw CLI::ValidationError("--grid needs four numbers");
            cfg.grid.re_min = g[0];
            cfg.grid.re_max = g[1];
            cfg.grid.im_min = g[2];
            cfg.grid.im_max = g[3];
            exit_code = runner(cfg);
        });
    };

    {
        auto* sub = app.add_subcommand("verify-identity",
                                       "exact residual of the alternating differentiation identity");
        sub->add_option("--nmax", cfg.nmax, "largest order to test");
        sub->add_option("--trials", cfg.trials, "random pairs per order");
        sub->add_option("--max-degree", cfg.max_degree, "max degree of random polynomials");
        add_common(sub, false);
        wire(sub, run_verify_identity);
    }
    {
        auto* sub = app.add_subcommand(
            "quotient-check", "closed-form quotient derivative vs stepwise quotient rule");
        sub->add_option("--nmax", cfg.nmax, "largest order to test");
        sub->add_option("--trials", cfg.trials, "random pairs per order");
        sub->add_option("--max-degree", cfg.max_degree, "max degree of random polynomials");
        add_common(sub, false);
        wire(sub, run_quotient_check);
    }
    {
        auto* sub = app.add_subcommand("space-norm", "coefficient-side norm of a polynomial");
        add_symbol(sub);
        add_common(sub, false);
        wire(sub, run_space_norm);
    }
    {
        auto* sub = app.add_subcommand("kernel-eval", "reproducing kernel K(z, w)");
        sub->add_option("--z", cfg.point_z, "first point, comma-separated components");
        sub->add_option("--w", cfg.point_w, "second point");
        sub->add_option("--tol", cfg.tol, "certified tail bound for the kernel series");
        add_common(sub, false);
        wire(sub, run_kernel_eval);
    }
    {
        auto* sub = app.add_subcommand(
            "prop2-check", "ratio of the Bergman-route norm to the direct norm");
        add_symbol(sub);
        sub->add_option("--N", cfg.N, "integer derivative order (must exceed beta)");
        add_common(sub, false);
        wire(sub, run_prop2_check);
    }
    {
        auto* sub = app.add_subcommand("op-norm", "operator norm of the compression");
        add_symbol(sub);
        sub->add_option("--degree", cfg.degree, "truncation degree");
        sub->add_option("--tol", cfg.tol, "relative tolerance of the power iteration");
        add_common(sub, false);
        wire(sub, run_op_norm);
    }
    {
        auto* sub = app.add_subcommand("op-matrix", "dump compression matrix entries");
        add_symbol(sub);
        sub->add_option("--degree", cfg.degree, "truncation degree");
        add_common(sub, true);
        wire(sub, run_op_matrix);
    }
    {
        auto* sub = app.add_subcommand("adjoint-kernel-check",
                                       "relative residual of M* k_a = conj(phi(a)) k_a");
        add_symbol(sub);
        sub->add_option("--a", cfg.a, "interior point");
        sub->add_option("--degree", cfg.degree, "truncation degree");
        sub->add_option("--tol", cfg.tol, "tolerance recorded in the report");
        add_common(sub, false);
        wire(sub, run_adjoint_kernel_check);
    }
    {
        auto* sub = app.add_subcommand("pseudospectrum",
                                       "smallest-singular-value field of lambda I - M_phi");
        add_symbol(sub);
        sub->add_option("--degree", cfg.degree, "truncation degree");
        sub->add_option("--eps", cfg.eps, "sublevel threshold reported in the summary");
        sub->add_option("--grid", grid_spec, "re_min,re_max,im_min,im_max");
        sub->add_option("--resolution", cfg.grid.resolution, "grid points per axis");
        sub->add_option("--tol", cfg.tol, "relative tolerance per grid point");
        add_common(sub, true);
        wire(sub, run_pseudospectrum);
    }
    {
        auto* sub = app.add_subcommand("spectrum-image", "image cloud of phi over the ball");
        add_symbol(sub);
        sub->add_option("--samples", cfg.samples, "number of low-discrepancy samples");
        add_common(sub, true);
        wire(sub, run_spectrum_image);
    }
    {
        auto* sub = app.add_subcommand("essential",
                                       "image clouds of phi over shrinking boundary shells");
        add_symbol(sub);
        sub->add_option("--radii", radii_spec, "comma-separated increasing inner radii");
        sub->add_option("--samples", cfg.samples, "samples per shell");
        add_common(sub, true);
        wire(sub, run_essential);
    }
    {
        auto* sub = app.add_subcommand(
            "index", "sampled Fredholm verdict and winding-number index of lambda I - M_phi");
        add_symbol(sub);
        sub->add_option("--lambda", cfg.lambda, "spectral parameter");
        sub->add_option("--r,--radii", radii_spec, "comma-separated probe radii");
        sub->add_option("--delta", cfg.delta, "shell lower-bound threshold");
        sub->add_option("--samples", cfg.samples, "shell samples per probe");
        add_common(sub, false);
        wire(sub, run_index);
    }
    {
        auto* sub = app.add_subcommand("peak-norms",
                                       "peak-function norms, growth ratios, decay probe");
        sub->add_option("--kmax", cfg.kmax, "largest peak power");
        sub->add_option("--a", cfg.a, "probe point for the normalized values");
        add_common(sub, true);
        wire(sub, run_peak_norms);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
