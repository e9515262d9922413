#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hsball/spectral.hpp"

namespace hsball {

/// Resolved options of one CLI invocation. Every field has a default, the
/// seed fully determines any randomized output, and the struct round-trips
/// losslessly through JSON (it is echoed into every JSON report).
struct ExperimentConfig {
    std::string command;
    double beta = 0.0;
    int n = 1;
    int degree = 40;
    GridRegion grid{};
    double eps = 1e-2;
    double tol = 1e-6;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 12345;
    std::vector<double> radii = {0.9, 0.99, 0.999};
    double delta = 1e-3;
    double t = 0.0;
    int kmax = 200;
    int nmax = 6;
    int trials = 200;
    int max_degree = 6;
    int N = 1;
    std::string phi = "z";
    std::string phi_json;  // path to a series file; overrides phi when set
    std::string lambda = "0";
    std::string a = "0.9";
    std::string point_z = "0";
    std::string point_w = "0";
    std::string out;
    std::string format = "json";
    int threads = 0;
};

inline void to_json(nlohmann::json& j, const ExperimentConfig& c) {
    j = nlohmann::json{{"command", c.command},
                       {"beta", c.beta},
                       {"n", c.n},
                       {"degree", c.degree},
                       {"grid",
                        {{"re_min", c.grid.re_min},
                         {"re_max", c.grid.re_max},
                         {"im_min", c.grid.im_min},
                         {"im_max", c.grid.im_max},
                         {"resolution", c.grid.resolution}}},
                       {"eps", c.eps},
                       {"tol", c.tol},
                       {"samples", c.samples},
                       {"seed", c.seed},
                       {"radii", c.radii},
                       {"delta", c.delta},
                       {"t", c.t},
                       {"kmax", c.kmax},
                       {"nmax", c.nmax},
                       {"trials", c.trials},
                       {"max_degree", c.max_degree},
                       {"N", c.N},
                       {"phi", c.phi},
                       {"phi_json", c.phi_json},
                       {"lambda", c.lambda},
                       {"a", c.a},
                       {"z", c.point_z},
                       {"w", c.point_w},
                       {"out", c.out},
                       {"format", c.format},
                       {"threads", c.threads}};
}

inline void from_json(const nlohmann::json& j, ExperimentConfig& c) {
    j.at("command").get_to(c.command);
    j.at("beta").get_to(c.beta);
    j.at("n").get_to(c.n);
    j.at("degree").get_to(c.degree);
    const auto& g = j.at("grid");
    g.at("re_min").get_to(c.grid.re_min);
    g.at("re_max").get_to(c.grid.re_max);
    g.at("im_min").get_to(c.grid.im_min);
    g.at("im_max").get_to(c.grid.im_max);
    g.at("resolution").get_to(c.grid.resolution);
    j.at("eps").get_to(c.eps);
    j.at("tol").get_to(c.tol);
    j.at("samples").get_to(c.samples);
    j.at("seed").get_to(c.seed);
    j.at("radii").get_to(c.radii);
    j.at("delta").get_to(c.delta);
    j.at("t").get_to(c.t);
    j.at("kmax").get_to(c.kmax);
    j.at("nmax").get_to(c.nmax);
    j.at("trials").get_to(c.trials);
    j.at("max_degree").get_to(c.max_degree);
    j.at("N").get_to(c.N);
    j.at("phi").get_to(c.phi);
    j.at("phi_json").get_to(c.phi_json);
    j.at("lambda").get_to(c.lambda);
    j.at("a").get_to(c.a);
    j.at("z").get_to(c.point_z);
    j.at("w").get_to(c.point_w);
    j.at("out").get_to(c.out);
    j.at("format").get_to(c.format);
    j.at("threads").get_to(c.threads);
}

}  // namespace hsball
