#include "hsball/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hsball {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

nlohmann::json series_to_json(const TruncSeries& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : f.terms()) {
        terms.push_back({{"alpha", alpha.exponents()}, {"re", c.real()}, {"im", c.imag()}});
    }
    return {{"n", f.dimension()}, {"D", f.truncation_degree()}, {"terms", terms}};
}

TruncSeries series_from_json(const nlohmann::json& j) {
    TruncSeries f(j.at("n").get<int>(), j.at("D").get<int>());
    for (const auto& term : j.at("terms")) {
        const MultiIndex alpha(term.at("alpha").get<std::vector<int>>());
        f.set_coefficient(alpha, Complex(term.at("re").get<double>(),
                                         term.value("im", 0.0)));
    }
    return f;
}

static const char* kind_name(FredholmKind k) {
    switch (k) {
        case FredholmKind::invertible: return "invertible";
        case FredholmKind::fredholm: return "fredholm";
        case FredholmKind::not_fredholm: return "not_fredholm";
        case FredholmKind::inconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::json verdict_to_json(const FredholmVerdict& v) {
    nlohmann::json j;
    j["verdict"] = kind_name(v.kind);
    j["index"] = v.index ? nlohmann::json(*v.index) : nlohmann::json(nullptr);
    j["passing_radius"] =
        v.passing_radius ? nlohmann::json(*v.passing_radius) : nlohmann::json(nullptr);
    j["probe_radii"] = v.probe_radii;
    j["min_modulus"] = v.min_modulus;
    j["delta"] = v.delta;
    j["samples"] = v.samples;
    j["seed"] = v.seed;
    return j;
}

void SpectrumReport::check_finite() const {
    auto bad = [](double x) { return !std::isfinite(x); };
    for (const Complex& p : cloud)
        if (bad(p.real()) || bad(p.imag()))
            throw std::runtime_error("SpectrumReport: non-finite cloud value");
    for (const auto& c : cloud_family)
        for (const Complex& p : c)
            if (bad(p.real()) || bad(p.imag()))
                throw std::runtime_error("SpectrumReport: non-finite cloud value");
    if (field)
        for (double v : field->values)
            if (bad(v)) throw std::runtime_error("SpectrumReport: non-finite field value");
}

nlohmann::json SpectrumReport::to_json() const {
    check_finite();
    nlohmann::json j;
    j["kind"] = kind;
    j["metadata"] = metadata;
    if (!cloud.empty()) {
        nlohmann::json pts = nlohmann::json::array();
        for (const Complex& p : cloud) pts.push_back({p.real(), p.imag()});
        j["points"] = std::move(pts);
    }
    if (!cloud_family.empty()) {
        nlohmann::json groups = nlohmann::json::array();
        for (std::size_t i = 0; i < cloud_family.size(); ++i) {
            nlohmann::json pts = nlohmann::json::array();
            for (const Complex& p : cloud_family[i]) pts.push_back({p.real(), p.imag()});
            groups.push_back({{"radius", radii[i]}, {"points", std::move(pts)}});
        }
        j["clusters"] = std::move(groups);
    }
    if (field) {
        nlohmann::json rows = nlohmann::json::array();
        for (int iy = 0; iy < field->grid.resolution; ++iy)
            for (int ix = 0; ix < field->grid.resolution; ++ix) {
                const Complex lambda = field->grid.point(ix, iy);
                const std::size_t idx = static_cast<std::size_t>(iy) *
                                            static_cast<std::size_t>(field->grid.resolution) +
                                        static_cast<std::size_t>(ix);
                rows.push_back({lambda.real(), lambda.imag(), field->values[idx]});
            }
        j["field"] = std::move(rows);
    }
    if (verdict) j["result"] = verdict_to_json(*verdict);
    return j;
}

std::string SpectrumReport::to_csv() const {
    check_finite();
    if (field) return csv_field(*field);
    if (!cloud_family.empty()) return csv_cloud_family(radii, cloud_family);
    return csv_cloud(cloud);
}

std::string csv_cloud(const std::vector<Complex>& points) {
    std::string out = "re,im\n";
    for (const Complex& p : points) {
        out += format_double(p.real());
        out += ',';
        out += format_double(p.imag());
        out += '\n';
    }
    return out;
}

std::string csv_cloud_family(const std::vector<double>& radii,
                             const std::vector<std::vector<Complex>>& clouds) {
    std::string out = "radius,re,im\n";
    for (std::size_t i = 0; i < clouds.size(); ++i) {
        const std::string r = format_double(radii[i]);
        for (const Complex& p : clouds[i]) {
            out += r;
            out += ',';
            out += format_double(p.real());
            out += ',';
            out += format_double(p.imag());
            out += '\n';
        }
    }
    return out;
}

std::string csv_field(const SminField& field) {
    std::string out = "re,im,smin\n";
    for (int iy = 0; iy < field.grid.resolution; ++iy)
        for (int ix = 0; ix < field.grid.resolution; ++ix) {
            const Complex lambda = field.grid.point(ix, iy);
            const std::size_t idx =
                static_cast<std::size_t>(iy) * static_cast<std::size_t>(field.grid.resolution) +
                static_cast<std::size_t>(ix);
            out += format_double(lambda.real());
            out += ',';
            out += format_double(lambda.imag());
            out += ',';
            out += format_double(field.values[idx]);
            out += '\n';
        }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace hsball
