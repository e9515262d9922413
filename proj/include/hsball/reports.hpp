#pragma once

#include <json.hpp>
#include <string>

#include "hsball/spectral.hpp"

namespace hsball {

/// Shortest-exact decimal form of a double ("%.17g"); used everywhere a
/// number is printed so that equal configs produce byte-identical reports.
std::string format_double(double value);

nlohmann::json series_to_json(const TruncSeries& f);
TruncSeries series_from_json(const nlohmann::json& j);

/// Serialized spectral computation: a point cloud, a cloud family, a scalar
/// field, or an index verdict, together with the metadata needed to reproduce
/// it bit for bit under the same seed.
struct SpectrumReport {
    std::string kind;  // "spectrum" | "pseudospectrum" | "essential" | "index"
    nlohmann::json metadata;

    std::vector<Complex> cloud;                      // spectrum
    std::vector<double> radii;                       // essential
    std::vector<std::vector<Complex>> cloud_family;  // essential
    const SminField* field = nullptr;                // pseudospectrum (not owned)
    const FredholmVerdict* verdict = nullptr;        // index (not owned)

    /// Throws when any stored value is non-finite.
    void check_finite() const;

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

nlohmann::json verdict_to_json(const FredholmVerdict& v);

std::string csv_cloud(const std::vector<Complex>& points);
std::string csv_cloud_family(const std::vector<double>& radii,
                             const std::vector<std::vector<Complex>>& clouds);
std::string csv_field(const SminField& field);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hsball
