// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "curlcurl/nehari.hpp"

namespace curlcurl {

/// Thrown on schema violations; the message carries file:line anchors.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed run configuration. The file is a TOML-style text file with the
/// tables and keys documented in the README; unknown tables or keys are
/// rejected with the offending line number.
struct RunConfig {
    // [grid]
    double rmax = 12.0;
    double zmax = 12.0;
    int nr = 129;
    int nz = 129;

    // [nonlinearity]
    std::string nonlinearity_kind = "power";  // power | log
    double p = 3.0;

    // [gamma]
    std::string gamma_kind = "constant";  // constant | csv
    double gamma_value = 1.0;
    std::string gamma_path;

    // [potential]
    std::string potential_kind = "constant";  // constant | csv
    double potential_value = 1.0;
    std::string potential_path;

    // [solver]
    std::string init = "gaussian";  // gaussian | csv
    std::string init_path;
    SolverConfig solver;

    // [output]
    std::string output_dir = "out";

    // [random]
    std::uint64_t seed = 12345;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");

/// Materializes the configured grid / nonlinearity / potential. CSV-backed
/// coefficients must match the configured grid layout.
GridPtr build_grid(const RunConfig& cfg);
Nonlinearity build_nonlinearity(const RunConfig& cfg, const GridPtr& grid);
Potential build_potential(const RunConfig& cfg, const GridPtr& grid);

}  // namespace curlcurl
