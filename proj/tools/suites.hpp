#pragma once

// Verification suites shared by `batres verify` and the acceptance runner.

#include <optional>
#include <string>
#include <vector>

#include "batres/params.hpp"

namespace batres::suites {

struct Check {
    std::string suite;
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct Options {
    PhysicalParams params = make_params_from_omega(0.5, 2.0, 1.0);
    int quad_points = 200;
    /// Overrides the tolerance of every agreement check (not counts or orders).
    std::optional<double> tolerance;
};

const std::vector<std::string>& names();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<Check> run(const std::string& suite, const Options& options);

}  // namespace batres::suites
