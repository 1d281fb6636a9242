#pragma once

#include "piquant/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace piquant {

/// Optional run parameters carried by a problem file; command-line flags
/// take precedence over these.
struct ProblemOptions {
    std::optional<double> box_radius;   // "K"
    std::optional<double> scale_radius; // "L"
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> tau;
    std::optional<double> epsilon;
    std::optional<std::vector<Rational>> y_override;
};

struct ProblemFile {
    DimensionProblem problem;
    ProblemOptions options;
};

/// JSON schema: docs/problem-schema.json. Variables take either a unit
/// expression ("m/s^2", resolved through the standard registry) or an
/// explicit exponent vector over the problem basis (numbers or "p/q"
/// strings). A missing "basis" means the seven SI base units.
ProblemFile parse_problem_json(std::string_view text);

ProblemFile load_problem_file(const std::string& path);

} // namespace piquant
