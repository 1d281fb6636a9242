#include "piquant/problem_io.hpp"

#include "piquant/errors.hpp"
#include "piquant/units.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace piquant {

namespace {

using nlohmann::json;

Rational rational_of(const json& j, const std::string& where) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_number()) {
        return rational_from_double(j.get<double>());
    }
    throw DomainError(where + ": expected a number or a \"p/q\" string");
}

// SI-parsed dimensions are re-expressed over the problem basis; every
// nonzero exponent must land on a base unit the problem basis contains.
Dimension project_dimension(const Dimension& si_dim, const Basis& basis,
                            const std::string& where) {
    if (basis == Basis::si()) {
        return si_dim;
    }
    std::vector<Rational> exps(basis.size(), Rational(0));
    const auto& si_symbols = Basis::si().symbols();
    for (std::size_t i = 0; i < si_symbols.size(); ++i) {
        if (si_dim[i] == 0) {
            continue;
        }
        const auto& target = basis.symbols();
        const auto it = std::find(target.begin(), target.end(), si_symbols[i]);
        if (it == target.end()) {
            throw DomainError(where + ": unit needs base '" + si_symbols[i] +
                              "' which the problem basis does not contain");
        }
        exps[static_cast<std::size_t>(it - target.begin())] = si_dim[i];
    }
    return Dimension(basis, std::move(exps));
}

ProblemVariable variable_of(const json& j, const Basis& basis, const std::string& where) {
    if (!j.is_object() || !j.contains("name")) {
        throw DomainError(where + ": expected an object with a \"name\"");
    }
    const std::string name = j.at("name").get<std::string>();
    if (j.contains("exponents")) {
        const auto& arr = j.at("exponents");
        if (!arr.is_array() || arr.size() != basis.size()) {
            throw DomainError(where + ": \"exponents\" must list " +
                              std::to_string(basis.size()) + " rationals");
        }
        std::vector<Rational> exps;
        exps.reserve(arr.size());
        for (const auto& e : arr) {
            exps.push_back(rational_of(e, where));
        }
        return {name, Dimension(basis, std::move(exps))};
    }
    if (j.contains("unit")) {
        const ParsedUnit u = UnitRegistry::standard().parse(j.at("unit").get<std::string>());
        return {name, project_dimension(u.dimension, basis, where)};
    }
    throw DomainError(where + ": needs either \"unit\" or \"exponents\"");
}

ProblemOptions options_of(const json& j) {
    ProblemOptions opts;
    if (!j.contains("options")) {
        return opts;
    }
    const auto& o = j.at("options");
    if (o.contains("K")) {
        opts.box_radius = o.at("K").get<double>();
    }
    if (o.contains("L")) {
        opts.scale_radius = o.at("L").get<double>();
    }
    if (o.contains("samples")) {
        opts.samples = o.at("samples").get<std::size_t>();
    }
    if (o.contains("seed")) {
        opts.seed = o.at("seed").get<std::uint64_t>();
    }
    if (o.contains("tau")) {
        opts.tau = o.at("tau").get<double>();
    }
    if (o.contains("epsilon")) {
        opts.epsilon = o.at("epsilon").get<double>();
    }
    if (o.contains("y_override")) {
        std::vector<Rational> y;
        for (const auto& e : o.at("y_override")) {
            y.push_back(rational_of(e, "options.y_override"));
        }
        opts.y_override = std::move(y);
    }
    return opts;
}

} // namespace

ProblemFile parse_problem_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid problem JSON: ") + e.what(), 0);
    }
    try {
        Basis basis = j.contains("basis")
                          ? Basis(j.at("basis").get<std::vector<std::string>>())
                          : Basis::si();
        if (!j.contains("variables") || !j.at("variables").is_array() ||
            j.at("variables").empty()) {
            throw DomainError("problem file needs a nonempty \"variables\" array");
        }
        std::vector<ProblemVariable> variables;
        std::size_t index = 0;
        for (const auto& v : j.at("variables")) {
            variables.push_back(
                variable_of(v, basis, "variables[" + std::to_string(index++) + "]"));
        }
        if (!j.contains("target")) {
            throw DomainError("problem file needs a \"target\"");
        }
        ProblemVariable target = variable_of(j.at("target"), basis, "target");
        std::optional<Expr> candidate;
        if (j.contains("function")) {
            candidate = parse_expr(j.at("function").get<std::string>());
        }
        ProblemOptions opts = options_of(j);
        if (opts.y_override && opts.y_override->size() != variables.size()) {
            throw DomainError("options.y_override must list one exponent per variable");
        }
        return {DimensionProblem(std::move(variables), std::move(target), std::move(candidate)),
                std::move(opts)};
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid problem file: ") + e.what());
    }
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open problem file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_json(buffer.str());
}

} // namespace piquant
