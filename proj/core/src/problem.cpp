#include "piquant/problem.hpp"

#include "piquant/errors.hpp"

#include <set>

namespace piquant {

DimensionProblem::DimensionProblem(std::vector<ProblemVariable> variables,
                                   ProblemVariable target, std::optional<Expr> candidate)
    : variables_(std::move(variables)), target_(std::move(target)),
      candidate_(std::move(candidate)) {
    if (variables_.empty()) {
        throw DimensionError("a problem needs at least one variable");
    }
    std::set<std::string> names;
    for (const auto& v : variables_) {
        if (!(v.dimension.basis() == target_.dimension.basis())) {
            throw DimensionError("variable '" + v.name + "' lives over a different basis");
        }
        if (v.name == "pi") {
            throw DomainError("'pi' is reserved for the constant");
        }
        if (!names.insert(v.name).second) {
            throw DomainError("duplicate variable name '" + v.name + "'");
        }
    }
    if (candidate_) {
        for (const auto& name : candidate_->variables()) {
            if (!names.contains(name)) {
                throw DomainError("candidate function references undeclared variable '" +
                                  name + "'");
            }
        }
    }
}

std::vector<std::string> DimensionProblem::variable_names() const {
    std::vector<std::string> names;
    names.reserve(variables_.size());
    for (const auto& v : variables_) {
        names.push_back(v.name);
    }
    return names;
}

ScalarFunction DimensionProblem::candidate_function() const {
    if (!candidate_) {
        throw DomainError("problem has no candidate function");
    }
    return bind_expr(*candidate_, variable_names());
}

} // namespace piquant
