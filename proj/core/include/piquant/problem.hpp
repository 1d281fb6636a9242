#pragma once

#include "piquant/dimension.hpp"
#include "piquant/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace piquant {

struct ProblemVariable {
    std::string name;
    Dimension dimension;
};

/// A named set of input variables with dimensions (the columns of the
/// dimension matrix), one target dimension, and an optional candidate
/// function of the variables.
class DimensionProblem {
public:
    DimensionProblem(std::vector<ProblemVariable> variables, ProblemVariable target,
                     std::optional<Expr> candidate = std::nullopt);

    const std::vector<ProblemVariable>& variables() const noexcept { return variables_; }
    const ProblemVariable& target() const noexcept { return target_; }
    const std::optional<Expr>& candidate() const noexcept { return candidate_; }

    std::size_t variable_count() const noexcept { return variables_.size(); }
    const Basis& basis() const noexcept { return target_.dimension.basis(); }

    std::vector<std::string> variable_names() const;

    /// The candidate expression bound to the variable order; throws
    /// DomainError when no candidate was supplied.
    ScalarFunction candidate_function() const;

private:
    std::vector<ProblemVariable> variables_;
    ProblemVariable target_;
    std::optional<Expr> candidate_;
};

} // namespace piquant
