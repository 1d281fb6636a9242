#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace piquant {

/// n-ary scalar function on the positive orthant.
using ScalarFunction = std::function<double(const std::vector<double>&)>;

/// Immutable arithmetic expression over named positive variables.
///
/// Grammar (EBNF in docs/expr-grammar.ebnf): binary + - * / ^ with the usual
/// precedence, ^ right-associative and binding tighter than unary minus,
/// calls sqrt/abs/exp/log/sin/cos, the constant pi, parentheses. No implicit
/// multiplication.
class Expr {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    double eval(const std::unordered_map<std::string, double>& env) const;

    /// Referenced variable names, sorted, unique. Excludes the constant pi.
    std::vector<std::string> variables() const;

    /// Parseable rendering; parse_expr(str()) reproduces the same tree.
    std::string str() const;

    bool same_tree(const Expr& other) const;

    const NodePtr& root() const noexcept { return root_; }

private:
    explicit Expr(NodePtr root) : root_(std::move(root)) {}
    friend Expr parse_expr(std::string_view);

    NodePtr root_;
};

Expr parse_expr(std::string_view src);

/// Resolves the expression's variables against an argument order once;
/// the returned function evaluates positionally. Throws EvalError if the
/// expression references a name missing from arg_names.
ScalarFunction bind_expr(const Expr& e, const std::vector<std::string>& arg_names);

} // namespace piquant
