#include "piquant/expr.hpp"

#include "piquant/errors.hpp"
#include "piquant/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

namespace piquant {

struct Expr::Node {
    enum class Kind { Number, Variable, Pi, Negate, Binary, Call };

    Kind kind;
    double number = 0.0;
    std::string name;   // variable or function name
    char op = 0;        // '+', '-', '*', '/', '^'
    NodePtr lhs, rhs;   // Negate and Call use lhs only
};

namespace {

using Node = Expr::Node;
using NodePtr = Expr::NodePtr;

NodePtr make_number(double v) {
    return std::make_shared<Node>(Node{Node::Kind::Number, v, {}, 0, nullptr, nullptr});
}

NodePtr make_variable(std::string name) {
    return std::make_shared<Node>(
        Node{Node::Kind::Variable, 0.0, std::move(name), 0, nullptr, nullptr});
}

NodePtr make_pi() {
    return std::make_shared<Node>(Node{Node::Kind::Pi, 0.0, {}, 0, nullptr, nullptr});
}

NodePtr make_negate(NodePtr inner) {
    return std::make_shared<Node>(
        Node{Node::Kind::Negate, 0.0, {}, 0, std::move(inner), nullptr});
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
    return std::make_shared<Node>(
        Node{Node::Kind::Binary, 0.0, {}, op, std::move(lhs), std::move(rhs)});
}

NodePtr make_call(std::string name, NodePtr arg) {
    return std::make_shared<Node>(
        Node{Node::Kind::Call, 0.0, std::move(name), 0, std::move(arg), nullptr});
}

bool is_builtin(std::string_view name) {
    static const std::set<std::string_view> fns = {"sqrt", "abs", "exp", "log", "sin", "cos"};
    return fns.contains(name);
}

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    NodePtr parse() {
        NodePtr e = parse_sum();
        skip_ws();
        if (i_ < src_.size()) {
            throw ParseError("unexpected trailing input", i_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) {
            ++i_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (i_ < src_.size() && src_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i_ < src_.size() ? src_[i_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            if (accept('+')) {
                lhs = make_binary('+', lhs, parse_product());
            } else if (accept('-')) {
                lhs = make_binary('-', lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = make_binary('*', lhs, parse_unary());
            } else if (accept('/')) {
                lhs = make_binary('/', lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    // unary minus binds looser than ^: -x^2 is -(x^2)
    NodePtr parse_unary() {
        if (accept('-')) {
            return make_negate(parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (accept('^')) {
            // right-associative; the exponent may start with a unary minus
            return make_binary('^', base, parse_unary());
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (i_ >= src_.size()) {
            throw ParseError("unexpected end of input", i_);
        }
        const char c = src_[i_];
        if (c == '(') {
            ++i_;
            NodePtr inner = parse_sum();
            if (!accept(')')) {
                throw ParseError("expected ')'", i_);
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_identifier();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    NodePtr parse_number() {
        const std::size_t start = i_;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
            ++i_;
        }
        if (i_ < src_.size() && src_[i_] == '.') {
            ++i_;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                ++i_;
            }
        }
        if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) {
                ++j;
            }
            if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
                i_ = j;
                while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                    ++i_;
                }
            }
        }
        const std::string_view text = src_.substr(start, i_ - start);
        double value = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
            throw ParseError("invalid numeric literal '" + std::string(text) + "'", start);
        }
        return make_number(value);
    }

    NodePtr parse_identifier() {
        const std::size_t start = i_;
        while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                                    src_[i_] == '_')) {
            ++i_;
        }
        std::string name(src_.substr(start, i_ - start));
        if (name == "pi") {
            return make_pi();
        }
        if (peek() == '(') {
            if (!is_builtin(name)) {
                throw ParseError("unknown function '" + name + "'", start);
            }
            ++i_; // consume '('
            NodePtr arg = parse_sum();
            if (!accept(')')) {
                throw ParseError("expected ')' after call argument", i_);
            }
            return make_call(std::move(name), std::move(arg));
        }
        return make_variable(std::move(name));
    }

    std::string_view src_;
    std::size_t i_ = 0;
};

double checked_pow(double base, double exponent) {
    if (base < 0.0) {
        throw EvalError("power with negative base");
    }
    if (base == 0.0 && exponent <= 0.0) {
        throw EvalError("zero base with nonpositive exponent");
    }
    return std::pow(base, exponent);
}

double eval_node(const Node& n, const std::unordered_map<std::string, double>& env) {
    switch (n.kind) {
    case Node::Kind::Number: return n.number;
    case Node::Kind::Pi: return std::numbers::pi;
    case Node::Kind::Variable: {
        const auto it = env.find(n.name);
        if (it == env.end()) {
            throw EvalError("missing variable '" + n.name + "'");
        }
        return it->second;
    }
    case Node::Kind::Negate: return -eval_node(*n.lhs, env);
    case Node::Kind::Binary: {
        const double a = eval_node(*n.lhs, env);
        const double b = eval_node(*n.rhs, env);
        switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
            if (b == 0.0) {
                throw EvalError("division by zero");
            }
            return a / b;
        case '^': return checked_pow(a, b);
        default: break;
        }
        throw EvalError("corrupt expression node");
    }
    case Node::Kind::Call: {
        const double a = eval_node(*n.lhs, env);
        if (n.name == "sqrt") {
            if (a < 0.0) {
                throw EvalError("sqrt of a negative value");
            }
            return std::sqrt(a);
        }
        if (n.name == "abs") return std::abs(a);
        if (n.name == "exp") return std::exp(a);
        if (n.name == "log") {
            if (a <= 0.0) {
                throw EvalError("log of a nonpositive value");
            }
            return std::log(a);
        }
        if (n.name == "sin") return std::sin(a);
        if (n.name == "cos") return std::cos(a);
        throw EvalError("unknown function '" + n.name + "'");
    }
    }
    throw EvalError("corrupt expression node");
}

void collect_variables(const Node& n, std::set<std::string>& out) {
    switch (n.kind) {
    case Node::Kind::Variable: out.insert(n.name); break;
    case Node::Kind::Negate:
    case Node::Kind::Call: collect_variables(*n.lhs, out); break;
    case Node::Kind::Binary:
        collect_variables(*n.lhs, out);
        collect_variables(*n.rhs, out);
        break;
    default: break;
    }
}

int precedence_of(const Node& n) {
    switch (n.kind) {
    case Node::Kind::Binary:
        switch (n.op) {
        case '+':
        case '-': return 1;
        case '*':
        case '/': return 2;
        case '^': return 4;
        default: return 0;
        }
    case Node::Kind::Negate: return 3;
    default: return 5; // atoms never need parentheses
    }
}

void render(const Node& n, std::string& out) {
    const auto child = [&out](const Node& c, int min_prec) {
        if (precedence_of(c) < min_prec) {
            out += '(';
            render(c, out);
            out += ')';
        } else {
            render(c, out);
        }
    };
    switch (n.kind) {
    case Node::Kind::Number: out += format_double(n.number); return;
    case Node::Kind::Pi: out += "pi"; return;
    case Node::Kind::Variable: out += n.name; return;
    case Node::Kind::Negate:
        out += '-';
        child(*n.lhs, 3);
        return;
    case Node::Kind::Binary: {
        const int prec = precedence_of(n);
        // left-associative except ^; the right operand needs one level more
        const int lhs_min = n.op == '^' ? prec + 1 : prec;
        const int rhs_min = n.op == '^' ? prec : prec + 1;
        child(*n.lhs, lhs_min);
        out += n.op;
        child(*n.rhs, rhs_min);
        return;
    }
    case Node::Kind::Call:
        out += n.name;
        out += '(';
        render(*n.lhs, out);
        out += ')';
        return;
    }
}

bool trees_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case Node::Kind::Number: return a.number == b.number;
    case Node::Kind::Pi: return true;
    case Node::Kind::Variable: return a.name == b.name;
    case Node::Kind::Negate: return trees_equal(*a.lhs, *b.lhs);
    case Node::Kind::Binary:
        return a.op == b.op && trees_equal(*a.lhs, *b.lhs) && trees_equal(*a.rhs, *b.rhs);
    case Node::Kind::Call: return a.name == b.name && trees_equal(*a.lhs, *b.lhs);
    }
    return false;
}

} // namespace

double Expr::eval(const std::unordered_map<std::string, double>& env) const {
    return eval_node(*root_, env);
}

std::vector<std::string> Expr::variables() const {
    std::set<std::string> names;
    collect_variables(*root_, names);
    return {names.begin(), names.end()};
}

std::string Expr::str() const {
    std::string out;
    render(*root_, out);
    return out;
}

bool Expr::same_tree(const Expr& other) const {
    return trees_equal(*root_, *other.root_);
}

Expr parse_expr(std::string_view src) {
    return Expr(ExprParser(src).parse());
}

ScalarFunction bind_expr(const Expr& e, const std::vector<std::string>& arg_names) {
    for (const auto& name : e.variables()) {
        if (std::find(arg_names.begin(), arg_names.end(), name) == arg_names.end()) {
            throw EvalError("expression references undeclared variable '" + name + "'");
        }
    }
    return [e, arg_names](const std::vector<double>& args) {
        if (args.size() != arg_names.size()) {
            throw EvalError("argument count mismatch");
        }
        std::unordered_map<std::string, double> env;
        env.reserve(arg_names.size());
        for (std::size_t i = 0; i < arg_names.size(); ++i) {
            env.emplace(arg_names[i], args[i]);
        }
        return e.eval(env);
    };
}

} // namespace piquant
