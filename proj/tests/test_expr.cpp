#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piquant/expr.hpp"
#include "piquant/errors.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace piquant;
using testutil::TestRng;

namespace {

double eval(const char* src, std::unordered_map<std::string, double> env = {}) {
    return parse_expr(src).eval(env);
}

} // namespace

TEST_CASE("fixture formulas parse and evaluate") {
    const Expr pendulum = parse_expr("2*pi*sqrt(l/g)");
    CHECK(pendulum.variables() == std::vector<std::string>{"g", "l"});
    CHECK(pendulum.eval({{"l", 1.0}, {"g", 4.0}}) ==
          doctest::Approx(3.14159265358979).epsilon(1e-12));

    const Expr atwood = parse_expr("sqrt(2*g*h*abs(m1-m2)/(m1+m2))");
    CHECK(atwood.variables() == std::vector<std::string>{"g", "h", "m1", "m2"});
    CHECK(atwood.eval({{"g", 9.8}, {"h", 2.0}, {"m1", 3.0}, {"m2", 3.0}}) == 0.0);
}

TEST_CASE("precedence and associativity") {
    CHECK(eval("2^3^2") == 512.0); // right-associative
    CHECK(eval("2+3*4") == 14.0);
    CHECK(eval("(2+3)*4") == 20.0);
    CHECK(eval("2-3-4") == -5.0);
    CHECK(eval("24/4/2") == 3.0);
    CHECK(eval("-2^2") == -4.0); // power binds tighter than unary minus
    CHECK(eval("2^-1") == 0.5);
    CHECK(eval("l^(1/2)", {{"l", 9.0}}) == 3.0);
}

TEST_CASE("rational powers agree with repeated multiplication") {
    TestRng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = rng.log_box(20.0);
        const int k = static_cast<int>(rng.int_in(1, 6));
        double direct = 1.0;
        for (int i = 0; i < k; ++i) {
            direct *= x;
        }
        const double via_pow = parse_expr("x^" + std::to_string(k)).eval({{"x", x}});
        CHECK(via_pow == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("numeric literals") {
    CHECK(eval("1.5e2") == 150.0);
    CHECK(eval(".5 + .25") == 0.75);
    CHECK(eval("pi") == doctest::Approx(3.14159265358979).epsilon(1e-15));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expr("2*"), ParseError);
    CHECK_THROWS_AS(parse_expr("foo(3)"), ParseError);
    CHECK_THROWS_AS(parse_expr("(1+2"), ParseError);
    CHECK_THROWS_AS(parse_expr("1 $ 2"), ParseError);
    try {
        parse_expr("1 + &");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("evaluation reports domain problems instead of NaN") {
    CHECK_THROWS_AS(eval("log(0-1)"), EvalError);
    CHECK_THROWS_AS(eval("sqrt(0-1)"), EvalError);
    CHECK_THROWS_AS(eval("1/0"), EvalError);
    CHECK_THROWS_AS(eval("0^-1"), EvalError);
    CHECK_THROWS_AS(eval("(0-2)^0.5"), EvalError); // positive bases only
    CHECK_THROWS_AS(eval("x+1"), EvalError);       // missing variable
}

TEST_CASE("binding fixes the argument order") {
    const Expr e = parse_expr("a/b");
    const ScalarFunction f = bind_expr(e, {"b", "a"});
    CHECK(f({2.0, 10.0}) == 5.0);
    CHECK_THROWS_AS(bind_expr(e, {"a"}), EvalError);
    CHECK_THROWS_AS(f({1.0}), EvalError);
}

namespace {

Expr random_expr(TestRng& rng, int depth) {
    const std::vector<std::string> vars = {"x", "y", "z"};
    if (depth <= 0 || rng.int_in(0, 3) == 0) {
        switch (rng.int_in(0, 2)) {
        case 0: return parse_expr(std::to_string(rng.int_in(1, 99)));
        case 1: return parse_expr(vars[static_cast<std::size_t>(rng.int_in(0, 2))]);
        default: return parse_expr("pi");
        }
    }
    const Expr lhs = random_expr(rng, depth - 1);
    const Expr rhs = random_expr(rng, depth - 1);
    switch (rng.int_in(0, 6)) {
    case 0: return parse_expr(lhs.str() + "+" + rhs.str());
    case 1: return parse_expr(lhs.str() + "-" + rhs.str());
    case 2: return parse_expr(lhs.str() + "*" + rhs.str());
    case 3: return parse_expr(lhs.str() + "/" + rhs.str());
    case 4: return parse_expr(lhs.str() + "^" + rhs.str());
    case 5: return parse_expr("-(" + lhs.str() + ")");
    default: return parse_expr("sqrt(" + lhs.str() + ")");
    }
}

} // namespace

TEST_CASE("rendering round-trips the tree") {
    for (const char* src : {"2*pi*sqrt(l/g)", "sqrt(2*g*h*abs(m1-m2)/(m1+m2))", "2^3^2",
                            "-x^2", "a-(b-c)", "(a+b)*c", "a/(b*c)", "x^(1/2)"}) {
        const Expr e = parse_expr(src);
        CAPTURE(src);
        CAPTURE(e.str());
        CHECK(parse_expr(e.str()).same_tree(e));
    }
    TestRng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const Expr e = random_expr(rng, 4);
        CAPTURE(e.str());
        CHECK(parse_expr(e.str()).same_tree(e));
    }
}
