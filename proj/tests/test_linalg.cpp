#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piquant/linalg.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace piquant;
using testutil::TestRng;

namespace {

const Rational R0(0), R1(1), R2(2);

RatMatrix atwood_matrix() {
    return RatMatrix{{R0, R0, R1, R1}, {R1, R1, R0, R0}, {R0, R0, R0, Rational(-2)}};
}

// columns (0,1,0), (1,0,0), (1,0,-2) for (m, l, g) over (m, kg, s)
RatMatrix pendulum_matrix() {
    return RatMatrix{{R0, R1, R1}, {R1, R0, R0}, {R0, R0, Rational(-2)}};
}

} // namespace

TEST_CASE("rref of the identity is the identity") {
    const RatMatrix id = RatMatrix::identity(4);
    const auto [r, pivots] = rref(id);
    CHECK(r == id);
    CHECK(pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rref of the Atwood matrix") {
    const auto [r, pivots] = rref(atwood_matrix());
    CHECK(pivots == std::vector<std::size_t>{0, 2, 3});
    const RatMatrix expected{{R1, R1, R0, R0}, {R0, R0, R1, R0}, {R0, R0, R0, R1}};
    CHECK(r == expected);
}

TEST_CASE("rref of the zero matrix has no pivots") {
    const RatMatrix z(3, 4);
    const auto [r, pivots] = rref(z);
    CHECK(r == z);
    CHECK(pivots.empty());
}

TEST_CASE("rank of the worked examples") {
    CHECK(rank(pendulum_matrix()) == 3);
    CHECK(rank(atwood_matrix()) == 3);
    CHECK(rank(RatMatrix(3, 4)) == 0);
}

TEST_CASE("kernel basis of the Atwood matrix is (1, -1, 0, 0)") {
    const auto basis = kernel_basis(atwood_matrix());
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{R1, Rational(-1), R0, R0});
}

TEST_CASE("full column rank means an empty kernel") {
    CHECK(kernel_basis(pendulum_matrix()).empty());
}

TEST_CASE("random kernels are exact and complete") {
    TestRng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix a = testutil::random_int_matrix(rng, 3, 5, -4, 4);
        const auto basis = kernel_basis(a);
        CHECK(basis.size() == 5 - rank(a));
        for (const auto& x : basis) {
            const auto image = a.apply(x);
            for (const auto& v : image) {
                CHECK(v == 0);
            }
            // canonical form: integer entries, content 1, leading positive
            Integer content = 0;
            const Rational* first_nonzero = nullptr;
            for (const auto& q : x) {
                CHECK(denominator(q) == 1);
                content = gcd(content, numerator(q));
                if (!first_nonzero && q != 0) {
                    first_nonzero = &q;
                }
            }
            REQUIRE(first_nonzero != nullptr);
            CHECK(*first_nonzero > 0);
            CHECK(content == 1);
        }
    }
}

TEST_CASE("exact pseudoinverse: identity and zero") {
    CHECK(pinv(RatMatrix::identity(3)) == RatMatrix::identity(3));
    const RatMatrix zero(2, 5);
    const RatMatrix zdag = pinv(zero);
    CHECK(zdag.rows() == 5);
    CHECK(zdag.cols() == 2);
    CHECK(zdag == RatMatrix(5, 2));
}

TEST_CASE("exact pseudoinverse of a row vector") {
    // oracle: B^T (B B^T)^-1 with B B^T = 2
    const RatMatrix b{{R1, Rational(-1), R0, R0}};
    const RatMatrix bdag = pinv(b);
    const RatMatrix expected{{Rational(1, 2)}, {Rational(-1, 2)}, {R0}, {R0}};
    CHECK(bdag == expected);
}

TEST_CASE("numerical pseudoinverse matches on simple cases") {
    const RealMatrix id = RealMatrix::identity(3);
    const RealMatrix idp = pinv(id);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(idp.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
    }
    const RealMatrix b{{1.0, -1.0, 0.0, 0.0}};
    const RealMatrix bdag = pinv(b);
    CHECK(bdag.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bdag.at(1, 0) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(bdag.at(2, 0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("non-finite input is rejected") {
    RealMatrix b(2, 2);
    b.at(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(pinv(b), DomainError);
}

namespace {

void check_penrose_exact(const RatMatrix& b) {
    const RatMatrix bd = pinv(b);
    CHECK(b * bd * b == b);
    CHECK(bd * b * bd == bd);
    const RatMatrix bbd = b * bd;
    const RatMatrix bdb = bd * b;
    CHECK(bbd == bbd.transposed());
    CHECK(bdb == bdb.transposed());
}

double penrose_defect_real(const RealMatrix& b) {
    const RealMatrix bd = pinv(b);
    const auto diff = [](const RealMatrix& x, const RealMatrix& y) {
        double worst = 0.0;
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) {
                worst = std::max(worst, std::abs(x.at(i, j) - y.at(i, j)));
            }
        }
        return worst;
    };
    double worst = diff(b * bd * b, b);
    worst = std::max(worst, diff(bd * b * bd, bd));
    worst = std::max(worst, diff(b * bd, (b * bd).transposed()));
    worst = std::max(worst, diff(bd * b, (bd * b).transposed()));
    return worst;
}

} // namespace

TEST_CASE("Penrose conditions hold for 200 random matrices") {
    TestRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.int_in(1, 8));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 8));
        const RatMatrix b = testutil::random_int_matrix(rng, m, n, -5, 5);
        check_penrose_exact(b);
        CHECK(penrose_defect_real(RealMatrix::from(b)) < 1e-9);
        // involution: pinv(pinv(B)) == B, exactly on the rational route
        CHECK(pinv(pinv(b)) == b);
    }
}

TEST_CASE("exact pseudoinverse agrees with the Newton-Schulz oracle") {
    TestRng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.int_in(1, 6));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        const RatMatrix b = testutil::random_int_matrix(rng, m, n, -4, 4);
        const testutil::DMat oracle = testutil::newton_schulz_pinv(testutil::from_rational(b));
        const testutil::DMat mine = testutil::from_rational(pinv(b));
        CHECK(testutil::max_abs_diff(oracle, mine) < 1e-8);
    }
}

TEST_CASE("full-rank closed forms") {
    TestRng rng(31);
    int full_row = 0;
    int full_col = 0;
    while (full_row < 20 || full_col < 20) {
        const std::size_t m = static_cast<std::size_t>(rng.int_in(1, 5));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 5));
        const RatMatrix b = testutil::random_int_matrix(rng, m, n, -5, 5);
        const std::size_t r = rank(b);
        const RatMatrix bt = b.transposed();
        if (r == m && full_row < 20) {
            CHECK(pinv(b) == bt * invert(b * bt));
            ++full_row;
        }
        if (r == n && full_col < 20) {
            CHECK(pinv(b) == invert(bt * b) * bt);
            ++full_col;
        }
    }
}

TEST_CASE("infinity operator norm") {
    CHECK(inf_norm(atwood_matrix()) == 2);
    CHECK(inf_norm(RatMatrix::identity(5)) == 1);
    const RealMatrix b{{1.0, -2.0}, {3.0, 4.0}};
    CHECK(inf_norm(b) == doctest::Approx(7.0));
}

TEST_CASE("minimum-norm solve on the worked examples") {
    SUBCASE("pendulum") {
        const auto sol = min_norm_solve(pendulum_matrix(), {R0, R0, R1});
        CHECK(sol.y == std::vector<Rational>{R0, Rational(1, 2), Rational(-1, 2)});
        CHECK(sol.residual == 0);
    }
    SUBCASE("atwood") {
        const auto sol = min_norm_solve(atwood_matrix(), {R1, R0, Rational(-1)});
        CHECK(sol.y == std::vector<Rational>{R0, R0, Rational(1, 2), Rational(1, 2)});
        CHECK(sol.residual == 0);
    }
    SUBCASE("zero right-hand side") {
        const auto sol = min_norm_solve(atwood_matrix(), {R0, R0, R0});
        CHECK(sol.y == std::vector<Rational>(4, R0));
        CHECK(sol.residual == 0);
    }
}

TEST_CASE("minimum-norm solution is orthogonal to the kernel and minimal") {
    TestRng rng(57);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.int_in(1, 4));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        const RatMatrix a = testutil::random_int_matrix(rng, m, n, -3, 3);
        std::vector<Rational> b(m);
        for (auto& q : b) {
            q = Rational(rng.int_in(-3, 3));
        }
        const auto sol = min_norm_solve(a, b);
        const auto kernel = kernel_basis(a);
        Rational norm2(0);
        for (const auto& q : sol.y) {
            norm2 += q * q;
        }
        for (const auto& x : kernel) {
            Rational dot(0);
            for (std::size_t j = 0; j < n; ++j) {
                dot += sol.y[j] * x[j];
            }
            CHECK(dot == 0);
            // adding any kernel direction only grows the norm
            for (int t = -2; t <= 2; ++t) {
                if (t == 0) {
                    continue;
                }
                Rational shifted(0);
                for (std::size_t j = 0; j < n; ++j) {
                    const Rational yj = sol.y[j] + Rational(t) * x[j];
                    shifted += yj * yj;
                }
                CHECK(shifted >= norm2);
            }
        }
    }
}

TEST_CASE("exact solutions when the target is in the range") {
    TestRng rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.int_in(1, 4));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        const RatMatrix a = testutil::random_int_matrix(rng, m, n, -3, 3);
        const std::vector<Rational> y0 = testutil::random_exponents(rng, n);
        const std::vector<Rational> b = a.apply(y0);
        const auto sol = min_norm_solve(a, b);
        CHECK(sol.residual == 0);
        CHECK(a.apply(sol.y) == b);
    }
}
