#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piquant/quantity.hpp"
#include "piquant/errors.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace piquant;
using testutil::TestRng;

namespace {

const Basis& mks() {
    static const Basis basis(std::vector<std::string>{"m", "kg", "s"});
    return basis;
}

Dimension dim(std::vector<Rational> exps) { return Dimension(mks(), std::move(exps)); }

ScaleVector scale(std::vector<double> f) { return ScaleVector(mks(), std::move(f)); }

ScaleVector random_scale(TestRng& rng) {
    return scale({rng.log_box(50.0), rng.log_box(50.0), rng.log_box(50.0)});
}

Dimension random_dim(TestRng& rng) {
    return dim({Rational(rng.int_in(-3, 3), rng.int_in(1, 2)),
                Rational(rng.int_in(-3, 3), rng.int_in(1, 2)),
                Rational(rng.int_in(-3, 3), rng.int_in(1, 2))});
}

} // namespace

TEST_CASE("construction canonicalizes the scale") {
    // 100 at centimeter scale is the same quantity as 1 meter
    const Quantity p = Quantity::from(100.0, scale({0.01, 1, 1}), dim({1, 0, 0}));
    CHECK(p.value() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p == Quantity::from(1.0, ScaleVector::ones(mks()), dim({1, 0, 0})));

    const Quantity q = Quantity::from(7.5, ScaleVector::ones(mks()), dim({2, 1, 0}));
    CHECK(q.value() == 7.5);

    const Basis two(std::vector<std::string>{"m", "kg"});
    const Quantity r = Quantity::from(2.0, ScaleVector(two, {4.0, 1.0}),
                                      Dimension(two, {Rational(1, 2), Rational(0)}));
    CHECK(r.value() == doctest::Approx(4.0).epsilon(1e-12)); // 2 * 4^(1/2)
}

TEST_CASE("construction rejects bad scales and mixed bases") {
    CHECK_THROWS_AS(scale({0.0, 1, 1}), DomainError);
    CHECK_THROWS_AS(scale({-2.0, 1, 1}), DomainError);
    const Basis other(std::vector<std::string>{"x", "y", "z"});
    CHECK_THROWS_AS(Quantity::from(1.0, ScaleVector::ones(other), dim({1, 0, 0})),
                    DimensionError);
}

TEST_CASE("coordinates in rescaled units") {
    const Quantity p(1.0, dim({1, 0, 0}));
    CHECK(p.coordinate_in(scale({0.01, 1, 1})) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(p.coordinate_in(ScaleVector::ones(mks())) == 1.0);

    const Quantity volume(1.0, dim({3, 0, 0}));
    CHECK(volume.coordinate_in(scale({0.01, 1, 1})) == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("multiplication follows the monoid rules") {
    const Dimension alpha = dim({1, 0, 0});
    const Dimension beta = dim({0, 1, 0});
    const Quantity p(2.0, alpha);
    const Quantity q(3.0, beta);
    const Quantity pq = p * q;
    CHECK(pq.value() == 6.0);
    CHECK(pq.dimension() == alpha + beta);

    CHECK(p * Quantity::one(mks()) == p);

    // pendulum: l * g^-1 has dimension (0, 0, 2)
    const Quantity l(1.0, dim({1, 0, 0}));
    const Quantity g(9.81, dim({1, 0, -2}));
    CHECK((l * g.inverse()).dimension() == dim({0, 0, 2}));
}

TEST_CASE("inversion") {
    const Dimension alpha = dim({1, 2, 0});
    const Quantity p(2.0, alpha);
    const Quantity inv = p.inverse();
    CHECK(inv.value() == 0.5);
    CHECK(inv.dimension() == -alpha);
    CHECK(Quantity::one(mks()).inverse() == Quantity::one(mks()));
    CHECK_THROWS_AS(Quantity(0.0, alpha).inverse(), DomainError);
}

TEST_CASE("addition stays inside one dimension class") {
    const Dimension alpha = dim({1, 0, -1});
    const Quantity p(2.0, alpha);
    const Quantity q(3.0, alpha);
    CHECK((p + q).value() == 5.0);
    CHECK((p + q).dimension() == alpha);
    CHECK((p + (-1.0 * p)).value() == 0.0);
    CHECK_THROWS_AS(p + Quantity(3.0, dim({0, 1, 0})), DimensionError);
}

TEST_CASE("triple equivalence per the defining relation") {
    CHECK(equivalent(100.0, scale({0.01, 1, 1}), dim({1, 0, 0}),
                     1.0, ScaleVector::ones(mks()), dim({1, 0, 0})));
    CHECK(equivalent(2.5, scale({3, 2, 1}), dim({1, 1, 0}),
                     2.5, scale({3, 2, 1}), dim({1, 1, 0})));
    CHECK_FALSE(equivalent(2.5, scale({3, 2, 1}), dim({1, 1, 0}),
                           2.5, scale({3, 2, 1}), dim({1, 0, 0})));
}

TEST_CASE("equivalence is an equivalence relation") {
    TestRng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Dimension alpha = random_dim(rng);
        const double x = rng.uniform(-10, 10);
        const ScaleVector c = random_scale(rng);
        CHECK(equivalent(x, c, alpha, x, c, alpha)); // reflexive

        // construct an equivalent triple at another scale, then a third
        const ScaleVector d = random_scale(rng);
        const double y = x * scale_power(c, alpha) / scale_power(d, alpha);
        const ScaleVector e = random_scale(rng);
        const double z = y * scale_power(d, alpha) / scale_power(e, alpha);
        CHECK(equivalent(x, c, alpha, y, d, alpha));
        CHECK(equivalent(y, d, alpha, x, c, alpha)); // symmetric
        CHECK(equivalent(y, d, alpha, z, e, alpha));
        CHECK(equivalent(x, c, alpha, z, e, alpha)); // transitive
    }
}

TEST_CASE("rescaling is consistent across scale changes") {
    TestRng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Dimension alpha = random_dim(rng);
        const Quantity p(rng.uniform(-5, 5), alpha);
        const ScaleVector c = random_scale(rng);
        const ScaleVector d = random_scale(rng);
        // [p]_d = [p]_c (c/d)^alpha
        std::vector<double> ratio(3);
        for (std::size_t i = 0; i < 3; ++i) {
            ratio[i] = c[i] / d[i];
        }
        const double direct = p.coordinate_in(d);
        const double via_c = p.coordinate_in(c) * scale_power(scale(ratio), alpha);
        CHECK(direct == doctest::Approx(via_c).epsilon(1e-12));
    }
}

TEST_CASE("multiplication laws on random quantities") {
    TestRng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Quantity p(rng.uniform(-4, 4), random_dim(rng));
        const Quantity q(rng.uniform(-4, 4), random_dim(rng));
        const Quantity r(rng.uniform(-4, 4), random_dim(rng));
        CHECK((p * q) == (q * p));
        CHECK(((p * q) * r) == (p * (q * r)));
        CHECK((p * q).dimension() == p.dimension() + q.dimension());
        const ScaleVector c = random_scale(rng);
        CHECK((p * q).coordinate_in(c) ==
              doctest::Approx(p.coordinate_in(c) * q.coordinate_in(c)).epsilon(1e-12));
    }
}

TEST_CASE("additive group laws within a dimension class") {
    TestRng rng(19);
    const Dimension alpha = dim({2, -1, Rational(1, 2)});
    const Quantity zero(0.0, alpha);
    for (int trial = 0; trial < 100; ++trial) {
        const Quantity p(rng.uniform(-4, 4), alpha);
        const Quantity q(rng.uniform(-4, 4), alpha);
        const Quantity r(rng.uniform(-4, 4), alpha);
        CHECK((p + q) == (q + p));
        CHECK(((p + q) + r) == (p + (q + r)));
        CHECK((p + zero) == p);
        CHECK((p + (-p)).value() == 0.0);
        const ScaleVector c = random_scale(rng);
        CHECK((p + q).coordinate_in(c) ==
              doctest::Approx(p.coordinate_in(c) + q.coordinate_in(c)).epsilon(1e-12));
    }
}

TEST_CASE("positivity is scale independent") {
    TestRng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const Quantity p(rng.uniform(-4, 4), random_dim(rng));
        for (int s = 0; s < 5; ++s) {
            const ScaleVector c = random_scale(rng);
            CHECK(p.positive() == (p.coordinate_in(c) > 0.0));
        }
    }
}

TEST_CASE("scale powers guard against overflow") {
    const ScaleVector huge = scale({1e300, 1e300, 1.0});
    CHECK_THROWS_AS(scale_power(huge, dim({2, 1, 0})), DomainError);
    CHECK(scale_power(huge, dim({0, 0, 1})) == 1.0);
}

// Lifting a scale-consistent function through coordinates lands on one and
// the same quantity no matter which scale the coordinates were taken in; a
// function without that consistency visibly fails for some scale.
TEST_CASE("function lift invariant") {
    TestRng rng(37);
    const Dimension dim_m = dim({0, 1, 0});
    const Dimension dim_l = dim({1, 0, 0});
    const Dimension dim_g = dim({1, 0, -2});
    const Dimension beta = dim({0, 0, 1});

    const auto period = [](double /*m*/, double l, double g) {
        return 2.0 * 3.14159265358979323846 * std::sqrt(l / g);
    };
    const auto broken = [](double /*m*/, double l, double g) { return l + g; };

    for (int trial = 0; trial < 50; ++trial) {
        const Quantity pm(rng.log_box(10.0), dim_m);
        const Quantity pl(rng.log_box(10.0), dim_l);
        const Quantity pg(rng.log_box(10.0), dim_g);

        const Quantity lifted(period(pm.value(), pl.value(), pg.value()), beta);
        bool broken_differs = false;
        for (int s = 0; s < 10; ++s) {
            const ScaleVector c = random_scale(rng);
            const Quantity at_c = Quantity::from(
                period(pm.coordinate_in(c), pl.coordinate_in(c), pg.coordinate_in(c)), c, beta);
            CHECK(at_c == lifted);

            const Quantity broken_lift(broken(pm.value(), pl.value(), pg.value()), beta);
            const Quantity broken_at_c = Quantity::from(
                broken(pm.coordinate_in(c), pl.coordinate_in(c), pg.coordinate_in(c)), c, beta);
            if (!(broken_at_c == broken_lift)) {
                broken_differs = true;
            }
        }
        CHECK(broken_differs);
    }
}
