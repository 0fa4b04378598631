#include <doctest.h>

#include <algorithm>

#include "hdc/domain.hpp"
#include "hdc/rng.hpp"

using namespace hdc;

TEST_CASE("strict membership of the canonical domains") {
    const DomainSpec ball = DomainSpec::unit_ball(2);
    CHECK(ball.contains(Point{0.5, 0.0}));
    CHECK_FALSE(ball.contains(Point{1.0, 0.0}));  // boundary excluded
    CHECK_FALSE(ball.contains(Point::infinity()));

    const DomainSpec half = DomainSpec::half_space(2);
    CHECK(half.contains(Point{3.0, 0.1}));
    CHECK_FALSE(half.contains(Point{1.0, 0.0}));
    CHECK_FALSE(half.contains(Point{0.0, -0.5}));

    const DomainSpec pball = DomainSpec::punctured_unit_ball(2, Point{0.3, 0.0});
    CHECK(pball.contains(Point{0.5, 0.0}));
    CHECK_FALSE(pball.contains(Point{0.3, 0.0}));  // puncture excluded
}

TEST_CASE("boundary distances of the canonical domains") {
    const DomainSpec ball = DomainSpec::unit_ball(2);
    CHECK(ball.boundary_distance(Point{0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));

    const DomainSpec half = DomainSpec::half_space(3);
    CHECK(half.boundary_distance(Point{1.0, 2.0, 0.25}) == 0.25);

    const DomainSpec pball = DomainSpec::punctured_unit_ball(2, Point::zero(2));
    CHECK(pball.boundary_distance(Point{0.3, 0.0}) == doctest::Approx(0.3).epsilon(1e-15));

    CHECK_THROWS_AS((void)ball.boundary_distance(Point{1.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS((void)pball.boundary_distance(Point::zero(2)), std::domain_error);
}

TEST_CASE("punctured ball distance follows the three-way radius split") {
    const DomainSpec pball = DomainSpec::punctured_unit_ball(3, Point::zero(3));
    Rng rng(Seed{21, 0});
    for (int i = 0; i < 2000; ++i) {
        const double r = rng.uniform(1e-3, 1.0 - 1e-3);
        const Point x = r * random_unit_vector(3, rng);
        const double bd = pball.boundary_distance(x);
        if (norm(x) >= 0.5)
            CHECK(bd == one_minus_norm(x));
        else
            CHECK(bd == norm(x));
    }
}

TEST_CASE("boundary distance is positive exactly on membership") {
    const DomainSpec doms[] = {DomainSpec::unit_ball(2), DomainSpec::half_space(2),
                               DomainSpec::punctured_unit_ball(2, Point{0.2, 0.1})};
    Rng rng(Seed{22, 0});
    for (const auto& d : doms) {
        for (int i = 0; i < 500; ++i) {
            const Point x{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
            if (d.contains(x))
                CHECK(d.boundary_distance(x) > 0.0);
            else
                CHECK_THROWS_AS((void)d.boundary_distance(x), std::domain_error);
        }
    }
}

TEST_CASE("puncture must be interior") {
    CHECK_THROWS_AS(DomainSpec::punctured_unit_ball(2, Point{1.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DomainSpec::punctured_unit_ball(2, Point{0.0, 0.0, 0.0}),
                    std::invalid_argument);
}
