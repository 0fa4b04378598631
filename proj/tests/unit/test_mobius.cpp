#include <doctest.h>

#include <cmath>
#include <variant>

#include "hdc/domain.hpp"
#include "hdc/mobius.hpp"
#include "hdc/rng.hpp"

using namespace hdc;

TEST_CASE("sigma_a builds the inversion in S(a*, r)") {
    const MobiusMap f = sigma_a(Point{0.5, 0.0});
    REQUIRE(f.chain().size() == 1);
    const auto& inv = std::get<SphereInversion>(f.chain().front());
    CHECK(inv.center == Point{2.0, 0.0});            // a* = a/|a|^2
    CHECK(inv.radius_sq == doctest::Approx(3.0));    // |a|^-2 - 1

    CHECK_THROWS_AS(sigma_a(Point::zero(2)), std::domain_error);
    CHECK_THROWS_AS(sigma_a(Point{1.0, 0.0}), std::domain_error);
}

TEST_CASE("sigma_a corner values: a -> 0, a* -> inf, 0 -> a") {
    const Point a{0.5, 0.0};
    const MobiusMap f = sigma_a(a);
    CHECK(dist(f.apply(a), Point::zero(2)) <= 1e-15);
    CHECK(f.apply(Point{2.0, 0.0}).is_infinity());
    CHECK(dist(f.apply(Point::zero(2)), a) <= 1e-15);
}

TEST_CASE("sigma_a is an involutive self-map of the ball") {
    Rng rng(Seed{41, 0});
    const Point a = Point{0.35, -0.2};
    const MobiusMap f = sigma_a(a);
    for (int i = 0; i < 1000; ++i) {
        const Point x = rng.uniform(0.0, 0.999) * random_unit_vector(2, rng);
        const Point fx = f.apply(x);
        CHECK(norm(fx) < 1.0);
        CHECK(dist(f.apply(fx), x) <= 1e-10 * std::max(1.0, norm(x)));
    }
}

TEST_CASE("ball_automorphism sends a to the origin") {
    const Point a{0.5, 0.0};
    CHECK(dist(ball_automorphism(a).apply(a), Point::zero(2)) <= 1e-15);

    // a = 0 with A = I is the identity
    const MobiusMap id = ball_automorphism(Point::zero(2), OrthogonalMatrix::identity(2));
    const Point x{0.3, 0.7};
    CHECK(id.apply(x) == x);

    const OrthogonalMatrix q = random_orthogonal(3, Seed{42, 0});
    const Point a3{0.2, 0.1, -0.4};
    const MobiusMap f = ball_automorphism(a3, q);
    CHECK(dist(f.apply(a3), Point::zero(3)) <= 1e-14);
    Rng rng(Seed{42, 1});
    for (int i = 0; i < 1000; ++i) {
        const Point x = rng.uniform(0.0, 0.999) * random_unit_vector(3, rng);
        CHECK(norm(f.apply(x)) < 1.0);
    }
    CHECK_THROWS_AS(ball_automorphism(Point{1.2, 0.0}), std::domain_error);
}

TEST_CASE("ball_to_halfspace maps 0 to e_n with the stated height formula") {
    const MobiusMap f = ball_to_halfspace(2);
    CHECK(dist(f.apply(Point::zero(2)), Point{0.0, 1.0}) <= 1e-15);
    // sigma_n(x) = (1-|x|^2)/|x+e_n|^2 = 0.75/1.25 at x = (1/2)e_1
    CHECK(f.apply(Point{0.5, 0.0}).last() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(f.apply(Point{0.0, -1.0}).is_infinity());

    const DomainSpec half = DomainSpec::half_space(2);
    Rng rng(Seed{43, 0});
    for (int i = 0; i < 1000; ++i) {
        const Point x = rng.uniform(0.0, 0.999) * random_unit_vector(2, rng);
        const Point fx = f.apply(x);
        CHECK(half.contains(fx));
        const double expect = (1.0 - norm_sq(x)) / norm_sq(x + Point{0.0, 1.0});
        CHECK(fx.last() == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("halfspace_mobius composes translation, unit inversion, similarity") {
    // anchor at infinity with the identity similarity is the identity
    const MobiusMap id = halfspace_mobius(Point::infinity(), MobiusMap());
    const Point x{0.4, 1.3};
    CHECK(id.apply(x) == x);

    // pure unit inversion fixes unit vectors
    const MobiusMap inv = halfspace_mobius(Point::zero(2), MobiusMap());
    CHECK(dist(inv.apply(Point{0.0, 1.0}), Point{0.0, 1.0}) <= 1e-15);

    // translate by -(1,0) then invert: (1,1) -> (0,1) -> (0,1)
    const MobiusMap f = halfspace_mobius(Point{1.0, 0.0}, MobiusMap());
    CHECK(dist(f.apply(Point{1.0, 1.0}), Point{0.0, 1.0}) <= 1e-15);

    CHECK_THROWS_AS(halfspace_mobius(Point{0.0, 0.5}, MobiusMap()), std::domain_error);
    CHECK_THROWS_AS(
        halfspace_mobius(Point::infinity(), MobiusMap({Translation{Point{0.0, 1.0}}})),
        std::domain_error);
    CHECK_THROWS_AS(halfspace_mobius(Point::infinity(), unit_sphere_inversion(2)),
                    std::domain_error);
}

TEST_CASE("composition applies left to right and inverts chainwise") {
    const MobiusMap m = compose(MobiusMap({Translation{Point{1.0, 0.0}}}),
                                MobiusMap({Scaling{2.0}}));
    CHECK(m.apply(Point{0.0, 1.0}) == Point{2.0, 2.0});

    Rng rng(Seed{44, 0});
    const MobiusMap f = compose(compose(sigma_a(Point{0.4, 0.1}), MobiusMap({Scaling{1.5}})),
                                MobiusMap({Translation{Point{0.2, -0.3}}}));
    const MobiusMap fi = f.inverse();
    for (int i = 0; i < 1000; ++i) {
        const Point x = rng.uniform(0.0, 0.99) * random_unit_vector(2, rng);
        CHECK(dist(fi.apply(f.apply(x)), x) <= 1e-10 * std::max(1.0, norm(x)));
    }
}

TEST_CASE("sphere inversions are self-inverse") {
    const MobiusMap f = sigma_a(Point{0.3, 0.4});
    const MobiusMap fi = f.inverse();
    REQUIRE(fi.chain().size() == 1);
    const auto& a = std::get<SphereInversion>(f.chain().front());
    const auto& b = std::get<SphereInversion>(fi.chain().front());
    CHECK(a.center == b.center);
    CHECK(a.radius_sq == b.radius_sq);
}

TEST_CASE("inverse of A∘sigma_a acts as sigma_a∘A^T") {
    const Point a{0.5, 0.0, 0.1};
    const OrthogonalMatrix A = random_orthogonal(3, Seed{45, 0});
    const MobiusMap f = ball_automorphism(a, A);
    const MobiusMap fi = f.inverse();
    const OrthogonalMatrix At = A.transpose();
    const MobiusMap expected = compose(MobiusMap({Orthogonal{At}}), sigma_a(a));
    Rng rng(Seed{45, 1});
    for (int i = 0; i < 1000; ++i) {
        const Point u = rng.uniform(0.0, 0.99) * random_unit_vector(3, rng);
        CHECK(dist(fi.apply(u), expected.apply(u)) <= 1e-12 * std::max(1.0, norm(u)));
    }
}

TEST_CASE("inversion distance identity at hand-checked points") {
    const Point center{2.0, 0.0};  // a* for a = (1/2)e_1
    const auto [l0, r0] = inversion_distance_identity(center, 3.0, Point{0.7, 0.1},
                                                      Point{0.7, 0.1});
    CHECK(l0 == 0.0);
    CHECK(r0 == 0.0);

    const auto [lhs, rhs] = inversion_distance_identity(center, 3.0, Point::zero(2),
                                                        Point{0.25, 0.0});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    CHECK_THROWS_AS(inversion_distance_identity(center, 3.0, center, Point::zero(2)),
                    std::domain_error);
}

TEST_CASE("pole handling: exact center to infinity, near-center guarded") {
    const MobiusMap f = sigma_a(Point{0.5, 0.0});
    CHECK(f.apply(Point{2.0, 0.0}).is_infinity());
    CHECK(f.apply(Point::infinity()) == Point{2.0, 0.0});
    // a representable offset below 1e-300 needs a center at the origin
    const MobiusMap u = unit_sphere_inversion(2);
    CHECK(u.apply(Point::zero(2)).is_infinity());
    CHECK_THROWS_AS((void)u.apply(Point{1e-301, 0.0}), std::range_error);
}

TEST_CASE("ball identity pins |a||a - a*| = 1 - |a|^2") {
    Rng rng(Seed{46, 0});
    for (int i = 0; i < 200; ++i) {
        const Point a = rng.uniform(0.05, 0.95) * random_unit_vector(2, rng);
        const double lhs = norm(a) * dist(a, star(a));
        CHECK(lhs == doctest::Approx(1.0 - norm_sq(a)).epsilon(1e-12));
    }
}
