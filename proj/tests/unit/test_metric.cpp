#include <doctest.h>

#include <cmath>

#include "hdc/metric.hpp"
#include "hdc/mobius.hpp"
#include "hdc/rng.hpp"

using namespace hdc;

namespace {

Point sample_in(const DomainSpec& d, Rng& rng, double margin = 1e-4) {
    if (d.kind() == DomainKind::half_space) {
        std::vector<double> c(d.dim());
        for (std::size_t i = 0; i + 1 < d.dim(); ++i) c[i] = rng.uniform(-2.0, 2.0);
        c[d.dim() - 1] = rng.log_uniform(margin, 2.0);
        return Point(std::move(c));
    }
    while (true) {
        const Point p = rng.uniform(margin, 1.0 - margin) * random_unit_vector(d.dim(), rng);
        if (d.contains(p)) return p;
    }
}

}  // namespace

TEST_CASE("metric params validate c and flag the axiom range") {
    CHECK_THROWS_AS(MetricParams(0.0), std::invalid_argument);
    CHECK_THROWS_AS(MetricParams(-1.0), std::invalid_argument);
    CHECK(MetricParams(2.0).metric_axioms_guaranteed());
    CHECK(MetricParams(5.0).metric_axioms_guaranteed());
    CHECK_FALSE(MetricParams(1.5).metric_axioms_guaranteed());
}

TEST_CASE("h vanishes exactly on the diagonal") {
    const DomainSpec ball = DomainSpec::unit_ball(2);
    const Point x{0.3, -0.2};
    CHECK(h_eval(ball, MetricParams(2.0), x, x) == 0.0);
}

TEST_CASE("unit ball value: log(1 + sqrt(2)) at x=0, y=(1/2)e_1, c=2") {
    // c |x-y| / sqrt(d(x) d(y)) = 2*0.5/sqrt(0.5) = sqrt(2)
    const double h = h_eval(DomainSpec::unit_ball(2), MetricParams(2.0), Point::zero(2),
                            Point{0.5, 0.0});
    CHECK(h == doctest::Approx(0.8813735870195430).epsilon(1e-12));
}

TEST_CASE("half-space value: log 7 at unit heights three apart, c=2") {
    const double h = h_eval(DomainSpec::half_space(2), MetricParams(2.0), Point{0.0, 1.0},
                            Point{3.0, 1.0});
    CHECK(h == doctest::Approx(1.9459101490553132).epsilon(1e-12));
}

TEST_CASE("h is bit-for-bit symmetric") {
    const DomainSpec doms[] = {DomainSpec::unit_ball(3), DomainSpec::half_space(3),
                               DomainSpec::punctured_unit_ball(3, Point{0.1, 0.0, 0.2})};
    const MetricParams p(2.5);
    Rng rng(Seed{31, 0});
    for (const auto& d : doms) {
        for (int i = 0; i < 300; ++i) {
            const Point x = sample_in(d, rng);
            const Point y = sample_in(d, rng);
            CHECK(h_eval(d, p, x, y) == h_eval(d, p, y, x));
        }
    }
}

TEST_CASE("h grows with c") {
    const DomainSpec ball = DomainSpec::unit_ball(2);
    const Point x{0.1, 0.0}, y{0.0, -0.4};
    double prev = 0.0;
    for (double c : {0.5, 1.0, 2.0, 3.0, 5.0}) {
        const double h = h_eval(ball, MetricParams(c), x, y);
        CHECK(h > prev);
        prev = h;
    }
}

TEST_CASE("triangle inequality holds for c >= 2") {
    const DomainSpec doms[] = {DomainSpec::unit_ball(2), DomainSpec::half_space(2),
                               DomainSpec::punctured_unit_ball(2, Point::zero(2))};
    for (double c : {2.0, 2.5, 5.0}) {
        const MetricParams p(c);
        for (const auto& d : doms) {
            Rng rng(Seed{32, static_cast<std::uint64_t>(c * 10)});
            for (int i = 0; i < 2000; ++i) {
                const Point x = sample_in(d, rng), y = sample_in(d, rng), z = sample_in(d, rng);
                if (x == y || y == z || x == z) continue;
                const double hxz = h_eval(d, p, x, z);
                const double hxy = h_eval(d, p, x, y);
                const double hyz = h_eval(d, p, y, z);
                CHECK(hxz <= hxy + hyz + 1e-12 * std::max({hxz, hxy, hyz}));
            }
        }
    }
}

TEST_CASE("orthogonal maps leave the ball metric unchanged") {
    const DomainSpec ball = DomainSpec::unit_ball(3);
    const MetricParams p(2.0);
    const OrthogonalMatrix q = random_orthogonal(3, Seed{33, 0});
    Rng rng(Seed{33, 1});
    for (int i = 0; i < 500; ++i) {
        const Point x = sample_in(ball, rng);
        const Point y = sample_in(ball, rng);
        const double h = h_eval(ball, p, x, y);
        CHECK(h_eval(ball, p, q.apply(x), q.apply(y)) ==
              doctest::Approx(h).epsilon(1e-12));
    }
}

TEST_CASE("similarities leave the half-space metric unchanged") {
    const DomainSpec half = DomainSpec::half_space(2);
    const MetricParams p(2.0);
    Rng rng(Seed{34, 0});
    for (int i = 0; i < 500; ++i) {
        const Point x = sample_in(half, rng);
        const Point y = sample_in(half, rng);
        const double lambda = rng.uniform(0.2, 4.0);
        const Point shift{rng.uniform(-3.0, 3.0), 0.0};
        const Point xs = lambda * x + shift;
        const Point ys = lambda * y + shift;
        CHECK(h_eval(half, p, xs, ys) ==
              doctest::Approx(h_eval(half, p, x, y)).epsilon(1e-12));
    }
}

TEST_CASE("points outside the domain and vanishing distances are rejected") {
    const DomainSpec ball = DomainSpec::unit_ball(2);
    CHECK_THROWS_AS((void)h_eval(ball, MetricParams(2.0), Point{1.5, 0.0}, Point::zero(2)),
                    std::domain_error);
    // boundary distance below the 1e-300 guard
    const DomainSpec pball = DomainSpec::punctured_unit_ball(2, Point::zero(2));
    CHECK_THROWS_AS(
        (void)h_eval(pball, MetricParams(2.0), Point{1e-301, 0.0}, Point{0.5, 0.0}),
        std::range_error);
}

TEST_CASE("stable 1-|sigma_a(x)| at the involution corners") {
    const Point a{0.5, 0.0};
    CHECK(one_minus_norm_of_ball_inversion(a, a) == doctest::Approx(1.0).epsilon(1e-14));
    // sigma_a(0) = a, so the value at x = 0 is 1 - |a|
    CHECK(one_minus_norm_of_ball_inversion(a, Point::zero(2)) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS((void)one_minus_norm_of_ball_inversion(Point::zero(2), a),
                    std::domain_error);
    CHECK_THROWS_AS((void)one_minus_norm_of_ball_inversion(Point{1.0, 0.0}, a),
                    std::domain_error);
}

TEST_CASE("stable form matches the naive evaluation away from the sphere") {
    Rng rng(Seed{35, 0});
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = (i % 2) ? 2 : 3;
        const Point a = rng.uniform(0.05, 0.9) * random_unit_vector(n, rng);
        const Point x = rng.uniform(0.0, 0.99) * random_unit_vector(n, rng);
        const double stable = one_minus_norm_of_ball_inversion(a, x);
        const double naive = 1.0 - norm(sigma_a(a).apply(x));
        CHECK(stable == doctest::Approx(naive).epsilon(1e-9));
    }
}

TEST_CASE("stable form survives 1-|x| down to 1e-14") {
    Rng rng(Seed{36, 0});
    for (double mu : {1e-9, 1e-12, 1e-14}) {
        for (int i = 0; i < 200; ++i) {
            const Point a = rng.uniform(0.1, 0.9) * random_unit_vector(2, rng);
            const Point x = (1.0 - mu) * random_unit_vector(2, rng);
            const double v = one_minus_norm_of_ball_inversion(a, x);
            CHECK(v > 0.0);
            CHECK(std::isfinite(v));
        }
    }
}
