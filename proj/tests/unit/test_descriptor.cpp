#include <doctest.h>

#include "hdc/descriptor.hpp"

using namespace hdc;

TEST_CASE("point descriptors") {
    CHECK(parse_point("0.5,0") == Point{0.5, 0.0});
    CHECK(parse_point("1,-2,3.25") == Point{1.0, -2.0, 3.25});
    CHECK(parse_point("inf").is_infinity());
    CHECK_THROWS_AS(parse_point("1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("a,b"), std::invalid_argument);
}

TEST_CASE("domain descriptors") {
    CHECK(parse_domain("ball:2").kind() == DomainKind::unit_ball);
    CHECK(parse_domain("half:3").dim() == 3);
    const DomainSpec p = parse_domain("pball:2:0.3,0");
    CHECK(p.kind() == DomainKind::punctured_unit_ball);
    CHECK(p.puncture() == Point{0.3, 0.0});
    CHECK_THROWS_AS(parse_domain("cube:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("ball:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("pball:3:0.3,0"), std::invalid_argument);
}

TEST_CASE("map descriptors compose left to right") {
    const MobiusMap m = parse_map("trans:1,0;scale:2", 2);
    CHECK(m.apply(Point{0.0, 1.0}) == Point{2.0, 2.0});

    const MobiusMap s = parse_map("sigma:0.5,0", 2);
    CHECK(dist(s.apply(Point{0.5, 0.0}), Point::zero(2)) <= 1e-15);

    const MobiusMap b = parse_map("b2h", 2);
    CHECK(dist(b.apply(Point::zero(2)), Point{0.0, 1.0}) <= 1e-15);

    const MobiusMap u = parse_map("unitinv", 2);
    CHECK(dist(u.apply(Point{0.0, 2.0}), Point{0.0, 0.5}) <= 1e-15);

    CHECK(parse_map("orth:7", 3).apply(Point::zero(3)) == Point::zero(3));
    CHECK(parse_map("horth:7", 3).apply(Point::unit(3, 2)) == Point::unit(3, 2));

    CHECK_THROWS_AS(parse_map("spin:1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("scale:-1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("sigma:2,0", 2), std::domain_error);
}
