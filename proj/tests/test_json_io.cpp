#include "orbitkit/errors.hpp"
#include "orbitkit/json_io.hpp"

#include <doctest.h>

using namespace orbitkit;

TEST_CASE("rationals and points")
{
    CHECK(rational_to_json(Rational(-1, 2)) == Json("-1/2"));
    CHECK(rational_to_json(Rational(4)) == Json("4"));
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);

    const PointX1 p = make_point(2, 2, RatVector{1, 0}, Rational(1, 2), RatVector{0, 1});
    CHECK(point_to_json(p).dump() == R"({"n":2,"x1":"2","xp":["1","0"],"y1":"1/2","yp":["0","1"]})");
    CHECK(point_from_json(point_to_json(p)) == p);
    CHECK_THROWS_AS(parse_point("{not json"), ParseError);
    CHECK_THROWS_AS(parse_point(R"({"n":2,"x1":"1"})"), ParseError);
    CHECK_THROWS_AS(parse_point(R"({"n":2,"x1":"1","xp":["1","0"],"y1":"1","yp":["1","0"]})"),
                    ConstraintViolated);
}

TEST_CASE("round trips of sampled objects")
{
    SeedStream s(81, 0);
    for (GroupKind k : kAllGroupKinds) {
        for (int t = 0; t < 5; ++t) {
            const GroupElement g = sample_element({k, 3}, s);
            CHECK(element_from_json(element_to_json(g)) == g);
        }
    }
    for (GroupCase c : kAllGroupCases) {
        for (std::size_t n : {2, 3}) {
            for (int t = 0; t < 40; ++t) {
                const PointX1 p = sample_stratified_point(n, s);
                CHECK(point_from_json(point_to_json(p)) == p);
                const OrbitLabel l = classify(c, p);
                CHECK(label_from_json(label_to_json(l), n) == l);
            }
        }
    }
    const DeltaDistribution d = box_power_delta(3, 3);
    CHECK(delta_from_json(delta_to_json(d)) == d);
    CHECK(matrix_from_json(matrix_to_json(RatMatrix{{1, 2}, {3, 4}})) == RatMatrix{{1, 2}, {3, 4}});
}

TEST_CASE("label and fiber formats")
{
    const OrbitLabel base = classify(GroupCase::H1, PointX1::base_point(3));
    CHECK(label_to_json(base).dump() == R"({"case":"H1","q":["1","1"],"stratum":"Origin"})");

    const OrbitLabel param = classify(GroupCase::H1, make_point(2, 1, RatVector{1, 0}, 1, RatVector{0, 3}));
    CHECK(label_to_json(param)["param"] == Json("3"));

    CHECK(std::get<QFiber>(parse_fiber("q=2,1/2")) == QFiber{2, Rational(1, 2)});
    CHECK(std::get<BigQFiber>(parse_fiber("Q=0")) == BigQFiber{0});
    CHECK_THROWS_AS(parse_fiber("q=1"), ParseError);
    CHECK_THROWS_AS(parse_fiber("z=1"), ParseError);
    CHECK_THROWS_AS(label_from_json(Json::parse(R"({"case":"H1","stratum":"Nope","q":["1","1"]})"), 3),
                    ParseError);
}
