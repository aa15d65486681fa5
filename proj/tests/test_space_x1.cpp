#include "orbitkit/errors.hpp"
#include "orbitkit/seed_stream.hpp"
#include "orbitkit/space_x1.hpp"

#include <doctest.h>

using namespace orbitkit;

namespace {

RatVector v(std::initializer_list<int> xs)
{
    RatVector out;
    for (int x : xs) {
        out.emplace_back(x);
    }
    return out;
}

PointX1 sample_point(std::size_t n, SeedStream& s)
{
    for (;;) {
        RatVector xp;
        RatVector yp;
        for (std::size_t i = 0; i < n; ++i) {
            xp.push_back(sample_rational(s, 4));
            yp.push_back(sample_rational(s, 4));
        }
        const Rational x1 = sample_nonzero_rational(s, 4);
        const Rational y1 = (1 - dot(xp, yp)) / x1;
        return make_point(n, x1, xp, y1, yp);
    }
}

}  // namespace

TEST_CASE("make_point validation")
{
    CHECK(make_point(3, 1, v({0, 0, 0}), 1, v({0, 0, 0})) == PointX1::base_point(3));
    CHECK_NOTHROW(make_point(3, 2, v({1, 0, 0}), Rational(1, 2), v({0, 1, 0})));
    try {
        make_point(3, 1, v({1, 0, 0}), 1, v({1, 0, 0}));
        FAIL("expected constraint violation");
    } catch (const ConstraintViolated& e) {
        CHECK(e.pairing() == "2");
    }
    CHECK_THROWS_AS(make_point(1, 1, v({0}), 1, v({0})), DimensionError);
    CHECK_THROWS_AS(make_point(3, 1, v({0, 0}), 1, v({0, 0, 0})), DimensionError);
}

TEST_CASE("full coordinates")
{
    const PointX1 p = make_point(2, 2, v({1, 0}), Rational(1, 2), v({0, 1}));
    CHECK(p.x() == RatVector{2, 1, 0});
    CHECK(p.y() == RatVector{Rational(1, 2), 0, 1});
    CHECK(PointX1::from_full(p.x(), p.y()) == p);
    CHECK(p.primed() == v({1, 0, 0, 1}));
}

TEST_CASE("invariants")
{
    const PointX1 base = PointX1::base_point(3);
    CHECK(invariant_q(base) == std::pair<Rational, Rational>(1, 1));
    CHECK(invariant_Q(base) == 0);

    const PointX1 p = make_point(3, 2, v({1, 0, 0}), Rational(1, 2), v({0, 1, 0}));
    CHECK(invariant_q(p) == std::pair<Rational, Rational>(2, Rational(1, 2)));
    CHECK(invariant_Q(p) == 0);

    CHECK(invariant_Q(make_point(3, 1, v({1, 0, 0}), 0, v({1, 0, 0}))) == 1);
}

TEST_CASE("j_map")
{
    CHECK(j_map(PointX1::base_point(3)) == PointX1::base_point(3));
    const PointX1 p = make_point(3, 2, v({1, 0, 0}), Rational(1, 2), v({0, 1, 0}));
    CHECK(j_map(p) == make_point(3, 2, v({0, -1, 0}), Rational(1, 2), v({-1, 0, 0})));

    SeedStream s(3, 0);
    for (int t = 0; t < 200; ++t) {
        const PointX1 q = sample_point(2 + t % 3, s);
        const PointX1 jq = j_map(q);
        CHECK(j_map(jq) == q);
        CHECK(invariant_q(jq) == invariant_q(q));
        CHECK(invariant_Q(jq) == invariant_Q(q));
    }
}

TEST_CASE("chart A")
{
    const ChartA c = chart_a(PointX1::base_point(3));
    CHECK(c.x1 == 1);
    CHECK(is_zero(c.x_prime));
    CHECK(is_zero(c.y_prime));
    CHECK(chart_a_inverse(c) == PointX1::base_point(3));

    const PointX1 rebuilt = chart_a_inverse(ChartA{2, v({1, 0, 0}), v({0, 1, 0})});
    CHECK(rebuilt.y1() == Rational(1, 2));

    CHECK_THROWS_AS(chart_a(make_point(3, 0, v({1, 0, 0}), 5, v({1, 0, 0}))), DomainError);
    CHECK_THROWS_AS(chart_a_inverse(ChartA{0, v({1, 0, 0}), v({1, 0, 0})}), DomainError);

    const PointX1 q = make_point(3, 0, v({1, 0, 0}), 5, v({1, 0, 0}));
    CHECK(chart_a_dual_inverse(chart_a_dual(q)) == q);
    CHECK_THROWS_AS(chart_a_dual(make_point(3, 5, v({1, 0, 0}), 0, v({1, 0, 0}))), DomainError);
}

TEST_CASE("chart B")
{
    const PointX1 p = make_point(3, 1, v({1, 0, 0}), 0, v({1, 0, 0}));
    const ChartB c = chart_b(p);
    CHECK(c.xi == v({1, 0, 0}));
    CHECK(c.eta == v({1, 0, 0}));
    CHECK(c.x1 == 1);
    CHECK(c.y1 == 0);

    const ChartB d = chart_b(make_point(3, 0, v({1, 0, 0}), 0, v({1, 0, 0})));
    CHECK(d.xi == v({1, 0, 0}));
    CHECK(d.eta == v({1, 0, 0}));
    CHECK(d.x1 == 0);
    CHECK(d.y1 == 0);

    CHECK_THROWS_AS(chart_b(PointX1::base_point(3)), DomainError);
}

TEST_CASE("chart round trips")
{
    SeedStream s(4, 0);
    for (int t = 0; t < 300; ++t) {
        const PointX1 p = sample_point(2 + t % 3, s);
        if (p.x1() != 0) {
            CHECK(chart_a_inverse(chart_a(p)) == p);
        }
        if (p.y1() != 0) {
            CHECK(chart_a_dual_inverse(chart_a_dual(p)) == p);
        }
        if (p.x1() * p.y1() < 1) {
            const ChartB c = chart_b(p);
            CHECK(dot(c.xi, c.eta) == 1);
            CHECK(chart_b_inverse(c) == p);
        }
    }
}
