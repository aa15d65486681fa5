#include "orbitkit/space_x1.hpp"

#include "orbitkit/errors.hpp"

#include <string>

namespace orbitkit {

PointX1::PointX1(Rational x1, RatVector x_prime, Rational y1, RatVector y_prime)
    : x1_(std::move(x1)), x_prime_(std::move(x_prime)), y1_(std::move(y1)), y_prime_(std::move(y_prime))
{
}

PointX1 PointX1::make(std::size_t n, Rational x1, RatVector x_prime, Rational y1, RatVector y_prime)
{
    if (n < 2) {
        throw DimensionError("X1 requires n >= 2, got n = " + std::to_string(n));
    }
    if (x_prime.size() != n || y_prime.size() != n) {
        throw DimensionError("point vectors must have length n = " + std::to_string(n));
    }
    const Rational pairing = x1 * y1 + dot(x_prime, y_prime);
    if (pairing != 1) {
        throw ConstraintViolated("<x,y> = " + to_string(pairing) + ", expected 1", to_string(pairing));
    }
    return PointX1(std::move(x1), std::move(x_prime), std::move(y1), std::move(y_prime));
}

PointX1 PointX1::from_full(const RatVector& x, const RatVector& y)
{
    if (x.size() != y.size() || x.empty()) {
        throw DimensionError("from_full: x and y must have equal nonzero length");
    }
    return make(x.size() - 1, x[0], RatVector(x.begin() + 1, x.end()), y[0], RatVector(y.begin() + 1, y.end()));
}

PointX1 PointX1::base_point(std::size_t n)
{
    return make(n, 1, zero_vector(n), 1, zero_vector(n));
}

RatVector PointX1::x() const
{
    RatVector v{x1_};
    v.insert(v.end(), x_prime_.begin(), x_prime_.end());
    return v;
}

RatVector PointX1::y() const
{
    RatVector v{y1_};
    v.insert(v.end(), y_prime_.begin(), y_prime_.end());
    return v;
}

std::pair<Rational, Rational> invariant_q(const PointX1& p) { return {p.x1(), p.y1()}; }

Rational invariant_Q(const PointX1& p)
{
    Rational q = 1 - p.x1() * p.y1();
    if (q != dot(p.x_prime(), p.y_prime())) {
        throw InconsistentState("invariant_Q: 1 - x1*y1 differs from <x',y'>");
    }
    return q;
}

PointX1 j_map(const PointX1& p)
{
    return PointX1::make(p.n(), p.x1(), scaled(p.y_prime(), -1), p.y1(), scaled(p.x_prime(), -1));
}

ChartA chart_a(const PointX1& p)
{
    if (p.x1() == 0) {
        throw DomainError("chart_a: requires x1 != 0");
    }
    return {p.x1(), p.x_prime(), p.y_prime()};
}

PointX1 chart_a_inverse(const ChartA& c)
{
    if (c.x1 == 0) {
        throw DomainError("chart_a_inverse: requires x1 != 0");
    }
    Rational y1 = (1 - dot(c.x_prime, c.y_prime)) / c.x1;
    return PointX1::make(c.x_prime.size(), c.x1, c.x_prime, y1, c.y_prime);
}

ChartADual chart_a_dual(const PointX1& p)
{
    if (p.y1() == 0) {
        throw DomainError("chart_a_dual: requires y1 != 0");
    }
    return {p.y1(), p.x_prime(), p.y_prime()};
}

PointX1 chart_a_dual_inverse(const ChartADual& c)
{
    if (c.y1 == 0) {
        throw DomainError("chart_a_dual_inverse: requires y1 != 0");
    }
    Rational x1 = (1 - dot(c.x_prime, c.y_prime)) / c.y1;
    return PointX1::make(c.x_prime.size(), x1, c.x_prime, c.y1, c.y_prime);
}

ChartB chart_b(const PointX1& p)
{
    const Rational q = 1 - p.x1() * p.y1();
    if (q <= 0) {
        throw DomainError("chart_b: requires x1*y1 < 1");
    }
    ChartB c{p.x_prime(), scaled(p.y_prime(), 1 / q), p.x1(), p.y1()};
    if (dot(c.xi, c.eta) != 1) {
        throw InconsistentState("chart_b: <xi, eta> != 1");
    }
    return c;
}

PointX1 chart_b_inverse(const ChartB& c)
{
    const Rational q = 1 - c.x1 * c.y1;
    if (q <= 0) {
        throw DomainError("chart_b_inverse: requires x1*y1 < 1");
    }
    if (dot(c.xi, c.eta) != 1) {
        throw DomainError("chart_b_inverse: requires <xi, eta> = 1");
    }
    return PointX1::make(c.xi.size(), c.x1, c.xi, c.y1, scaled(c.eta, q));
}

}  // namespace orbitkit
