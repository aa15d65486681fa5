#pragma once

// The homogeneous space X1 = {(x, y) in R^{n+1} x R^{n+1} : <x, y> = 1}, written in
// coordinates (x1, x', y1, y') with x' and y' in R^n.

#include "orbitkit/matrix.hpp"

#include <cstddef>
#include <utility>
#include <variant>

namespace orbitkit {

class PointX1 {
public:
    /// Validating constructor. Throws DimensionError for n < 2 or length mismatch and
    /// ConstraintViolated when x1*y1 + <x',y'> != 1.
    static PointX1 make(std::size_t n, Rational x1, RatVector x_prime, Rational y1, RatVector y_prime);
    /// Build from full vectors x, y in R^{n+1}.
    static PointX1 from_full(const RatVector& x, const RatVector& y);
    /// The base point (e1, e1).
    static PointX1 base_point(std::size_t n);

    std::size_t n() const noexcept { return x_prime_.size(); }
    const Rational& x1() const noexcept { return x1_; }
    const Rational& y1() const noexcept { return y1_; }
    const RatVector& x_prime() const noexcept { return x_prime_; }
    const RatVector& y_prime() const noexcept { return y_prime_; }

    RatVector x() const;
    RatVector y() const;
    /// (x', y') concatenated, the R^{2n} coordinates used by the split form.
    RatVector primed() const { return concat(x_prime_, y_prime_); }

    friend bool operator==(const PointX1&, const PointX1&) = default;

private:
    PointX1(Rational x1, RatVector x_prime, Rational y1, RatVector y_prime);

    Rational x1_;
    RatVector x_prime_;
    Rational y1_;
    RatVector y_prime_;
};

inline PointX1 make_point(std::size_t n, Rational x1, RatVector x_prime, Rational y1, RatVector y_prime)
{
    return PointX1::make(n, std::move(x1), std::move(x_prime), std::move(y1), std::move(y_prime));
}

/// q(p) = (x1, y1).
std::pair<Rational, Rational> invariant_q(const PointX1& p);

/// Q(p) = 1 - x1*y1. Also checks it against <x', y'> and throws InconsistentState on mismatch.
Rational invariant_Q(const PointX1& p);

/// j(x1, x', y1, y') = (x1, -y', y1, -x'). An involution of X1.
PointX1 j_map(const PointX1& p);

// Coordinate charts --------------------------------------------------------------------

/// (x1, x', y') on {x1 != 0}; y1 is recovered as (1 - <x',y'>)/x1.
struct ChartA {
    Rational x1;
    RatVector x_prime;
    RatVector y_prime;
};
ChartA chart_a(const PointX1& p);
PointX1 chart_a_inverse(const ChartA& c);

/// Mirror of chart A on {y1 != 0}: (y1, x', y'), x1 = (1 - <x',y'>)/y1.
struct ChartADual {
    Rational y1;
    RatVector x_prime;
    RatVector y_prime;
};
ChartADual chart_a_dual(const PointX1& p);
PointX1 chart_a_dual_inverse(const ChartADual& c);

/// ((xi, eta), (x1, y1)) on {x1*y1 < 1}: xi = x', eta = y'/(1 - x1*y1), so <xi, eta> = 1.
struct ChartB {
    RatVector xi;
    RatVector eta;
    Rational x1;
    Rational y1;
};
ChartB chart_b(const PointX1& p);
PointX1 chart_b_inverse(const ChartB& c);

// Fibers of the invariant maps -----------------------------------------------------------

/// Fiber of q: {x1 = a, y1 = b}.
struct QFiber {
    Rational x1;
    Rational y1;
    friend bool operator==(const QFiber&, const QFiber&) = default;
};
/// Fiber of Q: {1 - x1*y1 = t}.
struct BigQFiber {
    Rational t;
    friend bool operator==(const BigQFiber&, const BigQFiber&) = default;
};
using FiberSpec = std::variant<QFiber, BigQFiber>;

}  // namespace orbitkit
