#include "orbitkit/errors.hpp"
#include "orbitkit/groups.hpp"
#include "orbitkit/involution.hpp"

#include <doctest.h>

using namespace orbitkit;

namespace {

RatVector v(std::initializer_list<Rational> xs)
{
    return RatVector(xs);
}

// Closed form of i(alpha^T) on chart A, expanded by hand from the matrix entries:
// first column of alpha^T is (x1, -y2, -y''/y1), and alpha^{-1} e1 gives (y1, -x2, -y1 x'').
PointX1 hand_i_alpha_transpose(const PointX1& p)
{
    const std::size_t n = p.n();
    RatVector xp(n);
    RatVector yp(n);
    xp[0] = -p.y_prime()[0];
    yp[0] = -p.x_prime()[0];
    for (std::size_t k = 1; k < n; ++k) {
        xp[k] = -p.y_prime()[k] / p.y1();
        yp[k] = -p.y1() * p.x_prime()[k];
    }
    return make_point(n, p.x1(), xp, p.y1(), yp);
}

BigInt factorial(unsigned k)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

// box^k delta = sum over compositions beta of k into n parts of k!/beta! prod (dx_i dy_i)^{beta_i}.
DeltaDistribution multinomial_oracle(std::size_t n, unsigned k)
{
    DeltaDistribution out(n);
    std::vector<unsigned> beta(n, 0);
    auto recurse = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            beta[i] = left;
            BigInt denom = 1;
            MultiIndex alpha(2 * n);
            for (std::size_t j = 0; j < n; ++j) {
                denom *= factorial(beta[j]);
                alpha[j] = beta[j];
                alpha[n + j] = beta[j];
            }
            out.add_term(alpha, Rational(factorial(k) / denom));
            return;
        }
        for (unsigned b = 0; b <= left; ++b) {
            beta[i] = b;
            self(self, i + 1, left - b);
        }
    };
    recurse(recurse, 0, k);
    return out;
}

}  // namespace

TEST_CASE("J and theta")
{
    const RatMatrix g{{1, 2}, {0, 1}};
    CHECK(apply_J(g) == RatMatrix{{1, 0}, {2, 1}});
    CHECK(apply_theta(g) == RatMatrix{{1, 0}, {-2, 1}});
    CHECK(apply_J(apply_J(g)) == g);
    CHECK_THROWS_AS(apply_theta(RatMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("chart A section and cocycle against the hand expansion")
{
    const PointX1 p = make_point(3, 2, v({1, Rational(1, 3), -1}), 1, v({0, 3, 2}));
    const RatMatrix a = alpha_chart_a(p);
    const RatMatrix expected{{2, 0, -3, -2}, {1, 1, 0, 0}, {Rational(1, 3), 0, 1, 0}, {-1, 0, 0, 1}};
    CHECK(a == expected);
    CHECK(exact_det(a) == 1);
    CHECK(base_orbit_point(a) == p);
    CHECK(phi_chart_a(p) == RatMatrix::identity(3));

    SeedStream s(71, 0);
    for (std::size_t n : {2, 3, 4}) {
        for (int t = 0; t < 50; ++t) {
            RatVector xp;
            RatVector yp;
            for (std::size_t i = 0; i < n; ++i) {
                xp.push_back(sample_rational(s, 4));
                yp.push_back(sample_rational(s, 4));
            }
            const Rational y1 = sample_nonzero_rational(s, 4);
            const PointX1 q = make_point(n, (1 - dot(xp, yp)) / y1, xp, y1, yp);
            const RatMatrix m = alpha_chart_a(q);
            CHECK(exact_det(m) == 1);
            CHECK(base_orbit_point(m) == q);
            const PointX1 lhs = base_orbit_point(apply_J(m));
            CHECK(lhs == hand_i_alpha_transpose(q));
            CHECK(lhs == act_on_primed(phi_chart_a(q), j_map(q)));
        }
    }
    CHECK_THROWS_AS(alpha_chart_a(make_point(2, 1, v({1, 0}), 0, v({1, 0}))), DomainError);
}

TEST_CASE("chart B cocycle")
{
    CHECK(phi_chart_b(RatMatrix::diagonal(v({2, 1, 1})), RatMatrix::identity(3)) ==
          RatMatrix::diagonal(v({1, Rational(1, 2), Rational(1, 2)})));
    const RatMatrix m = alpha_chart_b(0, 0, RatMatrix::identity(2), RatMatrix::identity(2));
    CHECK(m == RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(exact_det(m) == 1);
    CHECK_THROWS_AS(alpha_chart_b(1, 1, RatMatrix::identity(2), RatMatrix::identity(2)), DomainError);
}

TEST_CASE("lemma identity on both charts")
{
    for (std::size_t n : {2, 3, 4}) {
        const IdentityReport a = verify_lemma3(LemmaChart::A, n, 100, SeedStream(72, n));
        const IdentityReport b = verify_lemma3(LemmaChart::B, n, 100, SeedStream(73, n));
        CHECK(a.trials == 100);
        CHECK(a.passed());
        CHECK(b.passed());
        CHECK_FALSE(a.first_failure.has_value());
    }
}

TEST_CASE("box powers of delta")
{
    const DeltaDistribution sq = box_power_delta(2, 2);
    DeltaDistribution expected(2);
    expected.add_term({2, 0, 2, 0}, 1);
    expected.add_term({1, 1, 1, 1}, 2);
    expected.add_term({0, 2, 0, 2}, 1);
    CHECK(sq == expected);

    CHECK(box_power_delta(3, 0) == DeltaDistribution::delta(3));
    for (std::size_t n : {2, 3, 4}) {
        for (unsigned k = 0; k <= 4; ++k) {
            CHECK(box_power_delta(n, k) == multinomial_oracle(n, k));
        }
    }
}

TEST_CASE("j push-forward")
{
    DeltaDistribution dx(2);
    dx.add_term({1, 0, 0, 0}, 1);
    DeltaDistribution minus_dy(2);
    minus_dy.add_term({0, 0, 1, 0}, -1);
    CHECK(j_pushforward(dx) == minus_dy);
    CHECK_FALSE(j_odd_part(dx).is_zero());
    CHECK(j_pushforward(j_pushforward(dx)) == dx);

    DeltaDistribution cancel(2);
    cancel.add_term({1, 0, 0, 0}, 3);
    cancel.add_term({1, 0, 0, 0}, -3);
    CHECK(cancel.is_zero());

    for (std::size_t n : {2, 3}) {
        for (unsigned k = 0; k <= 5; ++k) {
            const DeltaDistribution d = box_power_delta(n, k);
            CHECK(j_pushforward(d) == d);
            CHECK(j_odd_part(d).is_zero());
            CHECK(j_pushforward(box_apply(d)) == box_apply(j_pushforward(d)));
        }
    }
    const IdentityReport r = verify_theorem4_parity(5, 3, SeedStream(74, 0));
    CHECK(r.passed());
}
