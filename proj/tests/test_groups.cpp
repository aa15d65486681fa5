#include "orbitkit/errors.hpp"
#include "orbitkit/groups.hpp"

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

RatMatrix diag(std::initializer_list<Rational> xs)
{
    return RatMatrix::diagonal(RatVector(xs));
}

// Split-form oracle written directly from the definition <u, w> = sum u_i w_{m+i} + u_{m+i} w_i.
Rational split_pairing(const RatVector& u, const RatVector& w)
{
    const std::size_t m = u.size() / 2;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) {
        s += u[i] * w[m + i] + u[m + i] * w[i];
    }
    return s;
}

PointX1 sample_point(std::size_t n, SeedStream& s)
{
    RatVector xp;
    RatVector yp;
    for (std::size_t i = 0; i < n; ++i) {
        xp.push_back(sample_rational(s, 4));
        yp.push_back(sample_rational(s, 4));
    }
    const Rational x1 = sample_nonzero_rational(s, 4);
    return make_point(n, x1, xp, (1 - dot(xp, yp)) / x1, yp);
}

}  // namespace

TEST_CASE("membership examples")
{
    for (GroupKind k : kAllGroupKinds) {
        const GroupTag tag{k, 3};
        std::vector<RatMatrix> ids;
        for (const auto& f : factor_tags(tag)) {
            ids.push_back(RatMatrix::identity(matrix_size(f)));
        }
        CHECK(is_member(tag, ids));
    }
    CHECK(is_member({GroupKind::H1, 3}, diag({2, Rational(1, 2), 1})));
    CHECK_FALSE(is_member({GroupKind::H1, 3}, diag({2, 1, 1})));
    CHECK(is_member({GroupKind::GLplus, 3}, diag({2, 1, 1})));
    CHECK_FALSE(is_member({GroupKind::GLplus, 3}, diag({-2, 1, 1})));

    const std::size_t n = 3;
    RatMatrix b(n, n);
    b(0, 1) = 2;
    b(1, 0) = -2;
    b(1, 2) = Rational(1, 3);
    b(2, 1) = Rational(-1, 3);
    const RatMatrix g = block_matrix(RatMatrix::identity(n), b, RatMatrix(n, n), RatMatrix::identity(n));
    CHECK(is_member({GroupKind::TildeH, n}, g));
    // A symmetric B breaks the form.
    b(1, 0) = 2;
    b(2, 1) = Rational(1, 3);
    CHECK_FALSE(is_member({GroupKind::TildeH, n},
                          block_matrix(RatMatrix::identity(n), b, RatMatrix(n, n), RatMatrix::identity(n))));

    CHECK_THROWS_AS(is_member({GroupKind::H1, 3}, RatMatrix::identity(4)), DimensionError);
    CHECK_THROWS_AS(GroupElement::make({GroupKind::H1, 3}, diag({2, 1, 1})), NotMember);
}

TEST_CASE("embed_glplus and i_map")
{
    CHECK(embed_glplus(RatMatrix::identity(3)).matrix() == RatMatrix::identity(4));
    const GroupElement g = embed_glplus(diag({2, 1, 1}));
    CHECK(g.matrix() == diag({Rational(1, 2), 2, 1, 1}));
    CHECK(g.tag().kind == GroupKind::BigG);
    CHECK_THROWS_AS(embed_glplus(diag({-2, 1, 1})), DomainError);

    CHECK(i_map(GroupElement::identity({GroupKind::BigG, 3})) == PointX1::base_point(3));
    CHECK(i_map(g) == make_point(3, Rational(1, 2), v({0, 0, 0}), 2, v({0, 0, 0})));
}

TEST_CASE("torus action")
{
    const GroupElement t = GroupElement::make({GroupKind::ScalingTorus, 3}, diag({2}));
    CHECK(act(t, PointX1::base_point(3)) == make_point(3, 2, v({0, 0, 0}), Rational(1, 2), v({0, 0, 0})));
    CHECK_THROWS_AS(GroupElement::make({GroupKind::ScalingTorus, 3}, diag({-2})), NotMember);
}

TEST_CASE("identity acts trivially and dimension mismatch is rejected")
{
    SeedStream s(21, 0);
    const PointX1 p = sample_point(3, s);
    for (GroupKind k : kAllGroupKinds) {
        CHECK(act(GroupElement::identity({k, 3}), p) == p);
    }
    CHECK_THROWS_AS(act(GroupElement::identity({GroupKind::H1, 2}), p), DimensionError);
}

TEST_CASE("sampled elements are members, reproducible, and act compatibly")
{
    for (GroupKind k : kAllGroupKinds) {
        for (std::size_t n : {2, 3}) {
            const GroupTag tag{k, n};
            SeedStream s(100 + static_cast<int>(k), n);
            SeedStream replay(100 + static_cast<int>(k), n);
            for (int t = 0; t < 25; ++t) {
                const GroupElement g = sample_element(tag, s);
                CHECK(g == sample_element(tag, replay));
                CHECK(is_member(tag, g.components()));
                const GroupElement h = sample_element(tag, s);
                replay = s;
                const PointX1 p = sample_point(n, s);
                replay = s;
                CHECK(act(g * h, p) == act(g, act(h, p)));
                CHECK(act(g.inverse(), act(g, p)) == p);
                CHECK(g * g.inverse() == GroupElement::identity(tag));
            }
        }
    }
    SeedStream s(1, 1);
    const GroupElement e = sample_element({GroupKind::H1, 3}, s, SamplingOptions{3, 0});
    CHECK(e == GroupElement::identity({GroupKind::H1, 3}));
}

TEST_CASE("split-orthogonal samples preserve the split pairing")
{
    SeedStream s(31, 0);
    for (std::size_t n : {2, 3, 4}) {
        for (int t = 0; t < 20; ++t) {
            const RatMatrix g = sample_element({GroupKind::TildeH, n}, s).matrix();
            RatVector u;
            RatVector w;
            for (std::size_t i = 0; i < 2 * n; ++i) {
                u.push_back(sample_rational(s, 5));
                w.push_back(sample_rational(s, 5));
            }
            CHECK(split_pairing(g * std::span<const Rational>(u), g * std::span<const Rational>(w)) ==
                  split_pairing(u, w));
            CHECK(exact_det(g) == 1);
        }
    }
}

TEST_CASE("i_map is constant on cosets of the base point stabilizer")
{
    // Elements fixing (e1, e1): first column and first row of g equal to e1.
    SeedStream s(41, 0);
    for (int t = 0; t < 30; ++t) {
        const RatMatrix h = sample_element({GroupKind::H1, 3}, s).matrix();
        RatMatrix stab = RatMatrix::identity(4);
        stab.set_block(1, 1, h);
        const GroupElement k = GroupElement::make({GroupKind::BigG, 3}, stab);
        CHECK(i_map(k) == PointX1::base_point(3));
        const GroupElement g = sample_element({GroupKind::BigG, 3}, s);
        CHECK(i_map(g * k) == i_map(g));
    }
}
