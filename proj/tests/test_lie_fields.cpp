#include "orbitkit/errors.hpp"
#include "orbitkit/lie_fields.hpp"

#include <doctest.h>

#include <cmath>

using namespace orbitkit;

namespace {

std::size_t naive_rank(RatMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        for (std::size_t k = 0; k < m.cols(); ++k) {
            std::swap(m(p, k), m(rank, k));
        }
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Rational f = m(r, c) / m(rank, c);
            for (std::size_t k = 0; k < m.cols(); ++k) {
                m(r, k) -= f * m(rank, k);
            }
        }
        ++rank;
    }
    return rank;
}

// Tangent vectors written straight from the infinitesimal actions, without the library's bases:
// gl(n): (E_ij x', -E_ji y'); split so(n,n) adds (B y', 0) and (0, C x') for skew B, C.
struct OracleRanks {
    std::size_t gl;
    std::size_t so;
    std::size_t both;
};

OracleRanks oracle_ranks(const RatVector& xp, const RatVector& yp)
{
    const std::size_t n = xp.size();
    std::vector<RatVector> gl;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RatVector t(2 * n);
            t[i] = xp[j];
            t[n + j] = -yp[i];
            gl.push_back(t);
        }
    }
    std::vector<RatVector> so = gl;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            RatVector b(2 * n);
            b[i] = yp[j];
            b[j] = -yp[i];
            so.push_back(b);
            RatVector c(2 * n);
            c[n + i] = xp[j];
            c[n + j] = -xp[i];
            so.push_back(c);
        }
    }
    std::vector<RatVector> all = gl;
    all.insert(all.end(), so.begin(), so.end());
    return {naive_rank(RatMatrix::from_rows(gl)), naive_rank(RatMatrix::from_rows(so)),
            naive_rank(RatMatrix::from_rows(all))};
}

bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& z)
{
    std::vector<RatVector> rows;
    for (const auto& b : basis) {
        rows.push_back(flatten(b));
    }
    const std::size_t r = naive_rank(RatMatrix::from_rows(rows));
    rows.push_back(flatten(z));
    return naive_rank(RatMatrix::from_rows(rows)) == r;
}

}  // namespace

TEST_CASE("basis sizes")
{
    CHECK(algebra_basis(GroupKind::GLplus, 2).generators.size() == 4);
    CHECK(algebra_basis(GroupKind::H1, 3).generators.size() == 8);
    CHECK(algebra_basis(GroupKind::TildeH, 3).generators.size() == 15);
    CHECK(algebra_basis(GroupKind::TildeH, 4).generators.size() == 28);
    CHECK(algebra_basis(GroupKind::ScalingTorus, 3).generators.size() == 1);
    CHECK_THROWS_AS(algebra_basis(GroupKind::BigG, 3), Unsupported);
}

TEST_CASE("bases lie in their algebras and close under brackets")
{
    for (std::size_t n : {2, 3}) {
        const RatMatrix s = split_form(n);
        const auto so = algebra_basis(GroupKind::TildeH, n).generators;
        for (const auto& z : so) {
            CHECK((z.transpose() * s + s * z).is_zero());
        }
        CHECK(naive_rank(RatMatrix::from_rows([&] {
                  std::vector<RatVector> rows;
                  for (const auto& z : so) {
                      rows.push_back(flatten(z));
                  }
                  return rows;
              }())) == so.size());
        for (const auto& a : so) {
            for (const auto& b : so) {
                CHECK(in_span(so, commutator(a, b)));
            }
        }
        const auto sl = algebra_basis(GroupKind::H1, n).generators;
        for (const auto& z : sl) {
            CHECK(trace(z.block(0, 0, n, n)) == 0);
            CHECK(in_span(so, z));
        }
        for (const auto& a : sl) {
            for (const auto& b : sl) {
                CHECK(in_span(sl, commutator(a, b)));
            }
        }
    }
}

TEST_CASE("fundamental fields")
{
    const auto gl = algebra_basis(GroupKind::GLplus, 2);
    CHECK(fundamental_fields_at(gl, RatVector(4)).is_zero());
    // Generator order is E_11, E_12, E_21, E_22.
    const RatMatrix f = fundamental_fields_at(gl, RatVector{0, 1, 0, 0});
    CHECK(f.row(1) == RatVector{1, 0, 0, 0});
    CHECK_THROWS_AS(fundamental_fields_at(gl, RatVector(3)), DimensionError);
}

TEST_CASE("span_compare examples")
{
    const SpanReport generic = span_compare(RatVector{1, 1, 0, 1, 1, 0}, 3);
    CHECK(generic.rank_gl == 5);
    CHECK(generic.rank_so == 5);
    CHECK(generic.rank_union == 5);
    CHECK(generic.spans_equal);

    const SpanReport xzero = span_compare(RatVector{0, 0, 0, 1, 0, 0}, 3);
    CHECK(xzero.rank_gl == 3);
    CHECK(xzero.rank_so == 5);
    CHECK_FALSE(xzero.spans_equal);

    const SpanReport origin = span_compare(RatVector(6), 3);
    CHECK(origin.rank_union == 0);
    CHECK(origin.spans_equal);
}

TEST_CASE("span_compare matches the direct tangent-vector oracle")
{
    SeedStream s(61, 0);
    for (std::size_t n : {2, 3, 4}) {
        for (const char* stratum : kRankStrata) {
            for (int t = 0; t < 8; ++t) {
                const RatVector p = sample_primed_stratum(stratum, n, s);
                const RatVector xp(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
                const RatVector yp(p.begin() + static_cast<std::ptrdiff_t>(n), p.end());
                const OracleRanks o = oracle_ranks(xp, yp);
                const SpanReport r = span_compare(p, n);
                CHECK(r.rank_gl == o.gl);
                CHECK(r.rank_so == o.so);
                CHECK(r.rank_union == o.both);
            }
        }
    }
}

TEST_CASE("rank table for n = 3")
{
    // Frozen from oracle_ranks above.
    struct Row {
        const char* name;
        std::size_t gl, so, both;
    };
    const Row expected[] = {
        {"Generic", 5, 5, 5}, {"Cone", 5, 5, 5}, {"XZero", 3, 5, 5}, {"YZero", 3, 5, 5}, {"Origin", 0, 0, 0},
    };
    const RankTable table = rank_map(3, 40, SeedStream(62, 0));
    REQUIRE(table.strata.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(table.strata[i].name == expected[i].name);
        CHECK(table.strata[i].rank_gl == expected[i].gl);
        CHECK(table.strata[i].rank_so == expected[i].so);
        CHECK(table.strata[i].rank_union == expected[i].both);
        CHECK(table.strata[i].constant);
    }
}

TEST_CASE("invariance residuals")
{
    const ScalarField big_q = [](std::span<const double> p) { return 1 - p[0] * p[4]; };
    const ScalarField pairing = [](std::span<const double> p) { return p[1] * p[5] + p[2] * p[6] + p[3] * p[7]; };
    const ScalarField x1 = [](std::span<const double> p) { return p[0]; };
    const ScalarField y1 = [](std::span<const double> p) { return p[4]; };
    const GroupTag gl_torus{GroupKind::GLplusTimesTorus, 3};
    std::vector<double> p{0.7, 0.3, -1.2, 0.5, 0.0, 0.4, 0.25, -0.6};
    p[4] = (1 - pairing(p)) / p[0];
    CHECK(big_q(p) == doctest::Approx(pairing(p)).epsilon(1e-12));
    CHECK(invariance_residual(big_q, p, gl_torus) < 1e-9);
    CHECK(invariance_residual(pairing, p, gl_torus) < 1e-9);
    CHECK(invariance_residual(x1, p, {GroupKind::H1, 3}) < 1e-9);
    CHECK(invariance_residual(y1, p, {GroupKind::TildeH, 3}) < 1e-9);
    CHECK(invariance_residual(x1, p, gl_torus) == doctest::Approx(0.7).epsilon(1e-6));
    CHECK_THROWS_AS(invariance_residual(x1, p, {GroupKind::H1, 2}), DimensionError);
}
