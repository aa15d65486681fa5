#include "orbitkit/lie_fields.hpp"

#include "orbitkit/errors.hpp"
#include "orbitkit/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace orbitkit {

namespace {

RatMatrix gl_generator(const RatMatrix& a)
{
    const std::size_t n = a.rows();
    return block_matrix(a, RatMatrix(n, n), RatMatrix(n, n), -a.transpose());
}

std::vector<RatMatrix> gl_basis(std::size_t n)
{
    std::vector<RatMatrix> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.push_back(gl_generator(RatMatrix::unit(n, i, j)));
        }
    }
    return out;
}

std::vector<RatMatrix> sl_basis(std::size_t n)
{
    std::vector<RatMatrix> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                out.push_back(gl_generator(RatMatrix::unit(n, i, j)));
            }
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.push_back(gl_generator(RatMatrix::unit(n, i, i) - RatMatrix::unit(n, i + 1, i + 1)));
    }
    return out;
}

std::vector<RatMatrix> split_so_basis(std::size_t n)
{
    std::vector<RatMatrix> out = gl_basis(n);
    const RatMatrix zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const RatMatrix skew = RatMatrix::unit(n, i, j) - RatMatrix::unit(n, j, i);
            out.push_back(block_matrix(zero, skew, zero, zero));
            out.push_back(block_matrix(zero, zero, skew, zero));
        }
    }
    return out;
}

RatMatrix euler_generator(std::size_t n)
{
    return block_diagonal(RatMatrix::identity(n), -RatMatrix::identity(n));
}

}  // namespace

AlgebraBasis algebra_basis(GroupKind kind, std::size_t n)
{
    if (n < 1) {
        throw DimensionError("algebra_basis: n must be >= 1");
    }
    switch (kind) {
    case GroupKind::GLplus:
        return {{kind, n}, gl_basis(n)};
    case GroupKind::H1:
        return {{kind, n}, sl_basis(n)};
    case GroupKind::TildeH:
        return {{kind, n}, split_so_basis(n)};
    case GroupKind::ScalingTorus:
        return {{kind, n}, {euler_generator(n)}};
    default:
        throw Unsupported("algebra_basis: unsupported tag " + kind_name(kind));
    }
}

RatMatrix fundamental_fields_at(const AlgebraBasis& basis, std::span<const Rational> primed_point)
{
    if (primed_point.size() != 2 * basis.tag.n) {
        throw DimensionError("fundamental_fields_at: point must have length 2n = " + std::to_string(2 * basis.tag.n));
    }
    std::vector<RatVector> rows;
    rows.reserve(basis.generators.size());
    for (const auto& z : basis.generators) {
        rows.push_back(z * primed_point);
    }
    return RatMatrix::from_rows(rows);
}

SpanReport span_compare(std::span<const Rational> primed_point, std::size_t n)
{
    const RatMatrix gl = fundamental_fields_at(algebra_basis(GroupKind::GLplus, n), primed_point);
    const RatMatrix so = fundamental_fields_at(algebra_basis(GroupKind::TildeH, n), primed_point);
    RatMatrix stacked(gl.rows() + so.rows(), gl.cols());
    stacked.set_block(0, 0, gl);
    stacked.set_block(gl.rows(), 0, so);

    SpanReport r;
    r.point.assign(primed_point.begin(), primed_point.end());
    r.rank_gl = exact_rank(gl);
    r.rank_so = exact_rank(so);
    r.rank_union = exact_rank(stacked);
    r.spans_equal = r.rank_gl == r.rank_union && r.rank_so == r.rank_union;
    return r;
}

RatVector sample_primed_stratum(const std::string& stratum, std::size_t n, SeedStream& stream)
{
    constexpr std::int64_t bound = 5;
    auto nonzero_vector = [&] {
        RatVector v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(sample_rational(stream, bound));
        }
        if (is_zero(v)) {
            v[stream.uniform_below(n)] = sample_nonzero_rational(stream, bound);
        }
        return v;
    };
    if (stratum == "Origin") {
        return zero_vector(2 * n);
    }
    if (stratum == "XZero") {
        return concat(zero_vector(n), nonzero_vector());
    }
    if (stratum == "YZero") {
        return concat(nonzero_vector(), zero_vector(n));
    }
    if (stratum == "Generic") {
        for (;;) {
            RatVector x = nonzero_vector();
            RatVector y = nonzero_vector();
            if (dot(x, y) != 0) {
                return concat(x, y);
            }
        }
    }
    if (stratum == "Cone") {
        // y' random with one coordinate solved so that <x', y'> = 0; redrawn if it vanishes.
        for (;;) {
            RatVector x = nonzero_vector();
            RatVector y = nonzero_vector();
            std::size_t k = 0;
            while (x[k] == 0) {
                ++k;
            }
            Rational rest = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i != k) {
                    rest += x[i] * y[i];
                }
            }
            y[k] = -rest / x[k];
            if (!is_zero(y)) {
                return concat(x, y);
            }
        }
    }
    throw Unsupported("sample_primed_stratum: unknown stratum " + stratum);
}

RankTable rank_map(std::size_t n, std::size_t samples, const SeedStream& stream)
{
    RankTable table;
    table.n = n;
    std::size_t stratum_index = 0;
    for (const char* name : kRankStrata) {
        std::vector<std::optional<SpanReport>> reports(samples);
        const SeedStream stratum_stream = stream.derive(stratum_index++);
        parallel_for(samples, [&](std::size_t i) {
            SeedStream s = stratum_stream.derive(i);
            reports[i] = span_compare(sample_primed_stratum(name, n, s), n);
        });
        StratumRankRow row;
        row.name = name;
        row.samples = samples;
        for (std::size_t i = 0; i < samples; ++i) {
            const auto& r = *reports[i];
            if (i == 0) {
                row.rank_gl = r.rank_gl;
                row.rank_so = r.rank_so;
                row.rank_union = r.rank_union;
                row.equal = r.spans_equal;
            } else if (r.rank_gl != row.rank_gl || r.rank_so != row.rank_so || r.rank_union != row.rank_union) {
                row.constant = false;
            }
        }
        table.strata.push_back(row);
    }
    return table;
}

std::vector<RatMatrix> full_coordinate_generators(GroupTag tag)
{
    const std::size_t n = tag.n;
    // Embed a (x'; y') block generator into (x1, x', y1, y') coordinates.
    auto lift = [n](const RatMatrix& z) {
        RatMatrix full(2 * n + 2, 2 * n + 2);
        for (std::size_t r = 0; r < 2 * n; ++r) {
            for (std::size_t c = 0; c < 2 * n; ++c) {
                const std::size_t fr = r < n ? r + 1 : r + 2;
                const std::size_t fc = c < n ? c + 1 : c + 2;
                full(fr, fc) = z(r, c);
            }
        }
        return full;
    };
    auto torus = [n] {
        RatVector d(2 * n + 2, Rational(1));
        for (std::size_t i = n + 1; i < 2 * n + 2; ++i) {
            d[i] = -1;
        }
        return RatMatrix::diagonal(d);
    };
    std::vector<RatMatrix> out;
    for (const auto& factor : factor_tags(tag)) {
        if (factor.kind == GroupKind::ScalingTorus) {
            out.push_back(torus());
            continue;
        }
        for (const auto& z : algebra_basis(factor.kind, n).generators) {
            out.push_back(lift(z));
        }
    }
    return out;
}

double invariance_residual(const ScalarField& f, std::span<const double> point, GroupTag tag, double step)
{
    if (step <= 0) {
        throw Error("invariance_residual: step must be positive");
    }
    if (point.size() != 2 * tag.n + 2) {
        throw DimensionError("invariance_residual: point must have length 2n + 2");
    }
    const std::size_t dim = point.size();
    double worst = 0;
    std::vector<double> plus(dim);
    std::vector<double> minus(dim);
    for (const auto& z : full_coordinate_generators(tag)) {
        for (std::size_t r = 0; r < dim; ++r) {
            double v = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                if (z(r, c) != 0) {
                    v += to_double(z(r, c)) * point[c];
                }
            }
            plus[r] = point[r] + step * v;
            minus[r] = point[r] - step * v;
        }
        const double derivative = (f(plus) - f(minus)) / (2 * step);
        if (!std::isfinite(derivative)) {
            throw Error("invariance_residual: non-finite evaluation");
        }
        worst = std::max(worst, std::abs(derivative));
    }
    return worst;
}

}  // namespace orbitkit
