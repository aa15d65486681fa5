#pragma once

// Fundamental vector fields of the Lie algebras acting on X1, and exact comparison of the
// tangent spans they generate.
//
// Generators are stored as matrices acting linearly on the (x'; y') block of R^{2n}:
// gl(n) enters as [[A, 0], [0, -A^T]], the split so(n, n) as [[A, B], [C, -A^T]] with B and C
// skew, and the torus as the Euler element diag(I, -I). On full X1 coordinates
// (x1, x', y1, y') the block generators vanish on x1, y1 while the torus moves them.

#include "orbitkit/groups.hpp"
#include "orbitkit/seed_stream.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace orbitkit {

struct AlgebraBasis {
    GroupTag tag;
    std::vector<RatMatrix> generators;
};

/// Standard basis for GLplus (all E_ij), H1 (traceless part), TildeH (split so(n,n)) or
/// ScalingTorus (Euler element). Throws Unsupported for other tags.
AlgebraBasis algebra_basis(GroupKind kind, std::size_t n);

/// One tangent vector Z v per generator, stacked as rows. Throws DimensionError unless the
/// point has length 2n.
RatMatrix fundamental_fields_at(const AlgebraBasis& basis, std::span<const Rational> primed_point);

struct SpanReport {
    RatVector point;
    std::size_t rank_gl = 0;
    std::size_t rank_so = 0;
    std::size_t rank_union = 0;
    bool spans_equal = false;
};

/// Exact ranks of the gl(n) span, the split so(n,n) span and their union at a point of R^{2n}.
SpanReport span_compare(std::span<const Rational> primed_point, std::size_t n);

struct StratumRankRow {
    std::string name;
    std::size_t rank_gl = 0;
    std::size_t rank_so = 0;
    std::size_t rank_union = 0;
    bool equal = false;
    std::size_t samples = 0;
    /// Signature identical across every sample of the stratum.
    bool constant = true;
};

struct RankTable {
    std::size_t n = 0;
    std::vector<StratumRankRow> strata;
};

inline constexpr const char* kRankStrata[] = {"Generic", "Cone", "XZero", "YZero", "Origin"};

/// Random point of R^{2n} in the named stratum of the split form (Generic means <x',y'> != 0).
RatVector sample_primed_stratum(const std::string& stratum, std::size_t n, SeedStream& stream);

/// Rank signature per stratum over `samples` exact points each.
RankTable rank_map(std::size_t n, std::size_t samples, const SeedStream& stream);

// Floating-point invariance residuals ----------------------------------------------------

/// Generators on full coordinates (x1, x', y1, y') of R^{2n+2}, for GLplus, H1, TildeH,
/// ScalingTorus and the products with the torus.
std::vector<RatMatrix> full_coordinate_generators(GroupTag tag);

using ScalarField = std::function<double(std::span<const double>)>;

/// Max over the tag's generators of |(f(p + hV) - f(p - hV)) / 2h| with V = Z p.
double invariance_residual(const ScalarField& f, std::span<const double> point, GroupTag tag, double step = 1e-5);

}  // namespace orbitkit
