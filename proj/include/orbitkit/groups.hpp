#pragma once

// Matrix groups acting on X1, their exact membership equations, generator-product sampling,
// and the actions themselves.
//
//   BigG        SL(n+1), acting by (g x, g^{-T} y)
//   H           identity component of the fixed points of conjugation by diag(-1,1,...,1):
//               diag((det h)^{-1}, h) with det h > 0, acting as a subgroup of BigG
//   H1          SL(n), acting on (x', y') by (h x', h^{-T} y')
//   GLplus      GL+(n), same action as H1
//   ScalingTorus GL+(1), acting by (t x, t^{-1} y)
//   TildeH      SO_0 of the split form <x',y'> on R^{2n}, acting linearly on (x'; y')
//   TildeG      SO_0 of the split form <x,y> on R^{2n+2}, acting linearly on (x; y)
//   products    the first factor above times ScalingTorus, stored componentwise

#include "orbitkit/matrix.hpp"
#include "orbitkit/seed_stream.hpp"
#include "orbitkit/space_x1.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orbitkit {

enum class GroupKind {
    BigG,
    H,
    H1,
    GLplus,
    ScalingTorus,
    TildeH,
    TildeG,
    HTimesTorus,
    GLplusTimesTorus,
    TildeHTimesTorus,
};

struct GroupTag {
    GroupKind kind;
    std::size_t n;
    friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

inline constexpr GroupKind kAllGroupKinds[] = {
    GroupKind::BigG,         GroupKind::H,      GroupKind::H1,          GroupKind::GLplus,
    GroupKind::ScalingTorus, GroupKind::TildeH, GroupKind::TildeG,      GroupKind::HTimesTorus,
    GroupKind::GLplusTimesTorus, GroupKind::TildeHTimesTorus,
};

bool is_product(GroupKind kind);
/// Factor tags of a product tag, or the tag itself for a simple tag.
std::vector<GroupTag> factor_tags(GroupTag tag);
/// Side length of the defining matrix of a simple tag.
std::size_t matrix_size(GroupTag tag);
std::string kind_name(GroupKind kind);
GroupKind parse_kind_name(const std::string& name);

/// Gram matrix [[0, I_m], [I_m, 0]] of the split pairing on R^m x R^m.
RatMatrix split_form(std::size_t m);

/// Exact defining equations of a simple tag. Throws DimensionError on size mismatch or product tags.
bool is_member(GroupTag tag, const RatMatrix& m);
/// Componentwise membership for any tag.
bool is_member(GroupTag tag, const std::vector<RatMatrix>& components);

class GroupElement {
public:
    /// Validated construction; throws NotMember or DimensionError.
    static GroupElement make(GroupTag tag, std::vector<RatMatrix> components);
    static GroupElement make(GroupTag tag, RatMatrix matrix);
    static GroupElement identity(GroupTag tag);

    const GroupTag& tag() const noexcept { return tag_; }
    const std::vector<RatMatrix>& components() const noexcept { return components_; }
    /// The single defining matrix of a simple tag.
    const RatMatrix& matrix() const { return components_.front(); }

    GroupElement inverse() const;

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    GroupElement(GroupTag tag, std::vector<RatMatrix> components)
        : tag_(tag), components_(std::move(components)) {}

    GroupTag tag_;
    std::vector<RatMatrix> components_;
};

/// diag((det h)^{-1}, h) as an element of BigG. Throws DomainError if det h <= 0.
GroupElement embed_glplus(const RatMatrix& h);

struct SamplingOptions {
    std::int64_t coefficient_bound = 3;
    std::size_t max_length = 12;
};

/// An identity-component element built as a bounded product of exact generators.
GroupElement sample_element(GroupTag tag, SeedStream& stream, const SamplingOptions& options = {});

/// Group action on X1. Throws DimensionError when the tag's n differs from the point's.
PointX1 act(const GroupElement& g, const PointX1& p);

/// (h x', h^{-T} y') for any invertible n x n matrix h, without a membership check.
PointX1 act_on_primed(const RatMatrix& h, const PointX1& p);

/// i(g) = g . (e1, e1) for g in BigG (or H).
PointX1 i_map(const GroupElement& g);

}  // namespace orbitkit
