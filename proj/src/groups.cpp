#include "orbitkit/groups.hpp"

#include "orbitkit/errors.hpp"

#include <algorithm>

namespace orbitkit {

bool is_product(GroupKind kind)
{
    return kind == GroupKind::HTimesTorus || kind == GroupKind::GLplusTimesTorus ||
           kind == GroupKind::TildeHTimesTorus;
}

std::vector<GroupTag> factor_tags(GroupTag tag)
{
    switch (tag.kind) {
    case GroupKind::HTimesTorus:
        return {{GroupKind::H, tag.n}, {GroupKind::ScalingTorus, tag.n}};
    case GroupKind::GLplusTimesTorus:
        return {{GroupKind::GLplus, tag.n}, {GroupKind::ScalingTorus, tag.n}};
    case GroupKind::TildeHTimesTorus:
        return {{GroupKind::TildeH, tag.n}, {GroupKind::ScalingTorus, tag.n}};
    default:
        return {tag};
    }
}

std::size_t matrix_size(GroupTag tag)
{
    switch (tag.kind) {
    case GroupKind::BigG:
    case GroupKind::H:
        return tag.n + 1;
    case GroupKind::H1:
    case GroupKind::GLplus:
        return tag.n;
    case GroupKind::ScalingTorus:
        return 1;
    case GroupKind::TildeH:
        return 2 * tag.n;
    case GroupKind::TildeG:
        return 2 * tag.n + 2;
    default:
        throw DimensionError("matrix_size: product tag " + kind_name(tag.kind) + " has no single matrix");
    }
}

namespace {

struct KindName {
    GroupKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {GroupKind::BigG, "G"},
    {GroupKind::H, "H"},
    {GroupKind::H1, "H1"},
    {GroupKind::GLplus, "GLplus"},
    {GroupKind::ScalingTorus, "torus"},
    {GroupKind::TildeH, "tildeH"},
    {GroupKind::TildeG, "tildeG"},
    {GroupKind::HTimesTorus, "H*torus"},
    {GroupKind::GLplusTimesTorus, "GLplus*torus"},
    {GroupKind::TildeHTimesTorus, "tildeH*torus"},
};

}  // namespace

std::string kind_name(GroupKind kind)
{
    for (const auto& kn : kKindNames) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "?";
}

GroupKind parse_kind_name(const std::string& name)
{
    for (const auto& kn : kKindNames) {
        if (name == kn.name) {
            return kn.kind;
        }
    }
    throw ParseError("unknown group tag '" + name + "'");
}

RatMatrix split_form(std::size_t m)
{
    RatMatrix s(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        s(i, m + i) = 1;
        s(m + i, i) = 1;
    }
    return s;
}

bool is_member(GroupTag tag, const RatMatrix& m)
{
    const std::size_t size = matrix_size(tag);
    if (m.rows() != size || m.cols() != size) {
        throw DimensionError("is_member(" + kind_name(tag.kind) + ", n=" + std::to_string(tag.n) + "): expected " +
                             std::to_string(size) + "x" + std::to_string(size) + " matrix");
    }
    switch (tag.kind) {
    case GroupKind::BigG:
    case GroupKind::H1:
        return exact_det(m) == 1;
    case GroupKind::GLplus:
        return exact_det(m) > 0;
    case GroupKind::ScalingTorus:
        return m(0, 0) > 0;
    case GroupKind::H: {
        for (std::size_t i = 1; i < size; ++i) {
            if (m(0, i) != 0 || m(i, 0) != 0) {
                return false;
            }
        }
        const Rational d = exact_det(m.block(1, 1, tag.n, tag.n));
        return d > 0 && m(0, 0) * d == 1;
    }
    case GroupKind::TildeH:
    case GroupKind::TildeG: {
        const RatMatrix s = split_form(size / 2);
        return m.transpose() * s * m == s && exact_det(m) == 1;
    }
    default:
        throw DimensionError("is_member: product tag needs components");
    }
}

bool is_member(GroupTag tag, const std::vector<RatMatrix>& components)
{
    const auto factors = factor_tags(tag);
    if (components.size() != factors.size()) {
        throw DimensionError("is_member(" + kind_name(tag.kind) + "): expected " + std::to_string(factors.size()) +
                             " components");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!is_member(factors[i], components[i])) {
            return false;
        }
    }
    return true;
}

GroupElement GroupElement::make(GroupTag tag, std::vector<RatMatrix> components)
{
    if (!is_member(tag, components)) {
        throw NotMember("matrix is not a member of " + kind_name(tag.kind));
    }
    return GroupElement(tag, std::move(components));
}

GroupElement GroupElement::make(GroupTag tag, RatMatrix matrix)
{
    std::vector<RatMatrix> c;
    c.push_back(std::move(matrix));
    return make(tag, std::move(c));
}

GroupElement GroupElement::identity(GroupTag tag)
{
    std::vector<RatMatrix> c;
    for (const auto& f : factor_tags(tag)) {
        c.push_back(RatMatrix::identity(matrix_size(f)));
    }
    return GroupElement(tag, std::move(c));
}

namespace {

RatMatrix torus_on_primed(std::size_t n, const Rational& t)
{
    return block_diagonal(t * RatMatrix::identity(n), Rational(1 / t) * RatMatrix::identity(n));
}

}  // namespace

GroupElement GroupElement::inverse() const
{
    std::vector<RatMatrix> c;
    c.reserve(components_.size());
    for (const auto& m : components_) {
        c.push_back(orbitkit::inverse(m));
    }
    if (tag_.kind == GroupKind::TildeHTimesTorus) {
        // (g, t)^{-1} = (tau^{-1} g^{-1} tau, t^{-1}).
        const Rational& t = components_[1](0, 0);
        c[0] = torus_on_primed(tag_.n, 1 / t) * c[0] * torus_on_primed(tag_.n, t);
    }
    return GroupElement(tag_, std::move(c));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b)
{
    if (!(a.tag_ == b.tag_)) {
        throw DimensionError("group product of elements with different tags");
    }
    std::vector<RatMatrix> c;
    c.reserve(a.components_.size());
    for (std::size_t i = 0; i < a.components_.size(); ++i) {
        c.push_back(a.components_[i] * b.components_[i]);
    }
    if (a.tag_.kind == GroupKind::TildeHTimesTorus) {
        // The torus acts on (x'; y') by tau = diag(t I, t^{-1} I), which normalizes TildeH without
        // commuting with it: (g1, t1)(g2, t2) = (g1 tau1 g2 tau1^{-1}, t1 t2).
        const Rational& t1 = a.components_[1](0, 0);
        c[0] = a.components_[0] * torus_on_primed(a.tag_.n, t1) * b.components_[0] *
               torus_on_primed(a.tag_.n, 1 / t1);
    }
    return GroupElement(a.tag_, std::move(c));
}

GroupElement embed_glplus(const RatMatrix& h)
{
    if (!h.is_square()) {
        throw DimensionError("embed_glplus: h must be square");
    }
    const Rational d = exact_det(h);
    if (d <= 0) {
        throw DomainError("embed_glplus: det h = " + to_string(d) + " is not positive");
    }
    RatMatrix top(1, 1);
    top(0, 0) = 1 / d;
    return GroupElement::make(GroupTag{GroupKind::BigG, h.rows()}, block_diagonal(top, h));
}

// Sampling -------------------------------------------------------------------------------

namespace {

RatMatrix random_transvection(std::size_t m, SeedStream& stream, std::int64_t bound)
{
    const auto i = static_cast<std::size_t>(stream.uniform_below(m));
    auto j = static_cast<std::size_t>(stream.uniform_below(m - 1));
    if (j >= i) {
        ++j;
    }
    RatMatrix t = RatMatrix::identity(m);
    t(i, j) = sample_nonzero_rational(stream, bound);
    return t;
}

RatMatrix random_positive_diagonal(std::size_t m, SeedStream& stream, std::int64_t bound)
{
    RatVector d;
    for (std::size_t i = 0; i < m; ++i) {
        d.push_back(sample_positive_rational(stream, bound));
    }
    return RatMatrix::diagonal(d);
}

RatMatrix random_skew(std::size_t m, SeedStream& stream, std::int64_t bound)
{
    const auto i = static_cast<std::size_t>(stream.uniform_below(m));
    auto j = static_cast<std::size_t>(stream.uniform_below(m - 1));
    if (j >= i) {
        ++j;
    }
    RatMatrix b(m, m);
    const Rational c = sample_nonzero_rational(stream, bound);
    b(i, j) = c;
    b(j, i) = -c;
    return b;
}

RatMatrix sample_special_linear(std::size_t m, SeedStream& stream, const SamplingOptions& o)
{
    const auto length = static_cast<std::size_t>(stream.uniform_below(o.max_length + 1));
    RatMatrix g = RatMatrix::identity(m);
    for (std::size_t k = 0; k < length; ++k) {
        g = g * random_transvection(m, stream, o.coefficient_bound);
    }
    return g;
}

RatMatrix sample_general_linear_plus(std::size_t m, SeedStream& stream, const SamplingOptions& o)
{
    const auto length = static_cast<std::size_t>(stream.uniform_below(o.max_length + 1));
    RatMatrix g = RatMatrix::identity(m);
    if (length == 0) {
        return g;
    }
    const auto diagonal_at = static_cast<std::size_t>(stream.uniform_below(length));
    for (std::size_t k = 0; k < length; ++k) {
        g = g * (k == diagonal_at ? random_positive_diagonal(m, stream, o.coefficient_bound)
                                  : random_transvection(m, stream, o.coefficient_bound));
    }
    return g;
}

/// Generators of SO_0 of the split form on R^m x R^m: unipotent [[I,B],[0,I]], [[I,0],[C,I]]
/// with B, C skew, and the Levi part diag(A, A^{-T}) with A a transvection.
RatMatrix sample_split_orthogonal(std::size_t m, SeedStream& stream, const SamplingOptions& o)
{
    const auto length = static_cast<std::size_t>(stream.uniform_below(o.max_length + 1));
    const RatMatrix id = RatMatrix::identity(m);
    const RatMatrix zero(m, m);
    RatMatrix g = RatMatrix::identity(2 * m);
    for (std::size_t k = 0; k < length; ++k) {
        switch (stream.uniform_below(3)) {
        case 0:
            g = g * block_matrix(id, random_skew(m, stream, o.coefficient_bound), zero, id);
            break;
        case 1:
            g = g * block_matrix(id, zero, random_skew(m, stream, o.coefficient_bound), id);
            break;
        default: {
            const RatMatrix a = random_transvection(m, stream, o.coefficient_bound);
            g = g * block_diagonal(a, orbitkit::inverse(a).transpose());
            break;
        }
        }
    }
    return g;
}

RatMatrix sample_simple(GroupTag tag, SeedStream& stream, const SamplingOptions& o)
{
    switch (tag.kind) {
    case GroupKind::BigG:
        return sample_special_linear(tag.n + 1, stream, o);
    case GroupKind::H1:
        return sample_special_linear(tag.n, stream, o);
    case GroupKind::GLplus:
        return sample_general_linear_plus(tag.n, stream, o);
    case GroupKind::H:
        return embed_glplus(sample_general_linear_plus(tag.n, stream, o)).matrix();
    case GroupKind::ScalingTorus: {
        RatMatrix t(1, 1);
        t(0, 0) = sample_positive_rational(stream, o.coefficient_bound);
        return t;
    }
    case GroupKind::TildeH:
        return sample_split_orthogonal(tag.n, stream, o);
    case GroupKind::TildeG:
        return sample_split_orthogonal(tag.n + 1, stream, o);
    default:
        throw DimensionError("sample_simple: product tag");
    }
}

}  // namespace

GroupElement sample_element(GroupTag tag, SeedStream& stream, const SamplingOptions& options)
{
    if (tag.n < 2) {
        throw DimensionError("sample_element: n must be >= 2");
    }
    std::vector<RatMatrix> c;
    for (const auto& f : factor_tags(tag)) {
        c.push_back(sample_simple(f, stream, options));
    }
    return GroupElement::make(tag, std::move(c));
}

// Actions --------------------------------------------------------------------------------

PointX1 act_on_primed(const RatMatrix& h, const PointX1& p)
{
    if (h.rows() != p.n() || h.cols() != p.n()) {
        throw DimensionError("act_on_primed: matrix size does not match n = " + std::to_string(p.n()));
    }
    const RatMatrix h_inv_t = orbitkit::inverse(h).transpose();
    return PointX1::make(p.n(), p.x1(), h * p.x_prime(), p.y1(), h_inv_t * p.y_prime());
}

namespace {

PointX1 act_simple(GroupTag tag, const RatMatrix& m, const PointX1& p)
{
    const std::size_t n = p.n();
    switch (tag.kind) {
    case GroupKind::BigG:
    case GroupKind::H: {
        const RatMatrix g_inv_t = orbitkit::inverse(m).transpose();
        return PointX1::from_full(m * p.x(), g_inv_t * p.y());
    }
    case GroupKind::H1:
    case GroupKind::GLplus:
        return act_on_primed(m, p);
    case GroupKind::ScalingTorus: {
        const Rational& t = m(0, 0);
        return PointX1::make(n, t * p.x1(), scaled(p.x_prime(), t), p.y1() / t, scaled(p.y_prime(), 1 / t));
    }
    case GroupKind::TildeH: {
        const RatVector v = m * p.primed();
        return PointX1::make(n, p.x1(), RatVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)), p.y1(),
                             RatVector(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()));
    }
    case GroupKind::TildeG: {
        const RatVector v = m * concat(p.x(), p.y());
        const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n + 1);
        return PointX1::from_full(RatVector(v.begin(), mid), RatVector(mid, v.end()));
    }
    default:
        throw DimensionError("act_simple: product tag");
    }
}

}  // namespace

PointX1 act(const GroupElement& g, const PointX1& p)
{
    if (g.tag().n != p.n()) {
        throw DimensionError("act: group element has n = " + std::to_string(g.tag().n) + ", point has n = " +
                             std::to_string(p.n()));
    }
    const auto factors = factor_tags(g.tag());
    PointX1 out = p;
    // (g, t) acts as g after t.
    for (std::size_t i = factors.size(); i-- > 0;) {
        out = act_simple(factors[i], g.components()[i], out);
    }
    return out;
}

PointX1 i_map(const GroupElement& g)
{
    if (g.tag().kind != GroupKind::BigG && g.tag().kind != GroupKind::H) {
        throw DimensionError("i_map: expects an element of SL(n+1)");
    }
    return act(g, PointX1::base_point(g.tag().n));
}

}  // namespace orbitkit
