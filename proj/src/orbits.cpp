#include "orbitkit/orbits.hpp"

#include "orbitkit/errors.hpp"
#include "orbitkit/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace orbitkit {

GroupTag acting_group(GroupCase c, std::size_t n)
{
    switch (c) {
    case GroupCase::H1:
        return {GroupKind::H1, n};
    case GroupCase::GLplus:
        return {GroupKind::GLplus, n};
    case GroupCase::TildeH:
        return {GroupKind::TildeH, n};
    case GroupCase::H:
        return {GroupKind::GLplusTimesTorus, n};
    case GroupCase::TildeHTorus:
        return {GroupKind::TildeHTimesTorus, n};
    }
    throw Unsupported("acting_group: unknown case");
}

std::string case_name(GroupCase c)
{
    switch (c) {
    case GroupCase::H1:
        return "H1";
    case GroupCase::GLplus:
        return "GLplus";
    case GroupCase::TildeH:
        return "Htilde";
    case GroupCase::H:
        return "H";
    case GroupCase::TildeHTorus:
        return "Htilde-torus";
    }
    return "?";
}

GroupCase parse_case_name(const std::string& name)
{
    std::string lower;
    for (char ch : name) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (lower == "h1") {
        return GroupCase::H1;
    }
    if (lower == "glplus") {
        return GroupCase::GLplus;
    }
    if (lower == "htilde") {
        return GroupCase::TildeH;
    }
    if (lower == "h") {
        return GroupCase::H;
    }
    if (lower == "htilde-torus") {
        return GroupCase::TildeHTorus;
    }
    throw ParseError("unknown group case '" + name + "' (expected h1|glplus|htilde|h|htilde-torus)");
}

bool uses_big_Q(GroupCase c) { return c == GroupCase::H || c == GroupCase::TildeHTorus; }

Sign sign_of(const Rational& r)
{
    const int s = sgn(r);
    return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

std::string sign_name(Sign s)
{
    switch (s) {
    case Sign::Negative:
        return "-";
    case Sign::Zero:
        return "0";
    case Sign::Positive:
        return "+";
    }
    return "?";
}

Sign parse_sign(const std::string& s)
{
    if (s == "+") {
        return Sign::Positive;
    }
    if (s == "-") {
        return Sign::Negative;
    }
    if (s == "0") {
        return Sign::Zero;
    }
    throw ParseError("unknown sign '" + s + "'");
}

namespace {

constexpr std::pair<StratumKind, const char*> kStratumNames[] = {
    {StratumKind::Generic, "Generic"}, {StratumKind::Cone, "Cone"},     {StratumKind::ConeSigned, "ConeSigned"},
    {StratumKind::ConeParam, "ConeParam"}, {StratumKind::XZero, "XZero"}, {StratumKind::YZero, "YZero"},
    {StratumKind::Origin, "Origin"},   {StratumKind::NullPair, "NullPair"},
};

}  // namespace

std::string stratum_name(StratumKind k)
{
    for (const auto& [kind, name] : kStratumNames) {
        if (kind == k) {
            return name;
        }
    }
    return "?";
}

StratumKind parse_stratum_name(const std::string& s)
{
    for (const auto& [kind, name] : kStratumNames) {
        if (s == name) {
            return kind;
        }
    }
    throw ParseError("unknown stratum '" + s + "'");
}

Rational cone_parameter(const PointX1& p)
{
    if (p.n() != 2 || p.x1() * p.y1() != 1 || is_zero(p.x_prime()) || is_zero(p.y_prime())) {
        throw DomainError("cone_parameter: point is not on the n = 2 cone with x' != 0, y' != 0");
    }
    const Rational& x2 = p.x_prime()[0];
    const Rational& x3 = p.x_prime()[1];
    const Rational& y2 = p.y_prime()[0];
    const Rational& y3 = p.y_prime()[1];
    // Solve from whichever x-component is nonzero, then check the other equation.
    const Rational s = x3 != 0 ? Rational(-y2 / x3) : Rational(y3 / x2);
    if (y2 != -s * x3 || y3 != s * x2) {
        throw InconsistentState("cone_parameter: y' is not proportional to (-x3, x2)");
    }
    return s;
}

namespace {

/// Stratum on the null cone <x', y'> = 0.
Stratum cone_stratum(GroupCase c, const PointX1& p)
{
    const bool x_zero = is_zero(p.x_prime());
    const bool y_zero = is_zero(p.y_prime());
    if (x_zero && y_zero) {
        return {StratumKind::Origin};
    }
    if (c == GroupCase::TildeH || c == GroupCase::TildeHTorus) {
        return {StratumKind::NullPair};
    }
    if (x_zero) {
        return {StratumKind::XZero};
    }
    if (y_zero) {
        return {StratumKind::YZero};
    }
    if (p.n() == 2) {
        if (c == GroupCase::H1) {
            return {StratumKind::ConeParam, Sign::Zero, cone_parameter(p)};
        }
        const auto& x = p.x_prime();
        const auto& y = p.y_prime();
        return {StratumKind::ConeSigned, sign_of(x[0] * y[1] - x[1] * y[0])};
    }
    return {StratumKind::Cone};
}

}  // namespace

OrbitLabel classify(GroupCase c, const PointX1& p)
{
    if (p.n() < 2) {
        throw Unsupported("classify: n must be >= 2");
    }
    OrbitLabel label;
    label.group_case = c;
    label.n = p.n();
    if (!uses_big_Q(c)) {
        label.continuous = QInvariants{p.x1(), p.y1()};
        if (p.x1() * p.y1() != 1) {
            label.stratum = {StratumKind::Generic};
        } else {
            label.stratum = cone_stratum(c, p);
        }
        return label;
    }
    const Rational q = invariant_Q(p);
    label.continuous = SignedQInvariants{q, sign_of(p.x1()), sign_of(p.y1())};
    label.stratum = q != 0 ? Stratum{StratumKind::Generic} : cone_stratum(c, p);
    return label;
}

bool same_orbit(GroupCase c, const PointX1& p, const PointX1& q)
{
    if (p.n() != q.n()) {
        throw DimensionError("same_orbit: points have different n");
    }
    return classify(c, p) == classify(c, q);
}

namespace {

Rational unit_of(Sign s) { return Rational(static_cast<int>(s)); }

/// (x', y') realizing a stratum with <x', y'> = c.
std::pair<RatVector, RatVector> primed_for(const Stratum& s, std::size_t n, const Rational& c)
{
    const RatVector e1 = unit_vector(n, 0);
    const RatVector zero = zero_vector(n);
    switch (s.kind) {
    case StratumKind::Generic:
        return {e1, scaled(e1, c)};
    case StratumKind::Cone:
    case StratumKind::NullPair:
        return {e1, unit_vector(n, 1)};
    case StratumKind::ConeSigned:
        return {e1, scaled(unit_vector(n, 1), unit_of(s.sign))};
    case StratumKind::ConeParam:
        return {e1, scaled(unit_vector(n, 1), s.param)};
    case StratumKind::XZero:
        return {zero, e1};
    case StratumKind::YZero:
        return {e1, zero};
    case StratumKind::Origin:
        return {zero, zero};
    }
    throw EmptyOrbit("unknown stratum");
}

}  // namespace

PointX1 representative(const OrbitLabel& label)
{
    if (label.n < 2) {
        throw EmptyOrbit("representative: n must be >= 2");
    }
    Rational x1;
    Rational y1;
    if (const auto* q = std::get_if<QInvariants>(&label.continuous)) {
        x1 = q->x1;
        y1 = q->y1;
    } else {
        const auto& sq = std::get<SignedQInvariants>(label.continuous);
        const Rational product = 1 - sq.Q;
        x1 = unit_of(sq.sgn_x1);
        if (product != 0) {
            if (x1 == 0) {
                throw EmptyOrbit("representative: x1 y1 = 1 - Q != 0 forces x1 != 0");
            }
            y1 = product / x1;
        } else {
            y1 = unit_of(sq.sgn_y1);
        }
    }
    const Rational c = 1 - x1 * y1;
    auto [xp, yp] = primed_for(label.stratum, label.n, c);
    std::optional<PointX1> p;
    try {
        p = PointX1::make(label.n, x1, std::move(xp), y1, std::move(yp));
    } catch (const Error&) {
        throw EmptyOrbit("representative: label is not realizable for n = " + std::to_string(label.n));
    }
    if (!(classify(label.group_case, *p) == label)) {
        throw EmptyOrbit("representative: label is not realizable for n = " + std::to_string(label.n));
    }
    return *p;
}

OrbitLabel j_label_transport(GroupCase c, const OrbitLabel& label)
{
    if (!uses_big_Q(c) || label.group_case != c) {
        throw Unsupported("j_label_transport: defined for cases H and Htilde-torus");
    }
    OrbitLabel out = label;
    switch (label.stratum.kind) {
    case StratumKind::XZero:
        out.stratum.kind = StratumKind::YZero;
        break;
    case StratumKind::YZero:
        out.stratum.kind = StratumKind::XZero;
        break;
    case StratumKind::ConeSigned:
        // det[-y', -x'] = -det[x', y']
        out.stratum.sign = static_cast<Sign>(-static_cast<int>(label.stratum.sign));
        break;
    default:
        break;
    }
    return out;
}

// Sampling -------------------------------------------------------------------------------

namespace {

constexpr std::int64_t kCoordinateBound = 5;

RatVector random_vector(std::size_t n, SeedStream& stream)
{
    RatVector v;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(sample_rational(stream, kCoordinateBound));
    }
    return v;
}

RatVector random_nonzero_vector(std::size_t n, SeedStream& stream)
{
    RatVector v = random_vector(n, stream);
    if (is_zero(v)) {
        v[stream.uniform_below(n)] = sample_nonzero_rational(stream, kCoordinateBound);
    }
    return v;
}

/// Random (x', y') with <x', y'> = c: x' random nonzero, y' random except one coordinate
/// solved from the constraint.
std::pair<RatVector, RatVector> solve_pairing(std::size_t n, const Rational& c, SeedStream& stream)
{
    RatVector x = random_nonzero_vector(n, stream);
    RatVector y = random_vector(n, stream);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != 0) {
            support.push_back(i);
        }
    }
    const std::size_t k = support[stream.uniform_below(support.size())];
    Rational rest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != k) {
            rest += x[i] * y[i];
        }
    }
    y[k] = (c - rest) / x[k];
    return {std::move(x), std::move(y)};
}

std::pair<RatVector, RatVector> sample_primed(std::size_t n, const Rational& c, SeedStream& stream)
{
    if (c != 0) {
        return solve_pairing(n, c, stream);
    }
    switch (stream.uniform_below(4)) {
    case 0:
        return solve_pairing(n, c, stream);
    case 1:
        return {zero_vector(n), random_nonzero_vector(n, stream)};
    case 2:
        return {random_nonzero_vector(n, stream), zero_vector(n)};
    default:
        return {zero_vector(n), zero_vector(n)};
    }
}

}  // namespace

PointX1 sample_fiber_point(const FiberSpec& fiber, std::size_t n, SeedStream& stream)
{
    if (n < 2) {
        throw DimensionError("sample_fiber_point: n must be >= 2");
    }
    Rational x1;
    Rational y1;
    if (const auto* q = std::get_if<QFiber>(&fiber)) {
        x1 = q->x1;
        y1 = q->y1;
    } else {
        const Rational product = 1 - std::get<BigQFiber>(fiber).t;
        if (product != 0) {
            x1 = sample_nonzero_rational(stream, kCoordinateBound);
            y1 = product / x1;
        } else {
            // Q = 1: the axes x1 y1 = 0, each half-axis and the origin with equal weight.
            const Rational v = sample_positive_rational(stream, kCoordinateBound);
            switch (stream.uniform_below(5)) {
            case 0:
                x1 = v;
                break;
            case 1:
                x1 = -v;
                break;
            case 2:
                y1 = v;
                break;
            case 3:
                y1 = -v;
                break;
            default:
                break;
            }
        }
    }
    auto [xp, yp] = sample_primed(n, 1 - x1 * y1, stream);
    return PointX1::make(n, x1, std::move(xp), y1, std::move(yp));
}

PointX1 sample_stratified_point(std::size_t n, SeedStream& stream)
{
    switch (stream.uniform_below(3)) {
    case 0:
        return sample_fiber_point(
            QFiber{sample_rational(stream, kCoordinateBound), sample_rational(stream, kCoordinateBound)}, n, stream);
    case 1: {
        const Rational x1 = sample_nonzero_rational(stream, kCoordinateBound);
        return sample_fiber_point(QFiber{x1, 1 / x1}, n, stream);
    }
    default:
        return sample_fiber_point(BigQFiber{1}, n, stream);
    }
}

namespace {

std::string label_key(const OrbitLabel& l)
{
    std::string k = case_name(l.group_case) + "|" + std::to_string(l.n) + "|";
    if (const auto* q = std::get_if<QInvariants>(&l.continuous)) {
        k += to_string(q->x1) + "," + to_string(q->y1);
    } else {
        const auto& s = std::get<SignedQInvariants>(l.continuous);
        k += to_string(s.Q) + "," + sign_name(s.sgn_x1) + sign_name(s.sgn_y1);
    }
    return k + "|" + stratum_name(l.stratum.kind) + sign_name(l.stratum.sign) + to_string(l.stratum.param);
}

}  // namespace

CensusReport fiber_census(GroupCase c, const FiberSpec& fiber, std::size_t n, std::size_t samples,
                          const SeedStream& stream)
{
    if (samples < 1) {
        throw Error("fiber_census: samples must be >= 1");
    }
    std::vector<std::optional<OrbitLabel>> labels(samples);
    parallel_for(samples, [&](std::size_t i) {
        SeedStream s = stream.derive(i);
        labels[i] = classify(c, sample_fiber_point(fiber, n, s));
    });

    CensusReport report;
    report.group_case = c;
    report.n = n;
    report.fiber = fiber;
    report.samples = samples;
    std::map<std::string, CensusEntry> tally;
    std::set<Rational> params;
    for (auto& l : labels) {
        OrbitLabel label = std::move(*l);
        if (label.stratum.kind == StratumKind::ConeParam) {
            params.insert(label.stratum.param);
            label.stratum.param = 0;
            report.continuum = true;
        }
        auto& entry = tally[label_key(label)];
        if (entry.count == 0) {
            entry.label = label;
        }
        ++entry.count;
    }
    for (auto& [key, entry] : tally) {
        report.labels.push_back(std::move(entry));
    }
    report.distinct = report.labels.size();
    report.cone_params.assign(params.begin(), params.end());
    return report;
}

}  // namespace orbitkit
