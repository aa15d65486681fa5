#pragma once

// Orbit classification on X1 for the five acting groups:
//   H1          SL(n) on (x', y')
//   GLplus      GL+(n) on (x', y')
//   TildeH      SO_0 of the split form on (x', y')
//   H           GL+(n) x GL+(1); equivalently the two-sided H action on SL(n+1)
//   TildeHTorus SO_0(split form) x GL+(1)
//
// A label stores every continuous invariant plus an exact stratum tag, so two points lie in
// one orbit exactly when their labels compare equal.

#include "orbitkit/groups.hpp"
#include "orbitkit/seed_stream.hpp"
#include "orbitkit/space_x1.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace orbitkit {

enum class GroupCase { H1, GLplus, TildeH, H, TildeHTorus };

inline constexpr GroupCase kAllGroupCases[] = {GroupCase::H1, GroupCase::GLplus, GroupCase::TildeH, GroupCase::H,
                                              GroupCase::TildeHTorus};

/// Group whose orbits the case describes.
GroupTag acting_group(GroupCase c, std::size_t n);
std::string case_name(GroupCase c);
GroupCase parse_case_name(const std::string& name);
/// Cases H and TildeHTorus carry Q plus signs; the others carry q = (x1, y1).
bool uses_big_Q(GroupCase c);

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };
Sign sign_of(const Rational& r);
std::string sign_name(Sign s);
Sign parse_sign(const std::string& s);

enum class StratumKind {
    Generic,     ///< off the null cone, or any Q != 0 fiber for the Q-cases
    Cone,        ///< <x',y'> = 0 with x' != 0 and y' != 0 (n >= 3)
    ConeSigned,  ///< n = 2 cone split by sign(x2 y3 - x3 y2)
    ConeParam,   ///< n = 2, SL(2): y' = s (-x3, x2), s != 0
    XZero,       ///< x' = 0, y' != 0
    YZero,       ///< x' != 0, y' = 0
    Origin,      ///< x' = y' = 0
    NullPair,    ///< (x', y') != 0 on the cone, split-orthogonal cases
};
std::string stratum_name(StratumKind k);
StratumKind parse_stratum_name(const std::string& s);

struct Stratum {
    StratumKind kind = StratumKind::Generic;
    Sign sign = Sign::Zero;  ///< ConeSigned only
    Rational param = 0;      ///< ConeParam only
    friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct QInvariants {
    Rational x1;
    Rational y1;
    friend bool operator==(const QInvariants&, const QInvariants&) = default;
};

struct SignedQInvariants {
    Rational Q;
    Sign sgn_x1 = Sign::Zero;
    Sign sgn_y1 = Sign::Zero;
    friend bool operator==(const SignedQInvariants&, const SignedQInvariants&) = default;
};

struct OrbitLabel {
    GroupCase group_case = GroupCase::H1;
    std::size_t n = 2;
    std::variant<QInvariants, SignedQInvariants> continuous;
    Stratum stratum;
    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

/// Exact case analysis. Throws Unsupported for n < 2.
OrbitLabel classify(GroupCase c, const PointX1& p);

/// Label equality. Throws DimensionError if the points have different n.
bool same_orbit(GroupCase c, const PointX1& p, const PointX1& q);

/// Deterministic point carrying the label. Throws EmptyOrbit when no point has that label.
PointX1 representative(const OrbitLabel& label);

/// Label of j(p) for p carrying `label`. Defined for cases H and TildeHTorus only.
OrbitLabel j_label_transport(GroupCase c, const OrbitLabel& label);

/// The Case-H1, n = 2 cone parameter: the s with y' = s (-x3, x2). Throws DomainError if p is
/// not on that cone stratum.
Rational cone_parameter(const PointX1& p);

// Sampling -------------------------------------------------------------------------------

/// Point in the fiber. Degenerate loci (x' = 0, y' = 0, origin, axes of Q = 1) are drawn with
/// fixed positive frequency instead of being left to chance.
PointX1 sample_fiber_point(const FiberSpec& fiber, std::size_t n, SeedStream& stream);

/// Point drawn from a mix of generic q-fibers, the special fibers x1 y1 = 1 and the Q = 1 fiber.
PointX1 sample_stratified_point(std::size_t n, SeedStream& stream);

struct CensusEntry {
    OrbitLabel label;
    std::size_t count = 0;
};

struct CensusReport {
    GroupCase group_case = GroupCase::H1;
    std::size_t n = 2;
    FiberSpec fiber;
    std::size_t samples = 0;
    /// Sorted by serialized label. ConeParam labels are merged into one family entry whose
    /// label has param 0; the distinct parameters are listed in cone_params.
    std::vector<CensusEntry> labels;
    std::size_t distinct = 0;
    bool continuum = false;
    std::vector<Rational> cone_params;
};

CensusReport fiber_census(GroupCase c, const FiberSpec& fiber, std::size_t n, std::size_t samples,
                          const SeedStream& stream);

}  // namespace orbitkit
