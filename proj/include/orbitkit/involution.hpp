#pragma once

// The anti-involution J(g) = g^T and the involution theta(g) = g^{-T} of SL(n+1), the local
// sections alpha of i : SL(n+1) -> X1 with their cocycles phi, the check that i o J o alpha
// equals phi . (j o i o alpha), and a formal calculus of derivatives of the delta function at
// the origin of the (x', y') block used for the j-parity argument.

#include "orbitkit/matrix.hpp"
#include "orbitkit/seed_stream.hpp"
#include "orbitkit/space_x1.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitkit {

RatMatrix apply_J(const RatMatrix& g);
/// Inverse transpose. Throws SingularMatrix.
RatMatrix apply_theta(const RatMatrix& g);

/// (M e1, M^{-T} e1) for an invertible (n+1) x (n+1) matrix, without a membership check.
PointX1 base_orbit_point(const RatMatrix& m);

/// Section on {y1 != 0} (the check domain is x1 y1 > 0):
///   [[x1, -y2, -y''^T / y1], [x2, y1, 0], [x'', 0, I_{n-1}]]
/// Throws DomainError if y1 == 0.
RatMatrix alpha_chart_a(const PointX1& p);
/// diag(1, 1/y1, ..., 1/y1) in GL(n). Throws DomainError if y1 == 0.
RatMatrix phi_chart_a(const PointX1& p);

/// h C h' with C = [[x1, x1 y1 - 1, 0], [1, y1, 0], [0, 0, I_{n-1}]] and
/// h = diag((det a)^{-1}, a), h' = diag((det b)^{-1}, b). Requires x1 y1 < 1 and det a, det b > 0.
RatMatrix alpha_chart_b(const Rational& x1, const Rational& y1, const RatMatrix& a, const RatMatrix& b);
/// det(ab)^{-1} (ab)^T.
RatMatrix phi_chart_b(const RatMatrix& a, const RatMatrix& b);

struct IdentityReport {
    std::string identity;
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// JSON text describing the first failing trial (lowest trial index).
    std::optional<std::string> first_failure;
    bool passed() const { return failures == 0; }
};

enum class LemmaChart { A, B };

/// Per trial: det alpha = 1, the section property (chart A: i(alpha(p)) = p; chart B:
/// i(alpha) has the sampled x1 y1), and i(alpha^T) = phi . j(i(alpha)) exactly.
IdentityReport verify_lemma3(LemmaChart chart, std::size_t n, std::size_t trials, const SeedStream& stream);

// Delta calculus ---------------------------------------------------------------------------

/// Exponents of d/dx_2 .. d/dx_{n+1}, then d/dy_2 .. d/dy_{n+1}.
using MultiIndex = std::vector<unsigned>;

/// Finite sum of c_alpha d^alpha delta at the origin of R^{2n}. Zero coefficients are never stored.
class DeltaDistribution {
public:
    explicit DeltaDistribution(std::size_t n);
    static DeltaDistribution delta(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    const std::map<MultiIndex, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const MultiIndex& alpha, const Rational& coefficient);

    friend bool operator==(const DeltaDistribution&, const DeltaDistribution&) = default;
    friend DeltaDistribution operator+(const DeltaDistribution& a, const DeltaDistribution& b);
    friend DeltaDistribution operator-(const DeltaDistribution& a, const DeltaDistribution& b);
    friend DeltaDistribution operator*(const Rational& c, const DeltaDistribution& d);

private:
    std::size_t n_;
    std::map<MultiIndex, Rational> terms_;
};

/// Indefinite Laplacian sum_i d^2 / dx_i dy_i applied termwise.
DeltaDistribution box_apply(const DeltaDistribution& d);
/// box^k delta.
DeltaDistribution box_power_delta(std::size_t n, std::size_t k);
/// Push-forward under (x', y') -> (-y', -x'): swap x/y slots, multiply by (-1)^{|alpha|}.
DeltaDistribution j_pushforward(const DeltaDistribution& d);
/// (d - j_* d) / 2.
DeltaDistribution j_odd_part(const DeltaDistribution& d);

/// Every box^k delta with k <= k_max is j-invariant, and the j-odd part of random rational
/// combinations of them vanishes.
IdentityReport verify_theorem4_parity(std::size_t k_max, std::size_t n, const SeedStream& stream,
                                      std::size_t combinations = 20);

}  // namespace orbitkit
