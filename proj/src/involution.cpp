#include "orbitkit/involution.hpp"

#include "orbitkit/errors.hpp"
#include "orbitkit/groups.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/orbits.hpp"
#include "orbitkit/parallel.hpp"

namespace orbitkit {

RatMatrix apply_J(const RatMatrix& g) { return g.transpose(); }

RatMatrix apply_theta(const RatMatrix& g) { return inverse(g).transpose(); }

PointX1 base_orbit_point(const RatMatrix& m)
{
    if (!m.is_square() || m.rows() < 3) {
        throw DimensionError("base_orbit_point: expects a square matrix of size n + 1 >= 3");
    }
    const RatVector e1 = unit_vector(m.rows(), 0);
    return PointX1::from_full(m * e1, apply_theta(m) * e1);
}

RatMatrix alpha_chart_a(const PointX1& p)
{
    if (p.y1() == 0) {
        throw DomainError("alpha_chart_a: requires y1 != 0");
    }
    const std::size_t n = p.n();
    const auto& x = p.x_prime();
    const auto& y = p.y_prime();
    RatMatrix m(n + 1, n + 1);
    m(0, 0) = p.x1();
    m(0, 1) = -y[0];
    m(1, 0) = x[0];
    m(1, 1) = p.y1();
    for (std::size_t k = 1; k < n; ++k) {
        m(0, k + 1) = -y[k] / p.y1();
        m(k + 1, 0) = x[k];
        m(k + 1, k + 1) = 1;
    }
    return m;
}

RatMatrix phi_chart_a(const PointX1& p)
{
    if (p.y1() == 0) {
        throw DomainError("phi_chart_a: requires y1 != 0");
    }
    RatVector d(p.n(), Rational(1 / p.y1()));
    d[0] = 1;
    return RatMatrix::diagonal(d);
}

RatMatrix alpha_chart_b(const Rational& x1, const Rational& y1, const RatMatrix& a, const RatMatrix& b)
{
    if (x1 * y1 >= 1) {
        throw DomainError("alpha_chart_b: requires x1 y1 < 1");
    }
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square() || a.rows() < 2) {
        throw DimensionError("alpha_chart_b: a and b must be n x n with n >= 2");
    }
    const std::size_t n = a.rows();
    RatMatrix core = RatMatrix::identity(n + 1);
    core(0, 0) = x1;
    core(0, 1) = x1 * y1 - 1;
    core(1, 0) = 1;
    core(1, 1) = y1;
    return embed_glplus(a).matrix() * core * embed_glplus(b).matrix();
}

RatMatrix phi_chart_b(const RatMatrix& a, const RatMatrix& b)
{
    const RatMatrix ab = a * b;
    const Rational d = exact_det(ab);
    if (d == 0) {
        throw SingularMatrix("phi_chart_b: a b is singular");
    }
    return Rational(1 / d) * ab.transpose();
}

namespace {

struct TrialOutcome {
    bool ok = true;
    std::string witness;
};

constexpr std::int64_t kParameterBound = 5;

TrialOutcome lemma3_chart_a_trial(std::size_t n, SeedStream& s)
{
    // U = {x1 y1 > 0}
    const Rational x1 = sample_nonzero_rational(s, kParameterBound);
    Rational y1 = sample_positive_rational(s, kParameterBound);
    if (x1 < 0) {
        y1 = -y1;
    }
    const PointX1 p = sample_fiber_point(QFiber{x1, y1}, n, s);

    TrialOutcome out;
    std::string what;
    const RatMatrix m = alpha_chart_a(p);
    if (exact_det(m) != 1) {
        what = "det alpha != 1";
    } else if (!(base_orbit_point(m) == p)) {
        what = "i(alpha(p)) != p";
    } else {
        const PointX1 lhs = base_orbit_point(apply_J(m));
        const PointX1 rhs = act_on_primed(phi_chart_a(p), j_map(base_orbit_point(m)));
        if (!(lhs == rhs)) {
            what = "i(J(alpha)) != phi . j(i(alpha))";
        }
    }
    if (!what.empty()) {
        out.ok = false;
        out.witness = nlohmann::ordered_json{{"check", what}, {"point", point_to_json(p)}}.dump();
    }
    return out;
}

TrialOutcome lemma3_chart_b_trial(std::size_t n, SeedStream& s)
{
    const Rational x1 = sample_rational(s, kParameterBound);
    Rational y1 = sample_rational(s, kParameterBound);
    while (x1 * y1 >= 1) {
        y1 = sample_rational(s, kParameterBound);
    }
    const GroupTag gl{GroupKind::GLplus, n};
    const RatMatrix a = sample_element(gl, s).matrix();
    const RatMatrix b = sample_element(gl, s).matrix();

    TrialOutcome out;
    std::string what;
    const RatMatrix m = alpha_chart_b(x1, y1, a, b);
    if (exact_det(m) != 1) {
        what = "det alpha != 1";
    } else {
        const PointX1 image = base_orbit_point(m);
        if (image.x1() * image.y1() != x1 * y1) {
            what = "i(alpha) leaves the fiber x1 y1 = const";
        } else {
            const PointX1 lhs = base_orbit_point(apply_J(m));
            const PointX1 rhs = act_on_primed(phi_chart_b(a, b), j_map(image));
            if (!(lhs == rhs)) {
                what = "i(J(alpha)) != phi . j(i(alpha))";
            }
        }
    }
    if (!what.empty()) {
        out.ok = false;
        out.witness = nlohmann::ordered_json{{"check", what},
                                             {"x1", to_string(x1)},
                                             {"y1", to_string(y1)},
                                             {"a", matrix_to_json(a)},
                                             {"b", matrix_to_json(b)}}
                          .dump();
    }
    return out;
}

IdentityReport collect(std::string identity, const std::vector<TrialOutcome>& outcomes)
{
    IdentityReport r;
    r.identity = std::move(identity);
    r.trials = outcomes.size();
    for (const auto& o : outcomes) {
        if (!o.ok) {
            if (r.failures == 0) {
                r.first_failure = o.witness;
            }
            ++r.failures;
        }
    }
    return r;
}

}  // namespace

IdentityReport verify_lemma3(LemmaChart chart, std::size_t n, std::size_t trials, const SeedStream& stream)
{
    if (n < 2) {
        throw DimensionError("verify_lemma3: n must be >= 2");
    }
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t i) {
        SeedStream s = stream.derive(i);
        outcomes[i] = chart == LemmaChart::A ? lemma3_chart_a_trial(n, s) : lemma3_chart_b_trial(n, s);
    });
    return collect(chart == LemmaChart::A ? "lemma3-chart-a" : "lemma3-chart-b", outcomes);
}

// Delta calculus ---------------------------------------------------------------------------

DeltaDistribution::DeltaDistribution(std::size_t n) : n_(n) {}

DeltaDistribution DeltaDistribution::delta(std::size_t n)
{
    DeltaDistribution d(n);
    d.add_term(MultiIndex(2 * n, 0), 1);
    return d;
}

void DeltaDistribution::add_term(const MultiIndex& alpha, const Rational& coefficient)
{
    if (alpha.size() != 2 * n_) {
        throw DimensionError("DeltaDistribution: multi-index must have length 2n");
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(alpha, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

DeltaDistribution operator+(const DeltaDistribution& a, const DeltaDistribution& b)
{
    if (a.n_ != b.n_) {
        throw DimensionError("DeltaDistribution: n mismatch");
    }
    DeltaDistribution out = a;
    for (const auto& [alpha, c] : b.terms_) {
        out.add_term(alpha, c);
    }
    return out;
}

DeltaDistribution operator-(const DeltaDistribution& a, const DeltaDistribution& b)
{
    return a + Rational(-1) * b;
}

DeltaDistribution operator*(const Rational& c, const DeltaDistribution& d)
{
    DeltaDistribution out(d.n_);
    for (const auto& [alpha, coefficient] : d.terms_) {
        out.add_term(alpha, c * coefficient);
    }
    return out;
}

DeltaDistribution box_apply(const DeltaDistribution& d)
{
    const std::size_t n = d.n();
    DeltaDistribution out(n);
    for (const auto& [alpha, c] : d.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            MultiIndex beta = alpha;
            ++beta[i];
            ++beta[n + i];
            out.add_term(beta, c);
        }
    }
    return out;
}

DeltaDistribution box_power_delta(std::size_t n, std::size_t k)
{
    DeltaDistribution d = DeltaDistribution::delta(n);
    for (std::size_t i = 0; i < k; ++i) {
        d = box_apply(d);
    }
    return d;
}

DeltaDistribution j_pushforward(const DeltaDistribution& d)
{
    const std::size_t n = d.n();
    DeltaDistribution out(n);
    for (const auto& [alpha, c] : d.terms()) {
        MultiIndex swapped(2 * n);
        unsigned order = 0;
        for (std::size_t i = 0; i < n; ++i) {
            swapped[i] = alpha[n + i];
            swapped[n + i] = alpha[i];
            order += alpha[i] + alpha[n + i];
        }
        out.add_term(swapped, order % 2 == 0 ? c : Rational(-c));
    }
    return out;
}

DeltaDistribution j_odd_part(const DeltaDistribution& d)
{
    return Rational(1, 2) * (d - j_pushforward(d));
}

IdentityReport verify_theorem4_parity(std::size_t k_max, std::size_t n, const SeedStream& stream,
                                      std::size_t combinations)
{
    std::vector<TrialOutcome> outcomes;
    std::vector<DeltaDistribution> powers;
    for (std::size_t k = 0; k <= k_max; ++k) {
        powers.push_back(box_power_delta(n, k));
        TrialOutcome o;
        if (!(j_pushforward(powers.back()) == powers.back())) {
            o.ok = false;
            o.witness = nlohmann::ordered_json{{"check", "j_* box^k delta != box^k delta"}, {"k", k}}.dump();
        }
        outcomes.push_back(o);
    }
    for (std::size_t t = 0; t < combinations; ++t) {
        SeedStream s = stream.derive(t);
        DeltaDistribution d(n);
        for (const auto& p : powers) {
            d = d + sample_rational(s, 9) * p;
        }
        TrialOutcome o;
        if (!j_odd_part(d).is_zero()) {
            o.ok = false;
            o.witness = nlohmann::ordered_json{{"check", "j-odd part of a span element is nonzero"},
                                               {"distribution", delta_to_json(d)}}
                            .dump();
        }
        outcomes.push_back(o);
    }
    return collect("theorem4-parity", outcomes);
}

}  // namespace orbitkit
