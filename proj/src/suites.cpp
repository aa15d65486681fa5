#include "orbitkit/suites.hpp"

#include "orbitkit/errors.hpp"
#include "orbitkit/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace orbitkit {

namespace {

std::vector<std::size_t> n_values(const SuiteConfig& c, std::vector<std::size_t> defaults)
{
    if (c.n) {
        return {*c.n};
    }
    return defaults;
}

std::size_t trial_count(const SuiteConfig& c, std::size_t fallback) { return c.trials.value_or(fallback); }

/// Runs `trials` independent checks on derived streams; returns the failure count and the
/// lowest failing trial index.
struct Tally {
    std::size_t failures = 0;
    std::optional<std::size_t> first_failure;
    std::optional<std::string> first_message;
};

Tally run_trials(std::size_t trials, const SeedStream& stream, const std::function<bool(SeedStream&)>& check)
{
    std::vector<char> ok(trials, 1);
    std::vector<std::string> messages(trials);
    parallel_for(trials, [&](std::size_t i) {
        SeedStream s = stream.derive(i);
        try {
            ok[i] = check(s) ? 1 : 0;
        } catch (const Error& e) {
            ok[i] = 0;
            messages[i] = e.what();
        }
    });
    Tally t;
    for (std::size_t i = 0; i < trials; ++i) {
        if (!ok[i]) {
            if (!t.first_failure) {
                t.first_failure = i;
                if (!messages[i].empty()) {
                    t.first_message = messages[i];
                }
            }
            ++t.failures;
        }
    }
    return t;
}

void put_tally(Json& j, std::size_t trials, const Tally& t)
{
    j["trials"] = trials;
    j["failures"] = t.failures;
    if (t.first_failure) {
        j["first_failure_trial"] = *t.first_failure;
    }
    if (t.first_message) {
        j["first_failure_error"] = *t.first_message;
    }
}

std::uint64_t salt(const std::string& name)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : name) {
        h = (h ^ ch) * 1099511628211ULL;
    }
    return h;
}

SeedStream suite_stream(const SuiteConfig& c, const std::string& name, std::uint64_t index = 0)
{
    return SeedStream(c.seed ^ salt(name), index);
}

/// Random vector of R^m, used to check that a linear map preserves a quadratic form off X1.
RatVector random_rational_vector(std::size_t m, SeedStream& s)
{
    RatVector v;
    for (std::size_t i = 0; i < m; ++i) {
        v.push_back(sample_rational(s, 5));
    }
    return v;
}

// actions --------------------------------------------------------------------------------

SuiteResult actions_suite(const SuiteConfig& c)
{
    const std::size_t trials = trial_count(c, 500);
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {2, 3})) {
        for (GroupKind kind : kAllGroupKinds) {
            const GroupTag tag{kind, n};
            const bool preserves_Q = kind != GroupKind::BigG && kind != GroupKind::TildeG &&
                                     kind != GroupKind::ScalingTorus && kind != GroupKind::H;
            const bool preserves_q = kind == GroupKind::H1 || kind == GroupKind::TildeH;
            const Tally t = run_trials(trials, suite_stream(c, "actions", idx++), [&](SeedStream& s) {
                const GroupElement g1 = sample_element(tag, s);
                const GroupElement g2 = sample_element(tag, s);
                const PointX1 p = sample_stratified_point(n, s);
                // PointX1::make inside act rejects any image off X1.
                const PointX1 image = act(g1, p);
                if (!is_member(tag, g1.components())) {
                    return false;
                }
                if (!(act(g1 * g2, p) == act(g1, act(g2, p)))) {
                    return false;
                }
                if (preserves_Q && invariant_Q(image) != invariant_Q(p)) {
                    return false;
                }
                if (preserves_q && invariant_q(image) != invariant_q(p)) {
                    return false;
                }
                if (kind == GroupKind::TildeH || kind == GroupKind::TildeG) {
                    const RatMatrix& m = g1.matrix();
                    const RatMatrix form = split_form(m.rows() / 2);
                    const RatVector v = random_rational_vector(m.rows(), s);
                    const RatVector w = m * v;
                    if (dot(w, form * w) != dot(v, form * v)) {
                        return false;
                    }
                }
                return true;
            });
            Json row{{"tag", kind_name(kind)}, {"n", n}};
            put_tally(row, trials, t);
            rows.push_back(row);
            total += t.failures;
        }
    }
    return {"actions", total == 0, Json{{"suite", "actions"}, {"checks", rows}, {"failures", total}}};
}

// classifier -----------------------------------------------------------------------------

SuiteResult classifier_suite(const SuiteConfig& c)
{
    const std::size_t trials = trial_count(c, 1000);
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {2, 3, 4})) {
        for (GroupCase gc : kAllGroupCases) {
            const GroupTag tag = acting_group(gc, n);
            const Tally t = run_trials(trials, suite_stream(c, "classifier", idx++), [&](SeedStream& s) {
                const PointX1 p = sample_stratified_point(n, s);
                const GroupElement g = sample_element(tag, s);
                return classify(gc, act(g, p)) == classify(gc, p);
            });
            Json row{{"case", case_name(gc)}, {"group", kind_name(tag.kind)}, {"n", n}};
            put_tally(row, trials, t);
            rows.push_back(row);
            total += t.failures;
        }
        // The two-sided H action on SL(n+1) viewed on X1: left H (via SL(n+1)) times the torus.
        const GroupTag two_sided{GroupKind::HTimesTorus, n};
        const Tally t = run_trials(trials, suite_stream(c, "classifier", idx++), [&](SeedStream& s) {
            const PointX1 p = sample_stratified_point(n, s);
            const GroupElement g = sample_element(two_sided, s);
            return classify(GroupCase::H, act(g, p)) == classify(GroupCase::H, p);
        });
        Json row{{"case", case_name(GroupCase::H)}, {"group", kind_name(two_sided.kind)}, {"n", n}};
        put_tally(row, trials, t);
        rows.push_back(row);
        total += t.failures;
    }
    return {"classifier", total == 0, Json{{"suite", "classifier"}, {"checks", rows}, {"failures", total}}};
}

// jcriterion -----------------------------------------------------------------------------

SuiteResult jcriterion_suite(const SuiteConfig& c)
{
    const std::size_t trials = trial_count(c, 500);
    Json rows = Json::array();
    std::size_t total = 0;
    bool swap_seen_everywhere = true;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {2, 3})) {
        for (GroupCase gc : {GroupCase::H, GroupCase::TildeHTorus}) {
            std::vector<int> ok(trials, 1);
            std::vector<int> x_to_y(trials, 0);
            std::vector<int> y_to_x(trials, 0);
            const SeedStream base = suite_stream(c, "jcriterion", idx++);
            parallel_for(trials, [&](std::size_t i) {
                SeedStream s = base.derive(i);
                const PointX1 p = s.coin() ? sample_fiber_point(BigQFiber{0}, n, s) : sample_stratified_point(n, s);
                const OrbitLabel before = classify(gc, p);
                const OrbitLabel after = classify(gc, j_map(p));
                ok[i] = after == j_label_transport(gc, before) ? 1 : 0;
                x_to_y[i] = before.stratum.kind == StratumKind::XZero && after.stratum.kind == StratumKind::YZero;
                y_to_x[i] = before.stratum.kind == StratumKind::YZero && after.stratum.kind == StratumKind::XZero;
            });
            const auto failures = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
            const auto xy = static_cast<std::size_t>(std::count(x_to_y.begin(), x_to_y.end(), 1));
            const auto yx = static_cast<std::size_t>(std::count(y_to_x.begin(), y_to_x.end(), 1));
            if (gc == GroupCase::H && (xy == 0 || yx == 0)) {
                swap_seen_everywhere = false;
            }
            rows.push_back(Json{{"case", case_name(gc)},
                                {"n", n},
                                {"trials", trials},
                                {"failures", failures},
                                {"xzero_to_yzero", xy},
                                {"yzero_to_xzero", yx}});
            total += failures;
        }
    }
    return {"jcriterion", total == 0 && swap_seen_everywhere,
            Json{{"suite", "jcriterion"}, {"checks", rows}, {"failures", total}, {"swap_observed", swap_seen_everywhere}}};
}

// census ---------------------------------------------------------------------------------

struct CensusSpec {
    GroupCase gc;
    std::size_t n;
    FiberSpec fiber;
    std::size_t expected;
    bool continuum;
};

SuiteResult census_suite(const SuiteConfig& c)
{
    const std::size_t samples = trial_count(c, 1000);
    const std::vector<CensusSpec> specs = {
        {GroupCase::H1, 3, QFiber{1, 1}, 4, false},
        {GroupCase::H1, 2, QFiber{1, 1}, 4, true},
        {GroupCase::GLplus, 2, QFiber{1, 1}, 5, false},
        {GroupCase::GLplus, 3, QFiber{1, 1}, 4, false},
        {GroupCase::TildeH, 3, QFiber{1, 1}, 2, false},
        {GroupCase::TildeH, 3, QFiber{2, 3}, 1, false},
        {GroupCase::H, 3, BigQFiber{1}, 5, false},
        {GroupCase::H, 2, BigQFiber{1}, 5, false},
        {GroupCase::H, 3, BigQFiber{0}, 8, false},
        {GroupCase::H, 2, BigQFiber{0}, 10, false},
        {GroupCase::H, 3, BigQFiber{3}, 2, false},
        {GroupCase::TildeHTorus, 3, BigQFiber{0}, 4, false},
        {GroupCase::TildeHTorus, 2, BigQFiber{0}, 4, false},
    };
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (const auto& spec : specs) {
        const SeedStream stream = suite_stream(c, "census", idx++);
        if (c.n && spec.n != *c.n) {
            continue;
        }
        const CensusReport r = fiber_census(spec.gc, spec.fiber, spec.n, samples, stream);
        const bool ok = r.distinct == spec.expected && r.continuum == spec.continuum;
        Json row = census_to_json(r);
        row["expected"] = spec.expected;
        row["passed"] = ok;
        rows.push_back(row);
        total += ok ? 0 : 1;
    }
    return {"census", total == 0, Json{{"suite", "census"}, {"censuses", rows}, {"failures", total}}};
}

// lemma3 ---------------------------------------------------------------------------------

SuiteResult lemma3_suite(const SuiteConfig& c)
{
    const std::size_t trials = trial_count(c, 500);
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {2, 3, 4})) {
        for (LemmaChart chart : {LemmaChart::A, LemmaChart::B}) {
            const IdentityReport r = verify_lemma3(chart, n, trials, suite_stream(c, "lemma3", idx++));
            Json row = identity_report_to_json(r);
            row["n"] = n;
            rows.push_back(row);
            total += r.failures;
        }
    }
    return {"lemma3", total == 0, Json{{"suite", "lemma3"}, {"checks", rows}, {"failures", total}}};
}

// delta ----------------------------------------------------------------------------------

SuiteResult delta_suite(const SuiteConfig& c)
{
    constexpr std::size_t k_max = 5;
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {2, 3, 4})) {
        const IdentityReport parity = verify_theorem4_parity(k_max, n, suite_stream(c, "delta", idx++));
        Json row = identity_report_to_json(parity);
        row["n"] = n;
        row["k_max"] = k_max;
        // j_* is an involution and commutes with box on every box^k delta and on
        // an odd-order test distribution.
        std::size_t algebra_failures = 0;
        DeltaDistribution odd(n);
        MultiIndex a(2 * n, 0);
        a[0] = 1;
        odd.add_term(a, 1);
        std::vector<DeltaDistribution> probes{odd};
        for (std::size_t k = 0; k <= k_max; ++k) {
            probes.push_back(box_power_delta(n, k));
        }
        for (const auto& d : probes) {
            if (!(j_pushforward(j_pushforward(d)) == d) || !(j_pushforward(box_apply(d)) == box_apply(j_pushforward(d)))) {
                ++algebra_failures;
            }
        }
        row["algebra_failures"] = algebra_failures;
        rows.push_back(row);
        total += parity.failures + algebra_failures;
    }
    return {"delta", total == 0, Json{{"suite", "delta"}, {"checks", rows}, {"failures", total}}};
}

// rankmap --------------------------------------------------------------------------------

/// Expected signature for general n: generic level sets and the punctured cone have dimension
/// 2n - 1 for both algebras; the gl(n) orbit of (0, y') or (x', 0) has dimension n.
std::map<std::string, std::array<std::size_t, 3>> expected_rank_table(std::size_t n)
{
    if (n == 3) {
        std::map<std::string, std::array<std::size_t, 3>> t;
        for (const auto& sig : kRankOracleN3) {
            t[sig.stratum] = {sig.rank_gl, sig.rank_so, sig.rank_union};
        }
        return t;
    }
    const std::size_t full = 2 * n - 1;
    return {{"Generic", {full, full, full}},
            {"Cone", {full, full, full}},
            {"XZero", {n, full, full}},
            {"YZero", {n, full, full}},
            {"Origin", {0, 0, 0}}};
}

SuiteResult rankmap_suite(const SuiteConfig& c)
{
    const std::size_t samples = trial_count(c, 100);
    Json tables = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {3})) {
        const RankTable table = rank_map(n, samples, suite_stream(c, "rankmap", idx++));
        const auto expected = expected_rank_table(n);
        Json j = rank_table_to_json(table);
        std::size_t mismatches = 0;
        for (const auto& row : table.strata) {
            const auto& e = expected.at(row.name);
            if (!row.constant || row.rank_gl != e[0] || row.rank_so != e[1] || row.rank_union != e[2]) {
                ++mismatches;
            }
        }
        j["mismatches"] = mismatches;
        tables.push_back(j);
        total += mismatches;
    }
    return {"rankmap", total == 0, Json{{"suite", "rankmap"}, {"tables", tables}, {"failures", total}}};
}

// residuals ------------------------------------------------------------------------------

std::vector<double> random_float_point(std::size_t n, SeedStream& s)
{
    for (;;) {
        std::vector<double> x(n + 1);
        std::vector<double> y(n + 1);
        for (auto& v : x) {
            v = s.uniform_real(-2, 2);
        }
        for (auto& v : y) {
            v = s.uniform_real(-2, 2);
        }
        double pairing = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            pairing += x[i] * y[i];
        }
        if (std::abs(pairing) < 0.5 || std::abs(x[0]) < 0.1) {
            continue;
        }
        std::vector<double> p(2 * n + 2);
        for (std::size_t i = 0; i <= n; ++i) {
            p[i] = x[i];
            p[n + 1 + i] = y[i] / pairing;
        }
        return p;
    }
}

SuiteResult residuals_suite(const SuiteConfig& c)
{
    const std::size_t points = trial_count(c, 100);
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {3})) {
        // Coordinates (x1, x', y1, y'): x1 at 0, y1 at n + 1.
        const ScalarField q_product = [n](std::span<const double> p) { return 1 - p[0] * p[n + 1]; };
        const ScalarField q_pairing = [n](std::span<const double> p) {
            double s = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                s += p[i] * p[n + 1 + i];
            }
            return s;
        };
        const ScalarField x1 = [](std::span<const double> p) { return p[0]; };
        const ScalarField y1 = [n](std::span<const double> p) { return p[n + 1]; };

        struct Check {
            const char* function;
            const ScalarField* f;
            GroupKind group;
            bool invariant;
        };
        const std::vector<Check> checks = {
            {"1-x1*y1", &q_product, GroupKind::GLplusTimesTorus, true},
            {"<x',y'>", &q_pairing, GroupKind::GLplusTimesTorus, true},
            {"x1", &x1, GroupKind::H1, true},
            {"y1", &y1, GroupKind::H1, true},
            {"x1", &x1, GroupKind::TildeH, true},
            {"y1", &y1, GroupKind::TildeH, true},
            {"x1", &x1, GroupKind::GLplusTimesTorus, false},
        };
        for (const auto& check : checks) {
            const GroupTag tag{check.group, n};
            std::vector<double> residual(points);
            std::vector<double> scale(points);
            const SeedStream base = suite_stream(c, "residuals", idx++);
            parallel_for(points, [&](std::size_t i) {
                SeedStream s = base.derive(i);
                const std::vector<double> p = random_float_point(n, s);
                residual[i] = invariance_residual(*check.f, p, tag, kResidualStep);
                scale[i] = std::max(1.0, std::abs((*check.f)(p)));
            });
            std::size_t failures = 0;
            double worst = 0;
            double weakest = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < points; ++i) {
                worst = std::max(worst, residual[i]);
                weakest = std::min(weakest, residual[i]);
                const bool ok = check.invariant ? residual[i] < kResidualTolerance * scale[i]
                                                : residual[i] > kWitnessThreshold;
                failures += ok ? 0 : 1;
            }
            rows.push_back(Json{{"function", check.function},
                                {"group", kind_name(check.group)},
                                {"n", n},
                                {"expect", check.invariant ? "invariant" : "moved"},
                                {"points", points},
                                {"max_residual", worst},
                                {"min_residual", weakest},
                                {"failures", failures}});
            total += failures;
        }
    }
    return {"residuals", total == 0,
            Json{{"suite", "residuals"},
                 {"step", kResidualStep},
                 {"tolerance", kResidualTolerance},
                 {"witness_threshold", kWitnessThreshold},
                 {"checks", rows},
                 {"failures", total}}};
}

// coneparam ------------------------------------------------------------------------------

PointX1 cone_point(const Rational& s_param, SeedStream& s)
{
    const Rational x1 = sample_nonzero_rational(s, 5);
    RatVector x{sample_rational(s, 5), sample_rational(s, 5)};
    if (is_zero(x)) {
        x[0] = 1;
    }
    RatVector y{-s_param * x[1], s_param * x[0]};
    return PointX1::make(2, x1, x, 1 / x1, y);
}

SuiteResult coneparam_suite(const SuiteConfig& c)
{
    const std::size_t trials = trial_count(c, 500);
    const GroupTag sl2{GroupKind::H1, 2};
    const Tally invariance = run_trials(trials, suite_stream(c, "coneparam", 0), [&](SeedStream& s) {
        const Rational param = sample_nonzero_rational(s, 7);
        const PointX1 p = cone_point(param, s);
        const GroupElement h = sample_element(sl2, s);
        return cone_parameter(p) == param && cone_parameter(act(h, p)) == param;
    });
    const Tally separation = run_trials(trials, suite_stream(c, "coneparam", 1), [&](SeedStream& s) {
        const Rational a = sample_nonzero_rational(s, 7);
        Rational b = sample_nonzero_rational(s, 7);
        while (b == a) {
            b = sample_nonzero_rational(s, 7);
        }
        const PointX1 p = cone_point(a, s);
        const PointX1 q = cone_point(b, s);
        // Same q-fiber, different parameter: different orbits.
        const PointX1 q_same_fiber = PointX1::make(2, p.x1(), q.x_prime(), p.y1(), q.y_prime());
        return !same_orbit(GroupCase::H1, p, q_same_fiber);
    });
    Json inv{{"check", "s(h.p) == s(p)"}};
    put_tally(inv, trials, invariance);
    Json sep{{"check", "distinct s give distinct labels"}};
    put_tally(sep, trials, separation);
    const std::size_t total = invariance.failures + separation.failures;
    return {"coneparam", total == 0,
            Json{{"suite", "coneparam"}, {"checks", Json::array({inv, sep})}, {"failures", total}}};
}

// charts ---------------------------------------------------------------------------------

SuiteResult charts_suite(const SuiteConfig& c)
{
    const std::size_t trials = trial_count(c, 500);
    Json rows = Json::array();
    std::size_t total = 0;
    std::uint64_t idx = 0;
    for (std::size_t n : n_values(c, {2, 3, 4})) {
        const Tally t = run_trials(trials, suite_stream(c, "charts", idx++), [&](SeedStream& s) {
            const PointX1 p = sample_stratified_point(n, s);
            const PointX1 jp = j_map(p);
            if (!(j_map(jp) == p) || invariant_q(jp) != invariant_q(p) || invariant_Q(jp) != invariant_Q(p)) {
                return false;
            }
            if (p.x1() != 0 && !(chart_a_inverse(chart_a(p)) == p)) {
                return false;
            }
            if (p.y1() != 0 && !(chart_a_dual_inverse(chart_a_dual(p)) == p)) {
                return false;
            }
            if (p.x1() * p.y1() < 1) {
                const ChartB b = chart_b(p);
                if (dot(b.xi, b.eta) != 1 || !(chart_b_inverse(b) == p)) {
                    return false;
                }
            }
            return true;
        });
        Json row{{"n", n}};
        put_tally(row, trials, t);
        rows.push_back(row);
        total += t.failures;
    }
    return {"charts", total == 0, Json{{"suite", "charts"}, {"checks", rows}, {"failures", total}}};
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"actions", actions_suite},     {"classifier", classifier_suite}, {"jcriterion", jcriterion_suite},
        {"census", census_suite},       {"lemma3", lemma3_suite},         {"delta", delta_suite},
        {"rankmap", rankmap_suite},     {"residuals", residuals_suite},   {"coneparam", coneparam_suite},
        {"charts", charts_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config)
{
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            SuiteResult r = fn(config);
            r.report["passed"] = r.passed;
            return r;
        }
    }
    throw Unsupported("unknown suite '" + name + "'");
}

}  // namespace orbitkit
