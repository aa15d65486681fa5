// orbitkit command-line front end.
//
// Machine-readable JSON goes to stdout (or --out); a short human summary goes to stderr.
// Exit codes: 0 success / all checks passed, 1 a verification failed, 2 usage or input error.

#include "orbitkit/errors.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/suites.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using orbitkit::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string group_case;
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::size_t> trials;
    std::string fiber;
    std::vector<std::string> points;
    std::string label;
    std::vector<std::string> suites;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, const Options& o)
{
    const std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open output file '" + o.out + "'");
    }
    f << text;
}

std::size_t require_n(const Options& o)
{
    if (!o.n) {
        throw UsageError("--n is required");
    }
    return *o.n;
}

std::uint64_t require_seed(const Options& o)
{
    if (!o.seed) {
        throw UsageError("--seed is required for this command");
    }
    return *o.seed;
}

orbitkit::GroupCase require_case(const Options& o)
{
    if (o.group_case.empty()) {
        throw UsageError("--case is required");
    }
    return orbitkit::parse_case_name(o.group_case);
}

orbitkit::PointX1 point_arg(const Options& o, std::size_t i)
{
    orbitkit::PointX1 p = orbitkit::parse_point(o.points.at(i));
    if (o.n && *o.n != p.n()) {
        throw UsageError("--n " + std::to_string(*o.n) + " does not match the point's n = " + std::to_string(p.n()));
    }
    return p;
}

int cmd_classify(const Options& o)
{
    if (o.points.size() != 1) {
        throw UsageError("classify takes exactly one --point");
    }
    const auto gc = require_case(o);
    const orbitkit::PointX1 p = point_arg(o, 0);
    const auto label = orbitkit::classify(gc, p);
    emit(Json{{"label", orbitkit::label_to_json(label)}}, o);
    std::cerr << "classify: stratum " << orbitkit::stratum_name(label.stratum.kind) << "\n";
    return kExitOk;
}

int cmd_same_orbit(const Options& o)
{
    if (o.points.size() != 2) {
        throw UsageError("same-orbit takes exactly two --point arguments");
    }
    const auto gc = require_case(o);
    const orbitkit::PointX1 p = point_arg(o, 0);
    const orbitkit::PointX1 q = point_arg(o, 1);
    if (p.n() != q.n()) {
        throw UsageError("same-orbit: points have different n");
    }
    const auto lp = orbitkit::classify(gc, p);
    const auto lq = orbitkit::classify(gc, q);
    emit(Json{{"same_orbit", lp == lq},
              {"labels", Json::array({orbitkit::label_to_json(lp), orbitkit::label_to_json(lq)})}},
         o);
    std::cerr << "same-orbit: " << (lp == lq ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_census(const Options& o)
{
    const auto gc = require_case(o);
    const std::size_t n = require_n(o);
    const std::uint64_t seed = require_seed(o);
    if (o.fiber.empty()) {
        throw UsageError("--fiber is required (q=X1,Y1 or Q=T)");
    }
    const auto fiber = orbitkit::parse_fiber(o.fiber);
    const std::size_t samples = o.samples.value_or(1000);
    const auto report = orbitkit::fiber_census(gc, fiber, n, samples, orbitkit::SeedStream(seed, 0));
    emit(orbitkit::census_to_json(report), o);
    std::cerr << "census: " << report.distinct << " distinct labels" << (report.continuum ? " (continuum family)" : "")
              << " over " << samples << " samples\n";
    return kExitOk;
}

int cmd_rank_map(const Options& o)
{
    const std::size_t n = require_n(o);
    const std::uint64_t seed = require_seed(o);
    const auto table = orbitkit::rank_map(n, o.samples.value_or(100), orbitkit::SeedStream(seed, 0));
    emit(orbitkit::rank_table_to_json(table), o);
    for (const auto& row : table.strata) {
        std::cerr << row.name << ": (" << row.rank_gl << ", " << row.rank_so << ", " << row.rank_union << ")"
                  << (row.constant ? "" : " NOT CONSTANT") << "\n";
    }
    return kExitOk;
}

int cmd_representative(const Options& o)
{
    const std::size_t n = require_n(o);
    if (o.label.empty()) {
        throw UsageError("--label is required");
    }
    Json j;
    try {
        j = Json::parse(o.label);
    } catch (const nlohmann::json::exception& e) {
        throw orbitkit::ParseError(std::string("malformed label JSON: ") + e.what());
    }
    if (!o.group_case.empty()) {
        j["case"] = orbitkit::case_name(orbitkit::parse_case_name(o.group_case));
    }
    const auto label = orbitkit::label_from_json(j, n);
    emit(Json{{"point", orbitkit::point_to_json(orbitkit::representative(label))}}, o);
    return kExitOk;
}

int cmd_verify(const Options& o)
{
    orbitkit::SuiteConfig config;
    config.seed = require_seed(o);
    config.n = o.n;
    config.trials = o.trials ? o.trials : o.samples;
    std::vector<std::string> names;
    for (const auto& s : o.suites) {
        if (s == "all") {
            names = orbitkit::suite_names();
            break;
        }
        names.push_back(s);
    }
    if (names.empty()) {
        throw UsageError("--suite is required");
    }
    Json suites = Json::array();
    std::size_t failed_suites = 0;
    std::size_t failures = 0;
    for (const auto& name : names) {
        const auto r = orbitkit::run_suite(name, config);
        std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << name << "\n";
        failed_suites += r.passed ? 0 : 1;
        failures += r.report.value("failures", std::size_t{0});
        Json entry{{"name", name}};
        entry.update(r.report);
        suites.push_back(entry);
    }
    Json out{{"command", "verify"},
             {"seed", config.seed},
             {"suites", suites},
             {"failures", failures},
             {"passed", failed_suites == 0}};
    emit(out, o);
    return failed_suites == 0 ? kExitOk : kExitFailed;
}

Json error_json(const std::string& kind, const std::string& message)
{
    return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"orbitkit: orbit classification and exact identity checks on X1"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--out", o.out, "Write JSON to this path instead of stdout");
    };
    const std::vector<std::string> suite_choices = [] {
        auto v = orbitkit::suite_names();
        v.push_back("all");
        return v;
    }();

    auto* classify = app.add_subcommand("classify", "Classify a point");
    classify->add_option("--case", o.group_case, "h1|glplus|htilde|h|htilde-torus")->required();
    classify->add_option("--n", o.n, "Dimension parameter n (>= 2)")->check(CLI::Range(2, 64));
    classify->add_option("--point", o.points, "Point JSON")->required();
    add_common(classify);

    auto* same = app.add_subcommand("same-orbit", "Decide whether two points share an orbit");
    same->add_option("--case", o.group_case)->required();
    same->add_option("--n", o.n)->check(CLI::Range(2, 64));
    same->add_option("--point", o.points, "Point JSON (give twice)")->required();
    add_common(same);

    auto* census = app.add_subcommand("census", "Sample a fiber and count orbit labels");
    census->add_option("--case", o.group_case)->required();
    census->add_option("--n", o.n)->required()->check(CLI::Range(2, 64));
    census->add_option("--fiber", o.fiber, "q=X1,Y1 or Q=T")->required();
    census->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    census->add_option("--seed", o.seed)->required();
    add_common(census);

    auto* rank = app.add_subcommand("rank-map", "Tangent-span rank signature per stratum");
    rank->add_option("--n", o.n)->required()->check(CLI::Range(2, 64));
    rank->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    rank->add_option("--seed", o.seed)->required();
    add_common(rank);

    auto* rep = app.add_subcommand("representative", "Canonical point of an orbit label");
    rep->add_option("--case", o.group_case);
    rep->add_option("--n", o.n)->required()->check(CLI::Range(2, 64));
    rep->add_option("--label", o.label, "Label JSON")->required();
    add_common(rep);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suites, "Suite name(s) or 'all'")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(suite_choices));
    verify->add_option("--n", o.n)->check(CLI::Range(2, 64));
    verify->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
    verify->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed)->required();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify) {
            return cmd_classify(o);
        }
        if (*same) {
            return cmd_same_orbit(o);
        }
        if (*census) {
            return cmd_census(o);
        }
        if (*rank) {
            return cmd_rank_map(o);
        }
        if (*rep) {
            return cmd_representative(o);
        }
        if (*verify) {
            return cmd_verify(o);
        }
    } catch (const orbitkit::ConstraintViolated& e) {
        Json j = error_json("constraint_violated", e.what());
        j["pairing"] = e.pairing();
        std::cout << j.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const orbitkit::Error& e) {
        std::cout << error_json("invalid_input", e.what()).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
