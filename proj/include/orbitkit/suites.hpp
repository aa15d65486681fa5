#pragma once

// Seeded verification suites. Each suite returns a JSON report and a pass flag; reports
// contain no timings so reruns with the same seed are byte-identical.
//
//   actions     pairing preservation, form preservation, composition law for every tag
//   classifier  classify(g.p) == classify(p) for all five cases, n in {2,3,4}
//   jcriterion  label transport under j for the Q-cases; XZero <-> YZero swap observed
//   census      orbit counts per fiber
//   lemma3      section / cocycle identity for both charts
//   delta       j-parity of box^k delta and related symbolic identities
//   rankmap     tangent-span rank table against the frozen oracle
//   residuals   finite-difference invariance residuals
//   coneparam   the n = 2 cone parameter is an SL(2) invariant that separates orbits
//   charts      chart round trips and j invariants

#include "orbitkit/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitkit {

struct SuiteConfig {
    std::uint64_t seed = 0;
    /// Restrict n-parametrized suites to one n; each suite has its own default set.
    std::optional<std::size_t> n;
    /// Override the per-check trial or sample count.
    std::optional<std::size_t> trials;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    Json report;
};

const std::vector<std::string>& suite_names();

/// Throws Unsupported for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

/// Frozen rank signature (rank_gl, rank_so, rank_union) per stratum for n = 3.
struct RankSignature {
    const char* stratum;
    std::size_t rank_gl;
    std::size_t rank_so;
    std::size_t rank_union;
};
inline constexpr RankSignature kRankOracleN3[] = {
    {"Generic", 5, 5, 5}, {"Cone", 5, 5, 5}, {"XZero", 3, 5, 5}, {"YZero", 3, 5, 5}, {"Origin", 0, 0, 0},
};

/// Pinned thresholds for the residual suite.
inline constexpr double kResidualStep = 1e-5;
inline constexpr double kResidualTolerance = 1e-9;
inline constexpr double kWitnessThreshold = 1e-3;

}  // namespace orbitkit
