#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neurideal/field.hpp"
#include "neurideal/ideal.hpp"
#include "neurideal/structure.hpp"

namespace neurideal {

enum class VerifyMode { Exhaustive, Sample };

/// Which ideals the harness draws from.
enum class Universe {
    DegreeN,  ///< nonempty subsets of the 2^n degree-n pair-excluding monomials
    All,      ///< every polarized neural ideal (all antichains)
};

struct VerifyOptions {
    int n = 2;
    VerifyMode mode = VerifyMode::Exhaustive;
    Universe universe = Universe::DegreeN;
    std::uint64_t seed = 1;
    std::size_t count = 500;
    Field field = Field::F2;
    PivotRule pivot = PivotRule::Last;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Recompute every table over the other field and compare (informational).
    bool compare_fields = false;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;
    /// Informational suites report findings but never fail the run.
    bool informational = false;
    double seconds = 0.0;
};

struct Counterexample {
    std::string suite;
    std::string ideal;
    std::string detail;
};

struct VerificationReport {
    VerifyOptions options;
    std::size_t ideals = 0;
    std::vector<SuiteResult> suites;
    std::vector<Counterexample> counterexamples;
    /// Notes from informational suites (field differences, LR-without-LQ witnesses).
    std::vector<Counterexample> findings;
    std::vector<std::pair<std::string, double>> phase_seconds;

    bool ok() const noexcept { return counterexamples.empty(); }
};

/// Exhaustive mode supports 1 <= n <= 3; sample mode draws `count` ideals for
/// 1 <= n <= 5 from a PRNG seeded with `seed`. Throws OutOfRange otherwise.
VerificationReport run_verification(const VerifyOptions& options);

/// Runs every suite over caller-supplied ideals.
VerificationReport verify_ideals(const std::vector<PolarizedNeuralIdeal>& ideals, const VerifyOptions& options);

std::string report_text(const VerificationReport& report);
/// Deterministic for a fixed seed unless `with_timings` is set.
std::string report_json(const VerificationReport& report, bool with_timings = false);

}  // namespace neurideal
