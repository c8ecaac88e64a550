#include "neurideal/verify.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "neurideal/betti.hpp"
#include "neurideal/enumerate.hpp"
#include "neurideal/text_format.hpp"

namespace neurideal {

namespace {

using Clock = std::chrono::steady_clock;

enum Suite : std::size_t {
    kEuler,
    kMingens,
    kRegLowerBound,
    kLcmRegBound,
    kPdRegBounds,
    kDegreeNBounds,
    kRecursiveAgreement,
    kPivotIndependence,
    kRefinedAgreement,
    kLqImpliesLr,
    kRestrictionClosure,
    kBettiSplitting,
    kScalingContract,
    kDominantFormulas,
    kFieldAgreement,
    kLrWithoutLq,
    kSuiteCount,
};

struct SuiteInfo {
    const char* name;
    bool informational;
};

constexpr std::array<SuiteInfo, kSuiteCount> kSuites{{
    {"euler_identity", false},
    {"mingens_recovery", false},
    {"reg_lower_bound", false},
    {"lcm_reg_upper_bound", false},
    {"pd_reg_bounds", false},
    {"degree_n_bounds", false},
    {"lr_lq_recursive_agreement", false},
    {"pivot_independence", false},
    {"refined_recursive_agreement", false},
    {"lq_implies_lr", false},
    {"restriction_closure", false},
    {"betti_splitting", false},
    {"scaling_contract", false},
    {"dominant_formulas", false},
    {"field_agreement", true},
    {"lr_without_lq", true},
}};

enum class Status { NotApplicable, Pass, Fail };

struct Outcome {
    std::array<Status, kSuiteCount> status{};
    std::array<double, kSuiteCount> seconds{};
    std::vector<Counterexample> failures;
    std::vector<Counterexample> findings;
};

// A check returns nullopt when it does not apply, otherwise pass/fail plus a
// detail line used only on failure.
struct Verdict {
    bool ok;
    std::string detail;
};
using Check = std::function<std::optional<Verdict>()>;

std::string one_line(const MonomialIdeal& ideal) {
    std::string out;
    for (const auto& g : ideal.gens()) {
        if (!out.empty()) out += ", ";
        out += to_string(g);
    }
    return "(" + out + ")";
}

std::string describe(Invariants inv) {
    return "pd " + std::to_string(inv.pd) + ", reg " + std::to_string(inv.reg);
}

Field other(Field f) { return f == Field::F2 ? Field::Rationals : Field::F2; }

Outcome check_ideal(const PolarizedNeuralIdeal& polarized, const VerifyOptions& options) {
    Outcome out;
    const MonomialIdeal& ideal = polarized.ideal();
    const int n = ideal.neurons();
    const Field f = options.field;
    const std::string label = one_line(ideal);

    auto run = [&](Suite s, const Check& check) {
        const auto start = Clock::now();
        std::optional<Verdict> verdict;
        try {
            verdict = check();
        } catch (const std::exception& e) {
            verdict = Verdict{false, std::string("exception: ") + e.what()};
        }
        out.seconds[s] = std::chrono::duration<double>(Clock::now() - start).count();
        if (!verdict) {
            out.status[s] = Status::NotApplicable;
            return;
        }
        out.status[s] = verdict->ok ? Status::Pass : Status::Fail;
        if (!verdict->ok) {
            auto& sink = kSuites[s].informational ? out.findings : out.failures;
            sink.push_back({kSuites[s].name, label, verdict->detail});
        }
    };

    BettiTable table(n, {});
    try {
        table = betti_table(ideal, f);
    } catch (const std::exception& e) {
        out.failures.push_back({"betti_table", label, e.what()});
        return out;
    }
    const Invariants inv{table.pd(), table.reg()};
    const auto degree = equigenerated_degree(ideal);
    const bool degree_n = degree && *degree == n;
    const bool lr = degree && inv.reg == *degree;
    std::optional<bool> lq;
    if (degree) lq = linear_quotients_search(ideal).has_value();

    run(kEuler, [&]() -> std::optional<Verdict> {
        const bool ok = euler_polynomial(table) == inclusion_exclusion_polynomial(ideal);
        return Verdict{ok, "alternating Betti sum differs from the lcm inclusion-exclusion polynomial"};
    });

    run(kMingens, [&]() -> std::optional<Verdict> {
        std::size_t row0 = 0;
        for (const auto& [key, rank] : table.fine())
            if (key.i == 0) row0 += rank;
        bool ok = row0 == ideal.size();
        for (const auto& g : ideal.gens()) ok = ok && table.at(0, g) == 1;
        return Verdict{ok, "beta_0 does not recover the minimal generators"};
    });

    run(kRegLowerBound, [&]() -> std::optional<Verdict> {
        return Verdict{inv.reg >= ideal.max_degree(),
                       "reg " + std::to_string(inv.reg) + " below max generator degree"};
    });

    run(kLcmRegBound, [&]() -> std::optional<Verdict> {
        const int bound = reg_upper_bound_lcm(ideal);
        return Verdict{inv.reg <= bound,
                       "reg " + std::to_string(inv.reg) + " exceeds lcm bound " + std::to_string(bound)};
    });

    run(kPdRegBounds, [&]() -> std::optional<Verdict> {
        const bool ok = inv.pd >= 0 && inv.pd <= 2 * n - 1 && inv.reg >= 1 && inv.reg <= 2 * n - 1;
        return Verdict{ok, describe(inv) + " outside [0, 2n-1] x [1, 2n-1]"};
    });

    run(kDegreeNBounds, [&]() -> std::optional<Verdict> {
        if (!degree_n) return std::nullopt;
        const bool ok = inv.pd <= n && inv.reg >= n && inv.reg <= 2 * n - 1;
        return Verdict{ok, describe(inv) + " outside pd <= n, n <= reg <= 2n-1"};
    });

    std::optional<bool> recursive;
    run(kRecursiveAgreement, [&]() -> std::optional<Verdict> {
        if (!degree_n) return std::nullopt;
        recursive = recursive_linear_check(polarized, options.pivot);
        const bool ok = *recursive == lr && lr == *lq;
        return Verdict{ok, "recursive " + std::to_string(*recursive) + ", oracle LR " + std::to_string(lr) +
                               ", LQ search " + std::to_string(*lq)};
    });

    run(kPivotIndependence, [&]() -> std::optional<Verdict> {
        if (!degree_n) return std::nullopt;
        const bool last = recursive_linear_check(polarized, PivotRule::Last);
        const bool smallest = recursive_linear_check(polarized, PivotRule::Smallest);
        return Verdict{last == smallest, "pivot rules disagree"};
    });

    run(kRefinedAgreement, [&]() -> std::optional<Verdict> {
        if (!degree_n) return std::nullopt;
        const bool last = refined_linear_check(polarized, PivotRule::Last);
        const bool smallest = refined_linear_check(polarized, PivotRule::Smallest);
        return Verdict{last == lr && smallest == lr, "refined check " + std::to_string(last) + "/" +
                                                         std::to_string(smallest) + ", oracle LR " +
                                                         std::to_string(lr)};
    });

    run(kLqImpliesLr, [&]() -> std::optional<Verdict> {
        if (!lq || !*lq) return std::nullopt;
        return Verdict{lr, "linear quotients found but reg " + std::to_string(inv.reg) + " != degree"};
    });

    run(kRestrictionClosure, [&]() -> std::optional<Verdict> {
        const bool has_lq = lq && *lq;
        if (!lr && !has_lq) return std::nullopt;
        for (const auto& m : lcm_closure(ideal)) {
            const MonomialIdeal sub = restrict_to(ideal, m);
            if (lr && !has_linear_resolution(sub, f)) {
                return Verdict{false, "restriction to " + to_string(m) + " loses linear resolution"};
            }
            if (has_lq && !linear_quotients_search(sub)) {
                return Verdict{false, "restriction to " + to_string(m) + " loses linear quotients"};
            }
        }
        return Verdict{true, {}};
    });

    run(kBettiSplitting, [&]() -> std::optional<Verdict> {
        if (!degree_n || n < 2) return std::nullopt;
        const NeuronSplit split = split_at_neuron(polarized, n);
        if (split.j.is_zero() || split.k.is_zero() || !has_linear_resolution(split.j, f)) return std::nullopt;
        const SplittingPrediction p = betti_splitting_predict(split, f);
        if (p.predicted_table.fine() != table.fine()) {
            return Verdict{false, "termwise Betti identity fails"};
        }
        return Verdict{p.predicted == inv, "predicted " + describe(p.predicted) + ", oracle " + describe(inv)};
    });

    run(kScalingContract, [&]() -> std::optional<Verdict> {
        if (n + 1 > kMaxNeurons) return std::nullopt;
        const MonomialIdeal wide = embed(ideal, n + 1);
        for (const Monomial& u : {Monomial::x(n + 1, n + 1), lcm(Monomial::x(n + 1, n + 1), Monomial::y(n + 1, n + 1))}) {
            const Invariants scaled = invariants(scale(u, wide), f);
            if (scaled.pd != inv.pd || scaled.reg != inv.reg + u.degree()) {
                return Verdict{false, "scaling by " + to_string(u) + " gives " + describe(scaled) +
                                          " from " + describe(inv)};
            }
        }
        return Verdict{true, {}};
    });

    run(kDominantFormulas, [&]() -> std::optional<Verdict> {
        if (!dominant_check(ideal)) return std::nullopt;
        const Invariants closed = dominant_invariants(ideal);
        return Verdict{closed == inv, "closed form " + describe(closed) + ", oracle " + describe(inv)};
    });

    run(kFieldAgreement, [&]() -> std::optional<Verdict> {
        if (!options.compare_fields) return std::nullopt;
        return Verdict{betti_table(ideal, other(f)) == table,
                       "Betti numbers over f2 and q differ"};
    });

    run(kLrWithoutLq, [&]() -> std::optional<Verdict> {
        if (!lq) return std::nullopt;
        return Verdict{!(lr && !*lq), "linear resolution without linear quotients"};
    });

    return out;
}

std::vector<PolarizedNeuralIdeal> collect(const VerifyOptions& options) {
    const int n = options.n;
    std::vector<PolarizedNeuralIdeal> ideals;
    if (options.mode == VerifyMode::Exhaustive) {
        if (n < 1 || n > 3) throw Error(ErrorKind::OutOfRange, "exhaustive verification supports 1 <= n <= 3");
        if (options.universe == Universe::DegreeN) {
            const auto universe = degree_n_universe(n);
            const std::uint64_t subsets = std::uint64_t{1} << universe.size();
            for (std::uint64_t s = 1; s < subsets; ++s) ideals.push_back(ideal_from_subset(n, universe, s));
        } else {
            for_each_polarized_neural_ideal(n, [&](const PolarizedNeuralIdeal& i) { ideals.push_back(i); });
        }
    } else {
        if (n < 1 || n > 5) throw Error(ErrorKind::OutOfRange, "sampled verification supports 1 <= n <= 5");
        Rng rng(options.seed);
        for (std::size_t k = 0; k < options.count; ++k) {
            ideals.push_back(options.universe == Universe::DegreeN ? random_degree_n_ideal(n, rng)
                                                                  : random_polarized_neural_ideal(n, rng));
        }
    }
    return ideals;
}

}  // namespace

VerificationReport verify_ideals(const std::vector<PolarizedNeuralIdeal>& ideals, const VerifyOptions& options) {
    VerificationReport report;
    report.options = options;
    report.ideals = ideals.size();

    std::vector<Outcome> outcomes(ideals.size());
    unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(ideals.size(), 1))));

    const auto start = Clock::now();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < ideals.size(); i = next++) outcomes[i] = check_ideal(ideals[i], options);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    report.phase_seconds.emplace_back("check", std::chrono::duration<double>(Clock::now() - start).count());

    report.suites.resize(kSuiteCount);
    for (std::size_t s = 0; s < kSuiteCount; ++s) {
        report.suites[s].name = kSuites[s].name;
        report.suites[s].informational = kSuites[s].informational;
    }
    for (const auto& o : outcomes) {
        for (std::size_t s = 0; s < kSuiteCount; ++s) {
            auto& suite = report.suites[s];
            suite.seconds += o.seconds[s];
            switch (o.status[s]) {
            case Status::Pass: ++suite.passed; break;
            case Status::Fail: ++suite.failed; break;
            case Status::NotApplicable: ++suite.not_applicable; break;
            }
        }
        report.counterexamples.insert(report.counterexamples.end(), o.failures.begin(), o.failures.end());
        report.findings.insert(report.findings.end(), o.findings.begin(), o.findings.end());
    }
    return report;
}

VerificationReport run_verification(const VerifyOptions& options) {
    const auto start = Clock::now();
    const auto ideals = collect(options);
    const double enumerate_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    VerificationReport report = verify_ideals(ideals, options);
    report.phase_seconds.insert(report.phase_seconds.begin(), {"enumerate", enumerate_seconds});
    return report;
}

namespace {

const char* mode_name(VerifyMode m) { return m == VerifyMode::Exhaustive ? "exhaustive" : "sample"; }
const char* universe_name(Universe u) { return u == Universe::DegreeN ? "degree-n" : "all"; }
const char* pivot_name(PivotRule p) { return p == PivotRule::Last ? "last" : "smallest"; }

}  // namespace

std::string report_text(const VerificationReport& report) {
    const auto& o = report.options;
    std::ostringstream os;
    os << "verify n=" << o.n << " mode=" << mode_name(o.mode) << " universe=" << universe_name(o.universe)
       << " field=" << to_string(o.field) << " pivot=" << pivot_name(o.pivot);
    if (o.mode == VerifyMode::Sample) os << " seed=" << o.seed << " count=" << o.count;
    os << "\nideals examined: " << report.ideals << "\n\n";
    os << std::left << std::setw(28) << "suite" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
       << std::setw(8) << "n/a" << std::setw(11) << "seconds" << '\n';
    for (const auto& s : report.suites) {
        os << std::left << std::setw(28) << (s.informational ? s.name + " (info)" : s.name) << std::right
           << std::setw(8) << s.passed << std::setw(8) << s.failed << std::setw(8) << s.not_applicable
           << std::setw(11) << std::fixed << std::setprecision(3) << s.seconds << '\n';
    }
    os << '\n';
    for (const auto& [phase, secs] : report.phase_seconds)
        os << "phase " << phase << ": " << std::fixed << std::setprecision(3) << secs << " s\n";
    for (const auto& f : report.findings) os << "finding [" << f.suite << "] " << f.ideal << ": " << f.detail << '\n';
    for (const auto& c : report.counterexamples)
        os << "COUNTEREXAMPLE [" << c.suite << "] " << c.ideal << ": " << c.detail << '\n';
    os << (report.ok() ? "result: PASS" : "result: FAIL") << '\n';
    return os.str();
}

std::string report_json(const VerificationReport& report, bool with_timings) {
    using nlohmann::ordered_json;
    const auto& o = report.options;
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["scope"] = {
        {"n", o.n},
        {"mode", mode_name(o.mode)},
        {"universe", universe_name(o.universe)},
        {"field", std::string(to_string(o.field))},
        {"pivot", pivot_name(o.pivot)},
    };
    if (o.mode == VerifyMode::Sample) {
        j["scope"]["seed"] = o.seed;
        j["scope"]["count"] = o.count;
    }
    j["ideals"] = report.ideals;
    j["suites"] = ordered_json::array();
    for (const auto& s : report.suites) {
        ordered_json e{{"name", s.name},
                       {"passed", s.passed},
                       {"failed", s.failed},
                       {"not_applicable", s.not_applicable},
                       {"informational", s.informational}};
        if (with_timings) e["seconds"] = s.seconds;
        j["suites"].push_back(std::move(e));
    }
    auto dump = [](const std::vector<Counterexample>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& c : v) a.push_back({{"suite", c.suite}, {"ideal", c.ideal}, {"detail", c.detail}});
        return a;
    };
    j["counterexamples"] = dump(report.counterexamples);
    j["findings"] = dump(report.findings);
    if (with_timings) {
        ordered_json phases = ordered_json::object();
        for (const auto& [phase, secs] : report.phase_seconds) phases[phase] = secs;
        j["phase_seconds"] = std::move(phases);
    }
    j["ok"] = report.ok();
    return j.dump(2) + "\n";
}

}  // namespace neurideal
