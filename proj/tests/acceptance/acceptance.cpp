// Acceptance run: one PASS/FAIL line per criterion.
//   neurideal_acceptance                 all criteria
//   neurideal_acceptance --criterion N   just criterion N
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "neurideal/betti.hpp"
#include "neurideal/enumerate.hpp"
#include "neurideal/families.hpp"
#include "neurideal/neural_code.hpp"
#include "neurideal/structure.hpp"
#include "oracles.hpp"

using namespace neurideal;

namespace {

struct Outcome {
    bool pass = true;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        pass = false;
        if (failures++ == 0) first_failure = what;
    }
};

std::string gens_text(const MonomialIdeal& i) {
    std::string s = "(";
    for (std::size_t k = 0; k < i.size(); ++k) s += (k ? ", " : "") + to_string(i.gens()[k]);
    return s + ")";
}

std::vector<PolarizedNeuralIdeal> degree_n_ideals(int n) {
    const auto universe = degree_n_universe(n);
    std::vector<PolarizedNeuralIdeal> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << universe.size()); ++s)
        out.push_back(ideal_from_subset(n, universe, s));
    return out;
}

std::vector<PolarizedNeuralIdeal> all_ideals(int n) {
    std::vector<PolarizedNeuralIdeal> out;
    for_each_polarized_neural_ideal(n, [&](const PolarizedNeuralIdeal& i) { out.push_back(i); });
    return out;
}

// 1. Family values.
Outcome families() {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto inv = invariants(family_prop32(n, k).ideal());
            o.expect(inv.pd == k - 1, "prop32 n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                          " pd " + std::to_string(inv.pd));
        }
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto inv = invariants(family_prop33(n, k).ideal());
            o.expect(inv.reg == n + k - 1, "prop33 n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                               " reg " + std::to_string(inv.reg));
        }
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i <= 2 * n - 1; ++i) {
            const auto inv = invariants(family_prop34_pd(n, i).ideal());
            o.expect(inv.pd == i, "prop34-pd n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        for (int j = 1; j <= 2 * n - 1; ++j) {
            const auto inv = invariants(family_prop34_reg(n, j));
            o.expect(inv.reg == j, "prop34-reg n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
    for (int k = 1; k <= 4; ++k)
        for (int n = k; n <= 4; ++n)
            for (Field f : {Field::F2, Field::Rationals}) {
                const auto inv = invariants(family_thm36(n, k).ideal(), f);
                o.expect(inv.pd == k && inv.reg == k, "thm36 n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
    return o;
}

void check_bounds(Outcome& o, const PolarizedNeuralIdeal& p) {
    const int n = p.neurons();
    const auto inv = invariants(p.ideal());
    const std::string who = gens_text(p.ideal());
    o.expect(inv.pd >= 0 && inv.pd <= 2 * n - 1, "pd out of [0, 2n-1] for " + who);
    o.expect(inv.reg >= 1 && inv.reg <= 2 * n - 1, "reg out of [1, 2n-1] for " + who);
    o.expect(inv.reg != 2 * n, "reg = 2n for " + who);
    const auto d = equigenerated_degree(p.ideal());
    if (d && *d == n) {
        o.expect(inv.pd <= n, "degree-n pd > n for " + who);
        o.expect(inv.reg >= n, "degree-n reg < n for " + who);
    }
}

// 2. Bounds over every polarized neural ideal to n = 3 plus n = 4 samples.
Outcome bounds() {
    Outcome o;
    std::size_t exhaustive = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : all_ideals(n)) {
            check_bounds(o, p);
            ++exhaustive;
        }
    Rng rng(20240601);
    for (int k = 0; k < 500; ++k) check_bounds(o, random_degree_n_ideal(4, rng));
    for (int k = 0; k < 500; ++k) check_bounds(o, random_polarized_neural_ideal(4, rng));
    o.notes.push_back(std::to_string(exhaustive) + " ideals exhaustively (n <= 3), 1000 sampled at n = 4");
    return o;
}

// 3. recursive check = homology = linear quotients on every degree-n ideal, n = 2, 3.
Outcome three_way() {
    Outcome o;
    std::size_t lr_lq_mismatch = 0;
    std::size_t refined_mismatch = 0;
    std::size_t total = 0;
    for (int n = 2; n <= 3; ++n) {
        const auto ideals = degree_n_ideals(n);
        o.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(ideals.size()) + " ideals");
        for (const auto& p : ideals) {
            ++total;
            const bool lr = has_linear_resolution(p.ideal());
            const bool lq = linear_quotients_search(p.ideal()).has_value();
            const bool rec = recursive_linear_check(p);
            o.expect(rec == lr && lr == lq, "recursive " + std::to_string(rec) + ", homology " +
                                                std::to_string(lr) + ", quotients " + std::to_string(lq) +
                                                " on " + gens_text(p.ideal()));
            if (lr != lq) ++lr_lq_mismatch;
            if (refined_linear_check(p) != lr || refined_linear_check(p, PivotRule::Smallest) != lr)
                ++refined_mismatch;
        }
    }
    o.notes.push_back("homology vs quotients disagreements: " + std::to_string(lr_lq_mismatch) + " of " +
                      std::to_string(total));
    o.notes.push_back("refined split check (intersection rule) disagreements: " + std::to_string(refined_mismatch) +
                      " of " + std::to_string(total));
    return o;
}

// 4. Betti splitting identity at every pivot whose J-branch is linear.
Outcome splitting() {
    Outcome o;
    std::size_t applicable = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : degree_n_ideals(n)) {
            const BettiTable actual = betti_table(p.ideal());
            for (int pivot = 1; pivot <= n; ++pivot) {
                const NeuronSplit s = split_at_neuron(p, pivot);
                if (!s.j.is_proper_nonzero() || !s.k.is_proper_nonzero() || !has_linear_resolution(s.j)) continue;
                ++applicable;
                const auto pred = betti_splitting_predict(s);
                const std::string who = gens_text(p.ideal()) + " pivot " + std::to_string(pivot);
                o.expect(pred.predicted_table == actual, "termwise identity fails for " + who);
                o.expect(pred.predicted.pd == actual.pd(), "pd formula fails for " + who);
                o.expect(pred.predicted.reg == actual.reg(), "reg formula fails for " + who);
            }
        }
    o.notes.push_back(std::to_string(applicable) + " splittings checked");
    return o;
}

void check_table(Outcome& o, const MonomialIdeal& i, const BettiTable& t) {
    const std::string who = gens_text(i);
    o.expect(euler_polynomial(t) == inclusion_exclusion_polynomial(i), "Euler identity fails for " + who);
    bool mingens = t.total(0) == i.size();
    for (const auto& g : i.gens()) mingens = mingens && t.at(0, g) == 1;
    o.expect(mingens, "beta_0 does not recover the generators of " + who);
    o.expect(t.reg() >= i.max_degree(), "reg below max generator degree for " + who);
    o.expect(t.reg() <= reg_upper_bound_lcm(i), "reg above the lcm bound for " + who);
}

// 5. Oracle soundness.
Outcome soundness() {
    Outcome o;
    std::size_t tables = 0, closures = 0, taylor = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : all_ideals(n)) {
            const MonomialIdeal& i = p.ideal();
            const BettiTable t = betti_table(i);
            check_table(o, i, t);
            ++tables;
            if (i.size() <= 8) {
                std::vector<oracle::Mask> ms;
                for (const auto& g : i.gens()) ms.push_back(g.mask());
                std::map<oracle::Key, std::size_t> mine;
                for (const auto& [key, rank] : t.fine()) mine[{key.i, key.b.mask()}] = rank;
                o.expect(mine == oracle::taylor_betti(ms), "Taylor oracle disagrees on " + gens_text(i));
                ++taylor;
            }
            const auto d = equigenerated_degree(i);
            if (!d) continue;
            const bool lr = t.reg() == *d;
            const bool lq = linear_quotients_search(i).has_value();
            if (lq) o.expect(lr, "linear quotients without linear resolution on " + gens_text(i));
            if (!lr && !lq) continue;
            ++closures;
            for (const auto& m : lcm_closure(i)) {
                const MonomialIdeal sub = restrict_to(i, m);
                if (lr) o.expect(has_linear_resolution(sub), "restriction loses linearity: " + gens_text(sub));
                if (lq) o.expect(linear_quotients_search(sub).has_value(),
                                 "restriction loses linear quotients: " + gens_text(sub));
            }
        }
    Rng rng(77);
    for (int k = 0; k < 500; ++k) {
        const auto i = random_polarized_neural_ideal(4, rng).ideal();
        check_table(o, i, betti_table(i));
        ++tables;
    }
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 3));
        const MonomialIdeal i = embed(random_polarized_neural_ideal(n, rng).ideal(), n + 1);
        const std::uint64_t free_vars = ~i.lcm_all().mask() & Monomial::full(n + 1).mask();
        std::uint64_t u = 0;
        while (u == 0) u = free_vars & rng();
        const Monomial mu(n + 1, u);
        const auto before = invariants(i);
        const auto after = invariants(scale(mu, i));
        o.expect(after.pd == before.pd && after.reg == before.reg + mu.degree(),
                 "scaling contract fails for " + to_string(mu) + " * " + gens_text(i));
    }
    o.notes.push_back(std::to_string(tables) + " tables, " + std::to_string(taylor) + " Taylor cross-checks, " +
                      std::to_string(closures) + " restriction closures, 100 scaling pairs");
    return o;
}

// 6. Closed forms for dominant sets.
Outcome dominant() {
    Outcome o;
    Rng rng(31337);
    for (int k = 0; k < 200; ++k) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 4));
        const MonomialIdeal i = random_dominant_ideal(n, rng);
        const auto closed = dominant_invariants(i);
        for (Field f : {Field::F2, Field::Rationals})
            o.expect(invariants(i, f) == closed, "closed form differs from oracle on " + gens_text(i));
    }
    return o;
}

// 7. Code pipeline.
Outcome codes() {
    Outcome o;
    Rng rng(4242);
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 4));
        const NeuralCode code = random_code(n, rng);
        const auto pseudos = vanishing_generators(code);
        const std::size_t expected = (std::size_t{1} << n) - code.size();
        o.expect(pseudos.size() == expected, "wrong pseudomonomial count");
        for (const auto& p : pseudos) {
            for (std::uint32_t w = 0; w < (1u << n); ++w) {
                const Codeword c(n, w);
                const bool value = evaluate(p, c);
                if (code.contains(c)) o.expect(!value, to_string(p) + " does not vanish on " + to_string(c));
                if (w == p.sigma()) o.expect(value, to_string(p) + " vanishes at its own non-codeword");
            }
        }
        try {
            const PolarizedNeuralIdeal ideal = code_to_polarized_ideal(code);
            o.expect(ideal.ideal().size() == expected, "generator count is not 2^n - |C|");
            if (expected > 0)
                o.expect(equigenerated_degree(ideal.ideal()) == n, "ideal is not generated in degree n");
        } catch (const std::exception& e) {
            o.expect(false, std::string("invalid ideal: ") + e.what());
        }
    }
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {"family values (prop32 n<=5, prop33 n<=4, prop34 n<=4, thm36 k<=4)", families},
        {"pd/reg bounds (exhaustive n<=3, 1000 samples at n=4)", bounds},
        {"recursive check = linear resolution = linear quotients (15 + 255 degree-n ideals)", three_way},
        {"Betti splitting identity and pd/reg formulas (degree-n, n<=3)", splitting},
        {"oracle soundness, restriction closure, scaling contract", soundness},
        {"dominant closed forms (200 random sets, n<=4)", dominant},
        {"code pipeline (100 random codes, n<=4)", codes},
    };

    int only = 0;
    for (int a = 1; a < argc; ++a) {
        if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) {
            only = std::atoi(argv[++a]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
        return 2;
    }

    bool all_pass = true;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        if (only && static_cast<int>(c + 1) != only) continue;
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = criteria[c].run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all_pass = all_pass && o.pass;
        std::printf("criterion %zu: %s  %s  [%zu checks, %.2f s]\n", c + 1, o.pass ? "PASS" : "FAIL",
                    criteria[c].title, o.checked, secs);
        if (!o.pass)
            std::printf("    %zu failing checks; first: %s\n", o.failures, o.first_failure.c_str());
        for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
    }
    return all_pass ? 0 : 1;
}
