#include "neurideal/enumerate.hpp"

#include <algorithm>
#include <limits>

namespace neurideal {

std::vector<Monomial> degree_n_universe(int n) {
    if (n < 1 || n > 20) throw Error(ErrorKind::OutOfRange, "degree-n universe needs 1 <= n <= 20");
    std::vector<Monomial> out;
    const std::uint64_t low = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t xs = 0; xs <= low; ++xs) out.emplace_back(n, xs | ((low & ~xs) << n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> pair_excluding_monomials(int n) {
    if (n < 1 || n > 12) throw Error(ErrorKind::OutOfRange, "pair-excluding listing needs 1 <= n <= 12");
    std::vector<Monomial> out;
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= 3;
    for (std::uint64_t code = 1; code < count; ++code) {
        std::uint64_t mask = 0;
        std::uint64_t rest = code;
        for (int i = 0; i < n; ++i, rest /= 3) {
            if (rest % 3 == 1) mask |= std::uint64_t{1} << i;
            if (rest % 3 == 2) mask |= std::uint64_t{1} << (n + i);
        }
        out.emplace_back(n, mask);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolarizedNeuralIdeal ideal_from_subset(int n, const std::vector<Monomial>& universe, std::uint64_t subset) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < universe.size() && i < 64; ++i)
        if ((subset >> i) & 1u) gens.push_back(universe[i]);
    return validate_polarized_neural(MonomialIdeal(n, std::move(gens)));
}

namespace {

void antichains(const std::vector<Monomial>& mons, std::size_t idx, std::vector<Monomial>& chosen, int n,
                const std::function<void(const PolarizedNeuralIdeal&)>& visit) {
    if (idx == mons.size()) {
        if (!chosen.empty()) visit(validate_polarized_neural(MonomialIdeal(n, chosen)));
        return;
    }
    antichains(mons, idx + 1, chosen, n, visit);
    // Canonical order puts divisors first, so only earlier picks can divide mons[idx].
    const Monomial& m = mons[idx];
    if (std::none_of(chosen.begin(), chosen.end(), [&](const Monomial& c) { return c.divides(m); })) {
        chosen.push_back(m);
        antichains(mons, idx + 1, chosen, n, visit);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_polarized_neural_ideal(int n, const std::function<void(const PolarizedNeuralIdeal&)>& visit) {
    const auto mons = pair_excluding_monomials(n);
    std::vector<Monomial> chosen;
    antichains(mons, 0, chosen, n, visit);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

PolarizedNeuralIdeal random_degree_n_ideal(int n, Rng& rng) {
    const auto universe = degree_n_universe(n);
    if (universe.size() > 63) throw Error(ErrorKind::OutOfRange, "degree-n sampling supports n <= 5");
    const std::uint64_t subsets = std::uint64_t{1} << universe.size();
    const std::uint64_t subset = 1 + uniform_below(rng, subsets - 1);
    return ideal_from_subset(n, universe, subset);
}

PolarizedNeuralIdeal random_polarized_neural_ideal(int n, Rng& rng) {
    const std::size_t count = 1 + uniform_below(rng, static_cast<std::uint64_t>(2 * n));
    std::vector<Monomial> gens;
    while (gens.size() < count) {
        std::uint64_t mask = 0;
        for (int i = 0; i < n; ++i) {
            switch (uniform_below(rng, 3)) {
            case 1: mask |= std::uint64_t{1} << i; break;
            case 2: mask |= std::uint64_t{1} << (n + i); break;
            default: break;
            }
        }
        if (mask != 0) gens.emplace_back(n, mask);
    }
    return validate_polarized_neural(MonomialIdeal(n, std::move(gens)));
}

MonomialIdeal random_dominant_ideal(int n, Rng& rng) {
    const int vars = 2 * n;
    std::vector<int> positions(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) positions[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = positions.size(); i > 1; --i)
        std::swap(positions[i - 1], positions[uniform_below(rng, i)]);

    const auto q = static_cast<std::size_t>(1 + uniform_below(rng, static_cast<std::uint64_t>(vars)));
    std::uint64_t shared_pool = 0;
    for (std::size_t i = q; i < positions.size(); ++i) shared_pool |= std::uint64_t{1} << positions[i];

    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < q; ++k) {
        std::uint64_t mask = std::uint64_t{1} << positions[k];
        for (std::uint64_t rest = shared_pool; rest != 0; rest &= rest - 1)
            if (uniform_below(rng, 2)) mask |= rest & (~rest + 1);
        gens.emplace_back(n, mask);
    }
    return MonomialIdeal(n, std::move(gens));
}

NeuralCode random_code(int n, Rng& rng) {
    if (n < 1 || n > kMaxCodeNeurons) throw Error(ErrorKind::OutOfRange, "code length out of range");
    std::vector<Codeword> words;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
        if (uniform_below(rng, 2)) words.emplace_back(n, v);
    return NeuralCode(n, std::move(words));
}

}  // namespace neurideal
