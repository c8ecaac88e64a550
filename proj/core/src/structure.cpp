#include "neurideal/structure.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace neurideal {

NotSplittable::NotSplittable(int neuron, Monomial generator)
    : Error(ErrorKind::NotSplittable, "generator " + to_string(generator) +
                                          " does not carry exactly one of x" + std::to_string(neuron) +
                                          ", y" + std::to_string(neuron)),
      neuron_(neuron),
      generator_(generator) {}

NeuronSplit split_at_neuron(const MonomialIdeal& ideal, int neuron) {
    const int n = ideal.neurons();
    if (neuron < 1 || neuron > n) throw Error(ErrorKind::OutOfRange, "pivot neuron out of range");
    const Monomial x = Monomial::x(n, neuron);
    const Monomial y = Monomial::y(n, neuron);

    std::vector<Monomial> j;
    std::vector<Monomial> k;
    for (const auto& g : ideal.gens()) {
        const bool has_x = x.divides(g);
        const bool has_y = y.divides(g);
        if (has_x == has_y) throw NotSplittable(neuron, g);
        (has_x ? j : k).push_back(strip(g, has_x ? x : y));
    }
    return {neuron, MonomialIdeal(n, std::move(j)), MonomialIdeal(n, std::move(k))};
}

NeuronSplit split_at_neuron(const PolarizedNeuralIdeal& ideal, int neuron) {
    return split_at_neuron(ideal.ideal(), neuron);
}

MonomialIdeal reconstruct(const NeuronSplit& split) {
    const int n = split.j.neurons();
    return sum(scale(Monomial::x(n, split.pivot), split.j), scale(Monomial::y(n, split.pivot), split.k));
}

SplittingPrediction betti_splitting_predict(const NeuronSplit& split, Field f) {
    require_proper_nonzero(split.j);
    require_proper_nonzero(split.k);
    if (!has_linear_resolution(split.j, f)) {
        throw Error(ErrorKind::JNotLinear, "J has no linear resolution; the splitting formulas do not apply");
    }
    const int n = split.j.neurons();
    const MonomialIdeal j_cap_k = intersect(split.j, split.k);
    const Invariants inv_j = invariants(split.j, f);
    const Invariants inv_k = invariants(split.k, f);
    const Invariants inv_jk = invariants(j_cap_k, f);

    const MonomialIdeal xj = scale(Monomial::x(n, split.pivot), split.j);
    const MonomialIdeal yk = scale(Monomial::y(n, split.pivot), split.k);
    const MonomialIdeal both = intersect(xj, yk);

    const BettiTable table_xj = betti_table(xj, f);
    const BettiTable table_yk = betti_table(yk, f);
    const BettiTable table_both = betti_table(both, f);
    FineBetti fine;
    for (const auto& [key, rank] : table_xj.fine()) fine[key] += rank;
    for (const auto& [key, rank] : table_yk.fine()) fine[key] += rank;
    for (const auto& [key, rank] : table_both.fine()) fine[FineKey{key.i + 1, key.b}] += rank;

    const Invariants predicted{
        std::max({inv_j.pd, inv_k.pd, inv_jk.pd + 1}),
        std::max({inv_j.reg + 1, inv_k.reg + 1, inv_jk.reg + 1}),
    };
    return {predicted, BettiTable(n, std::move(fine)), inv_j, inv_k, inv_jk};
}

namespace {

// Colon (prefix) : m is generated by variables iff every quotient g / gcd(g, m)
// is divisible by some quotient of degree one.
bool admissible_step(std::span<const Monomial> gens, const std::vector<std::size_t>& prefix, const Monomial& m) {
    std::uint64_t singles = 0;
    for (auto idx : prefix) {
        const std::uint64_t q = gens[idx].mask() & ~m.mask();
        if (std::popcount(q) == 1) singles |= q;
    }
    for (auto idx : prefix) {
        const std::uint64_t q = gens[idx].mask() & ~m.mask();
        if ((q & singles) == 0) return false;
    }
    return true;
}

struct SubsetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
        std::size_t h = 0;
        for (auto w : words) h = h * 0x100000001B3ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }
};

class QuotientSearch {
public:
    explicit QuotientSearch(std::span<const Monomial> gens)
        : gens_(gens), used_((gens.size() + 63) / 64, 0) {}

    bool run() { return extend(); }
    const std::vector<std::size_t>& order() const { return order_; }

private:
    bool is_used(std::size_t i) const { return (used_[i / 64] >> (i % 64)) & 1u; }
    void flip(std::size_t i) { used_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool extend() {
        if (order_.size() == gens_.size()) return true;
        if (dead_.contains(used_)) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (is_used(i) || !admissible_step(gens_, order_, gens_[i])) continue;
            order_.push_back(i);
            flip(i);
            if (extend()) return true;
            flip(i);
            order_.pop_back();
        }
        dead_.insert(used_);
        return false;
    }

    std::span<const Monomial> gens_;
    std::vector<std::uint64_t> used_;
    std::vector<std::size_t> order_;
    std::unordered_set<std::vector<std::uint64_t>, SubsetHash> dead_;
};

}  // namespace

bool is_linear_quotient_order(std::span<const Monomial> order) {
    std::vector<std::size_t> prefix;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (!admissible_step(order, prefix, order[k])) return false;
        prefix.push_back(k);
    }
    return true;
}

std::optional<LinearQuotientOrder> linear_quotients_search(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal);
    QuotientSearch search(ideal.gens());
    if (!search.run()) return std::nullopt;
    LinearQuotientOrder out;
    for (auto idx : search.order()) out.order.push_back(ideal.gens()[idx]);
    return out;
}

namespace {

bool generators_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    return std::includes(b.gens().begin(), b.gens().end(), a.gens().begin(), a.gens().end());
}

int choose_pivot(const MonomialIdeal& ideal, std::uint32_t active, PivotRule rule) {
    if (rule == PivotRule::Last) return 32 - std::countl_zero(active);
    int best = 0;
    std::size_t best_size = 0;
    for (std::uint32_t rest = active; rest != 0; rest &= rest - 1) {
        const int neuron = std::countr_zero(rest) + 1;
        const NeuronSplit s = split_at_neuron(ideal, neuron);
        const std::size_t size = s.j.size() + s.k.size();
        if (best == 0 || size < best_size) {
            best = neuron;
            best_size = size;
        }
    }
    return best;
}

// `active` holds the neurons still present in every generator.
bool linear_by_splitting(const MonomialIdeal& ideal, std::uint32_t active, PivotRule rule, bool refined) {
    if (std::popcount(active) == 1) return true;
    const int pivot = choose_pivot(ideal, active, rule);
    const NeuronSplit s = split_at_neuron(ideal, pivot);
    const std::uint32_t rest = active & ~(std::uint32_t{1} << (pivot - 1));

    // I = x J (or y K) alone: multiplying by a variable preserves linearity.
    if (s.k.is_zero()) return linear_by_splitting(s.j, rest, rule, refined);
    if (s.j.is_zero()) return linear_by_splitting(s.k, rest, rule, refined);

    if (!refined) {
        if (!generators_subset(s.j, s.k) && !generators_subset(s.k, s.j)) return false;
        return linear_by_splitting(s.j, rest, rule, refined) && linear_by_splitting(s.k, rest, rule, refined);
    }

    std::vector<Monomial> shared;
    std::set_intersection(s.j.gens().begin(), s.j.gens().end(), s.k.gens().begin(), s.k.gens().end(),
                          std::back_inserter(shared));
    if (shared.empty()) return false;
    const MonomialIdeal common(s.j.neurons(), std::move(shared));
    if (intersect(s.j, s.k) != common) return false;
    return linear_by_splitting(s.j, rest, rule, refined) && linear_by_splitting(s.k, rest, rule, refined) &&
           linear_by_splitting(common, rest, rule, refined);
}

bool check_by_splitting(const PolarizedNeuralIdeal& ideal, PivotRule pivot, bool refined) {
    require_proper_nonzero(ideal.ideal());
    const int n = ideal.neurons();
    const auto d = equigenerated_degree(ideal.ideal());
    if (!d || *d != n) {
        throw Error(ErrorKind::NotEquigeneratedDegreeN,
                    "recursive linear check needs every generator in degree n = " + std::to_string(n));
    }
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return linear_by_splitting(ideal.ideal(), all, pivot, refined);
}

}  // namespace

bool recursive_linear_check(const PolarizedNeuralIdeal& ideal, PivotRule pivot) {
    return check_by_splitting(ideal, pivot, false);
}

bool refined_linear_check(const PolarizedNeuralIdeal& ideal, PivotRule pivot) {
    return check_by_splitting(ideal, pivot, true);
}

}  // namespace neurideal
