#include "neurideal/ideal.hpp"

#include <algorithm>

namespace neurideal {

namespace {

void check_neuron_count(int n) {
    // Constructing the unit monomial validates n.
    (void)Monomial::unit(n);
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.neurons() != b.neurons()) {
        throw Error(ErrorKind::NeuronMismatch, "ideals live over different neuron counts");
    }
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(std::move(gens), n)) {}

MonomialIdeal MonomialIdeal::zero(int n) {
    check_neuron_count(n);
    return MonomialIdeal(Trusted{}, n, {});
}

MonomialIdeal MonomialIdeal::unit(int n) {
    return MonomialIdeal(Trusted{}, n, {Monomial::unit(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Monomial MonomialIdeal::lcm_all() const {
    std::uint64_t mask = 0;
    for (const auto& g : gens_) mask |= g.mask();
    return Monomial(n_, mask);
}

int MonomialIdeal::max_degree() const noexcept {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int n) {
    check_neuron_count(n);
    for (const auto& g : gens) {
        if (g.neurons() != n) {
            throw Error(ErrorKind::NeuronMismatch,
                        "generator " + to_string(g) + " is not over " + std::to_string(n) + " neurons");
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Sorted by degree, so any divisor of gens[i] among the survivors precedes it.
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const auto& g : gens) {
        const bool covered =
            std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
        if (!covered) kept.push_back(g);
    }
    return MonomialIdeal(MonomialIdeal::Trusted{}, n, std::move(kept));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    std::vector<Monomial> out;
    out.reserve(ideal.size());
    for (const auto& m : ideal.gens()) out.push_back(strip(m, u));
    return minimalize(std::move(out), ideal.neurons());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const auto& m : a.gens())
        for (const auto& p : b.gens()) out.push_back(lcm(m, p));
    return minimalize(std::move(out), a.neurons());
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> out(a.gens().begin(), a.gens().end());
    out.insert(out.end(), b.gens().begin(), b.gens().end());
    return minimalize(std::move(out), a.neurons());
}

MonomialIdeal scale(const Monomial& u, const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    out.reserve(ideal.size());
    for (const auto& m : ideal.gens()) out.push_back(u * m);
    return minimalize(std::move(out), ideal.neurons());
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, const Monomial& m) {
    std::vector<Monomial> out;
    for (const auto& g : ideal.gens())
        if (g.divides(m)) out.push_back(g);
    return minimalize(std::move(out), ideal.neurons());
}

Monomial embed(const Monomial& m, int n) {
    const int old_n = m.neurons();
    if (n < old_n) throw Error(ErrorKind::OutOfRange, "cannot embed into fewer neurons");
    const std::uint64_t xs = m.mask() & ((std::uint64_t{1} << old_n) - 1);
    const std::uint64_t ys = m.mask() >> old_n;
    return Monomial(n, xs | (ys << n));
}

MonomialIdeal embed(const MonomialIdeal& ideal, int n) {
    std::vector<Monomial> out;
    out.reserve(ideal.size());
    for (const auto& g : ideal.gens()) out.push_back(embed(g, n));
    return minimalize(std::move(out), n);
}

std::optional<int> equigenerated_degree(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no generator degree");
    const int d = ideal.gens().front().degree();
    for (const auto& g : ideal.gens())
        if (g.degree() != d) return std::nullopt;
    return d;
}

void require_proper_nonzero(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw Error(ErrorKind::UnitOrZeroIdeal, "operation undefined on the zero ideal");
    if (ideal.is_unit()) throw Error(ErrorKind::UnitOrZeroIdeal, "operation undefined on the unit ideal");
}

PairViolation::PairViolation(int pair, Monomial generator)
    : Error(ErrorKind::PairViolation, "generator " + to_string(generator) + " is divisible by x" +
                                          std::to_string(pair) + "*y" + std::to_string(pair)),
      pair_(pair),
      generator_(generator) {}

PolarizedNeuralIdeal validate_polarized_neural(MonomialIdeal ideal) {
    for (const auto& g : ideal.gens()) {
        if (int pair = g.first_pair_violation(); pair != 0) throw PairViolation(pair, g);
    }
    return PolarizedNeuralIdeal(std::move(ideal));
}

}  // namespace neurideal
