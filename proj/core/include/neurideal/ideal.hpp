#pragma once

#include <optional>
#include <span>
#include <vector>

#include "neurideal/monomial.hpp"

namespace neurideal {

/// Squarefree monomial ideal in 2n variables, held by its minimal generators.
///
/// Generators form an antichain under divisibility and are kept sorted in the
/// canonical order (degree, then mask), so two ideals are equal exactly when
/// their generator lists are. The zero ideal has no generators; the unit ideal
/// is the single generator 1 and is only produced by colon.
class MonomialIdeal {
public:
    /// Minimalizes `gens`. All generators must live over n neurons.
    MonomialIdeal(int n, std::vector<Monomial> gens);

    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);

    int neurons() const noexcept { return n_; }
    std::span<const Monomial> gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

    /// Monomial membership: some generator divides m.
    bool contains(const Monomial& m) const noexcept;
    /// lcm of all generators (1 for the zero ideal).
    Monomial lcm_all() const;
    int max_degree() const noexcept;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    struct Trusted {};
    MonomialIdeal(Trusted, int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

    friend MonomialIdeal minimalize(std::vector<Monomial> gens, int n);

    int n_;
    std::vector<Monomial> gens_;
};

/// Divisibility-minimal elements of gens, canonically sorted and deduplicated.
MonomialIdeal minimalize(std::vector<Monomial> gens, int n);

/// I : u = ( m / gcd(u, m) : m in mingens(I) ).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
/// I ∩ J = ( lcm(m, m') ).
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// u·I for u coprime to every generator; throws NonSquarefreeProduct otherwise.
MonomialIdeal scale(const Monomial& u, const MonomialIdeal& ideal);
/// I^{<=m}: the generators of I dividing m.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, const Monomial& m);
/// Same generators viewed over a larger neuron count (x_i, y_i keep their indices).
MonomialIdeal embed(const MonomialIdeal& ideal, int n);
Monomial embed(const Monomial& m, int n);

/// Common generator degree, or nullopt when mixed. Throws ZeroIdeal.
std::optional<int> equigenerated_degree(const MonomialIdeal& ideal);

/// Throws UnitOrZeroIdeal unless the ideal is proper and nonzero.
void require_proper_nonzero(const MonomialIdeal& ideal);

class PairViolation : public Error {
public:
    PairViolation(int pair, Monomial generator);

    /// 1-based neuron index i with x_i y_i dividing the generator.
    int pair() const noexcept { return pair_; }
    const Monomial& generator() const noexcept { return generator_; }

private:
    int pair_;
    Monomial generator_;
};

/// A monomial ideal none of whose minimal generators is divisible by x_i y_i.
class PolarizedNeuralIdeal {
public:
    const MonomialIdeal& ideal() const noexcept { return inner_; }
    int neurons() const noexcept { return inner_.neurons(); }
    std::span<const Monomial> gens() const noexcept { return inner_.gens(); }

    friend bool operator==(const PolarizedNeuralIdeal&, const PolarizedNeuralIdeal&) = default;

private:
    explicit PolarizedNeuralIdeal(MonomialIdeal inner) : inner_(std::move(inner)) {}
    friend PolarizedNeuralIdeal validate_polarized_neural(MonomialIdeal ideal);

    MonomialIdeal inner_;
};

/// Throws PairViolation naming the first offending generator.
PolarizedNeuralIdeal validate_polarized_neural(MonomialIdeal ideal);

}  // namespace neurideal
