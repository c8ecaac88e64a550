#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neurideal/field.hpp"
#include "neurideal/ideal.hpp"
#include "neurideal/simplicial.hpp"

namespace neurideal {

/// (homological index, squarefree multidegree) of a fine Betti number.
struct FineKey {
    int i;
    Monomial b;

    friend bool operator==(const FineKey&, const FineKey&) = default;
    friend std::strong_ordering operator<=>(const FineKey&, const FineKey&) = default;
};

using FineBetti = std::map<FineKey, std::size_t>;
using CoarseBetti = std::map<std::pair<int, int>, std::size_t>;

/// Multigraded Betti numbers of a monomial ideal with the (i, j) totals.
/// Only nonzero entries are stored.
class BettiTable {
public:
    BettiTable(int n, FineBetti fine);

    int neurons() const noexcept { return n_; }
    const FineBetti& fine() const noexcept { return fine_; }
    const CoarseBetti& coarse() const noexcept { return coarse_; }

    std::size_t at(int i, const Monomial& b) const;
    std::size_t coarse_at(int i, int j) const;
    /// Sum over j of beta_{i,j}.
    std::size_t total(int i) const;

    /// Largest i with a nonzero entry; -1 for an empty table.
    int pd() const noexcept;
    /// max(j - i) over nonzero entries; -1 for an empty table.
    int reg() const noexcept;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    int n_;
    FineBetti fine_;
    CoarseBetti coarse_;
};

/// Human-readable coarse table in the usual Macaulay2 layout (rows j - i,
/// columns i).
std::string render_coarse(const BettiTable& table);

/// K^b(I) = { tau ⊆ supp(b) : b / tau ∈ I } as a complex on supp(b).
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b);

/// lcm of every nonempty subset of mingens(I), canonically sorted.
std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal);

/// beta_{i,b}(I) = dim H̃_{i-1}(K^b(I)) for b in the lcm closure.
BettiTable betti_table(const MonomialIdeal& ideal, Field f = Field::F2);

struct Invariants {
    int pd;
    int reg;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const MonomialIdeal& ideal, Field f = Field::F2);

struct LinearResolutionCheck {
    bool linear;
    std::optional<std::string> warning;
};

/// Mixed-degree ideals are reported non-linear with a warning attached.
LinearResolutionCheck check_linear_resolution(const MonomialIdeal& ideal, Field f = Field::F2);
bool has_linear_resolution(const MonomialIdeal& ideal, Field f = Field::F2);

/// 1 + max over nonempty A ⊆ mingens(I) of deg(lcm A) - |A|; bounds reg(I) from above.
int reg_upper_bound_lcm(const MonomialIdeal& ideal);

/// For each generator (canonical order) a variable position dividing it and
/// no other generator, or nullopt when the generating set is not dominant.
std::optional<std::vector<int>> dominant_check(const MonomialIdeal& ideal);

/// (q - 1, deg lcm - q + 1) for a dominant generating set of size q.
/// Throws NotDominant.
Invariants dominant_invariants(const MonomialIdeal& ideal);

/// Signed multidegree polynomial: coefficient per monomial, zeros dropped.
using LcmPolynomial = std::map<Monomial, std::int64_t>;

/// sum_i (-1)^i sum_b beta_{i,b} t^b.
LcmPolynomial euler_polynomial(const BettiTable& table);

/// sum over nonempty A ⊆ mingens(I) of (-1)^{|A|+1} t^{lcm A}, accumulated one
/// generator at a time over the lcm lattice.
LcmPolynomial inclusion_exclusion_polynomial(const MonomialIdeal& ideal);

}  // namespace neurideal
