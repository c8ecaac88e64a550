#pragma once

#include <optional>
#include <span>
#include <vector>

#include "neurideal/betti.hpp"
#include "neurideal/ideal.hpp"

namespace neurideal {

/// I = x_i J + y_i K with J, K free of x_i and y_i. J and K stay in the same
/// ambient ring as I; only the pivot pair is absent from their generators.
struct NeuronSplit {
    int pivot;
    MonomialIdeal j;
    MonomialIdeal k;
};

class NotSplittable : public Error {
public:
    NotSplittable(int neuron, Monomial generator);

    int neuron() const noexcept { return neuron_; }
    const Monomial& generator() const noexcept { return generator_; }

private:
    int neuron_;
    Monomial generator_;
};

/// Requires every generator to carry exactly one of x_i, y_i; throws
/// NotSplittable naming the first generator that does not.
NeuronSplit split_at_neuron(const MonomialIdeal& ideal, int neuron);
NeuronSplit split_at_neuron(const PolarizedNeuralIdeal& ideal, int neuron);

/// x_i J + y_i K.
MonomialIdeal reconstruct(const NeuronSplit& split);

/// What the x-splitting formulas predict for I = x_i J + y_i K once J has a
/// linear resolution.
struct SplittingPrediction {
    Invariants predicted;
    /// beta(x_i J) + beta(y_i K) + beta_{i-1}(x_i J ∩ y_i K), termwise.
    BettiTable predicted_table;
    Invariants j;
    Invariants k;
    Invariants j_cap_k;
};

/// Throws UnitOrZeroIdeal when J or K is zero, JNotLinear when J lacks a
/// linear resolution.
SplittingPrediction betti_splitting_predict(const NeuronSplit& split, Field f = Field::F2);

/// True when each colon (m_1..m_k) : m_{k+1} is generated by variables.
bool is_linear_quotient_order(std::span<const Monomial> order);

struct LinearQuotientOrder {
    std::vector<Monomial> order;
};

/// Lexicographically least admissible order under the canonical generator
/// order, or nullopt. Backtracking over generator subsets; a subset that
/// cannot be extended is remembered so it is never expanded twice.
std::optional<LinearQuotientOrder> linear_quotients_search(const MonomialIdeal& ideal);

enum class PivotRule {
    Last,      ///< highest remaining neuron
    Smallest,  ///< neuron minimizing |J| + |K|
};

/// Decides linear resolution of a degree-n polarized neural ideal on n
/// neurons without homology, by splitting neuron by neuron and requiring
/// both halves linear and nested. Throws NotEquigeneratedDegreeN.
bool recursive_linear_check(const PolarizedNeuralIdeal& ideal, PivotRule pivot = PivotRule::Last);

/// Same recursion, but instead of nesting requires J and K linear, J cap K
/// generated by the shared generators of J and K, and that shared part
/// linear. Nesting is sufficient but not necessary. Throws
/// NotEquigeneratedDegreeN.
bool refined_linear_check(const PolarizedNeuralIdeal& ideal, PivotRule pivot = PivotRule::Last);

}  // namespace neurideal
