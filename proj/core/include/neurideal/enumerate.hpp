#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "neurideal/ideal.hpp"
#include "neurideal/neural_code.hpp"

namespace neurideal {

/// The 2^n pair-excluding monomials of degree n, canonically sorted.
std::vector<Monomial> degree_n_universe(int n);

/// Every pair-excluding monomial other than 1 (3^n - 1 of them), canonically sorted.
std::vector<Monomial> pair_excluding_monomials(int n);

/// Ideal generated by universe[i] for every set bit i of `subset`.
PolarizedNeuralIdeal ideal_from_subset(int n, const std::vector<Monomial>& universe, std::uint64_t subset);

/// Visits every nonzero polarized neural ideal on n neurons, i.e. every
/// nonempty antichain of pair-excluding monomials, in a fixed order.
void for_each_polarized_neural_ideal(int n, const std::function<void(const PolarizedNeuralIdeal&)>& visit);

/// Platform-independent generator; every sampler below draws through
/// uniform_below so a seed reproduces the same ideals everywhere.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on raw 64-bit draws.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform over nonempty subsets of the degree-n universe.
PolarizedNeuralIdeal random_degree_n_ideal(int n, Rng& rng);

/// Minimalized set of 1..2n random pair-excluding monomials.
PolarizedNeuralIdeal random_polarized_neural_ideal(int n, Rng& rng);

/// Squarefree ideal whose generators each own a private variable.
MonomialIdeal random_dominant_ideal(int n, Rng& rng);

/// Each word of {0,1}^n included independently with probability 1/2.
NeuralCode random_code(int n, Rng& rng);

}  // namespace neurideal
