#pragma once

#include "neurideal/ideal.hpp"

namespace neurideal {

// Witness families realizing every projective dimension and regularity
// value. All throw OutOfRange outside their parameter ranges.

/// (m_1, ..., m_k) with m_i = x_i * prod_{l != i} y_l; pd = k - 1.   1 <= k <= n
PolarizedNeuralIdeal family_prop32(int n, int k);

/// (x_1..x_n, y_1..y_k x_{k+1}..x_n); reg = n + k - 1.   1 <= k <= n
PolarizedNeuralIdeal family_prop33(int n, int k);

/// The first i + 1 variables of x_1..x_n, y_1..y_n; pd = i.   0 <= i <= 2n - 1
PolarizedNeuralIdeal family_prop34_pd(int n, int i);

/// Principal ideal of a degree-j monomial; reg = j.   1 <= j <= 2n - 1
///
/// For j <= n the generator is x_1..x_j and the ideal is polarized neural.
/// For j > n no pair-excluding monomial has degree j, so the generator is
/// x_1..x_n y_1..y_{j-n} and the result is only a squarefree monomial ideal.
MonomialIdeal family_prop34_reg(int n, int j);

/// (x_1, y_1)(x_2, y_2)...(x_k, y_k) expanded into its 2^k generators;
/// pd = k and reg = k.   1 <= k <= n
PolarizedNeuralIdeal family_thm36(int n, int k);

}  // namespace neurideal
