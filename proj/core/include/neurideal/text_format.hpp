#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "neurideal/ideal.hpp"

namespace neurideal {

// Monomials are `*`- or space-separated tokens x<i> / y<i> (1-indexed), or
// the literal `1`. An ideal file holds one monomial per line; blank lines and
// `#` comments are ignored, except a `# neurons: N` line which fixes n.

/// Parses one monomial over n neurons. Throws ParseError.
Monomial parse_monomial(std::string_view text, int n);

/// Largest neuron index mentioned by a monomial token list (0 for `1`).
int max_neuron_index(std::string_view text);

/// Parses an ideal file. When `n` is empty the neuron count comes from a
/// `# neurons:` line, else from the largest index used. An explicit `n`
/// must be at least the largest index.
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n = std::nullopt);

/// Canonical text form, starting with a `# neurons: N` line.
std::string render_ideal(const MonomialIdeal& ideal);

}  // namespace neurideal
