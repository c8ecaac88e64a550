#pragma once

#include <string>
#include <string_view>

#include "neurideal/betti.hpp"

namespace neurideal {

/// { "fine": [{"i", "b", "rank"}], "coarse": [{"i", "j", "rank"}], "pd", "reg" }
/// with fine entries in (i, canonical b) order. `indent` < 0 gives one line.
std::string betti_table_json(const BettiTable& table, int indent = 2);

/// Inverse of betti_table_json; `n` fixes the ring for the multidegrees.
/// Throws ParseError on malformed input.
BettiTable parse_betti_table_json(std::string_view text, int n);

}  // namespace neurideal
