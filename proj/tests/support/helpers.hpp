#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "neurideal/betti.hpp"
#include "neurideal/ideal.hpp"
#include "neurideal/text_format.hpp"
#include "oracles.hpp"

namespace testing_support {

inline neurideal::Monomial mono(int n, const std::string& text) { return neurideal::parse_monomial(text, n); }

inline neurideal::MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
    std::vector<neurideal::Monomial> ms;
    for (const char* g : gens) ms.push_back(mono(n, g));
    return neurideal::MonomialIdeal(n, std::move(ms));
}

inline std::vector<oracle::Mask> masks(const neurideal::MonomialIdeal& i) {
    std::vector<oracle::Mask> out;
    for (const auto& g : i.gens()) out.push_back(g.mask());
    return out;
}

inline std::map<oracle::Key, std::size_t> as_oracle(const neurideal::BettiTable& t) {
    std::map<oracle::Key, std::size_t> out;
    for (const auto& [key, rank] : t.fine()) out[{key.i, key.b.mask()}] = rank;
    return out;
}

}  // namespace testing_support
