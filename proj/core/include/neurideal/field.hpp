#pragma once

#include <optional>
#include <string_view>

namespace neurideal {

/// Coefficient field for homology and Betti numbers.
enum class Field { F2, Rationals };

inline constexpr std::string_view to_string(Field f) noexcept {
    return f == Field::F2 ? "f2" : "q";
}

inline std::optional<Field> parse_field(std::string_view s) noexcept {
    if (s == "f2" || s == "F2" || s == "2") return Field::F2;
    if (s == "q" || s == "Q" || s == "0" || s == "rationals") return Field::Rationals;
    return std::nullopt;
}

}  // namespace neurideal
