#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "neurideal/error.hpp"

namespace neurideal {

/// Largest neuron count representable: 2n variables must fit one machine word.
inline constexpr int kMaxNeurons = 32;

/// Squarefree monomial in x_1..x_n, y_1..y_n stored as a bit set.
///
/// Bit i-1 holds x_i and bit n+i-1 holds y_i. The empty mask is the unit
/// monomial. Ordering is the canonical generator order: degree first, then
/// the mask read as an unsigned integer.
class Monomial {
public:
    Monomial() = default;

    /// Throws TooManyNeurons when n is outside [1, kMaxNeurons] and OutOfRange
    /// when mask has bits beyond position 2n-1.
    Monomial(int n, std::uint64_t mask);

    static Monomial unit(int n) { return Monomial(n, 0); }
    static Monomial x(int n, int i);
    static Monomial y(int n, int i);
    /// Variable at 0-based bit position `pos` (x_1..x_n, then y_1..y_n).
    static Monomial variable(int n, int pos);
    /// Product of every variable, x_1..x_n y_1..y_n.
    static Monomial full(int n);

    std::uint64_t mask() const noexcept { return mask_; }
    int neurons() const noexcept { return n_; }
    int variables() const noexcept { return 2 * n_; }
    int degree() const noexcept { return std::popcount(mask_); }
    bool is_unit() const noexcept { return mask_ == 0; }

    bool has_x(int i) const noexcept { return (mask_ >> (i - 1)) & 1u; }
    bool has_y(int i) const noexcept { return (mask_ >> (n_ + i - 1)) & 1u; }
    bool has_variable(int pos) const noexcept { return (mask_ >> pos) & 1u; }

    bool divides(const Monomial& other) const noexcept {
        return (mask_ & ~other.mask_) == 0;
    }
    bool coprime(const Monomial& other) const noexcept {
        return (mask_ & other.mask_) == 0;
    }

    /// Smallest i such that x_i y_i divides this monomial, or 0.
    int first_pair_violation() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.mask_ <=> b.mask_;
    }

private:
    std::uint64_t mask_ = 0;
    std::uint8_t n_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b), generator of (b) : (a) for squarefree monomials.
Monomial strip(const Monomial& a, const Monomial& b);
/// Squarefree product; throws NonSquarefreeProduct when a and b share a variable.
Monomial operator*(const Monomial& a, const Monomial& b);

/// Text form: `x1*y2*x3`, tokens ordered by neuron then x before y; `1` for the unit.
std::string to_string(const Monomial& m);

/// Name of the variable at bit position pos, e.g. "y3".
std::string variable_name(int n, int pos);

}  // namespace neurideal

template <>
struct std::hash<neurideal::Monomial> {
    std::size_t operator()(const neurideal::Monomial& m) const noexcept {
        return std::hash<std::uint64_t>{}(m.mask() * 0x9E3779B97F4A7C15ull ^
                                          static_cast<std::uint64_t>(m.neurons()));
    }
};
