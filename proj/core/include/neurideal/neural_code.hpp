#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neurideal/ideal.hpp"

namespace neurideal {

/// Largest n for which the 2^n-word enumeration in vanishing_generators runs.
inline constexpr int kMaxCodeNeurons = 20;

/// Binary word c_1..c_n. Bit i-1 of `bits` is c_i, so c_1 is the leftmost
/// character of the text form.
class Codeword {
public:
    Codeword(int n, std::uint32_t bits);
    /// Parses `0110`-style text. Throws ParseError.
    static Codeword parse(std::string_view text);

    int length() const noexcept { return n_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool at(int i) const noexcept { return (bits_ >> (i - 1)) & 1u; }

    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    int n_;
    std::uint32_t bits_;
};

std::string to_string(const Codeword& c);

/// Duplicate-free set of length-n codewords, sorted.
class NeuralCode {
public:
    NeuralCode(int n, std::vector<Codeword> words);

    int neurons() const noexcept { return n_; }
    const std::vector<Codeword>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool contains(const Codeword& c) const;

private:
    int n_;
    std::vector<Codeword> words_;
};

/// One binary string per line, `#` comments. All lines share one length,
/// which defines n; `n` supplies it for a file with no codewords.
NeuralCode parse_code(std::string_view text, std::optional<int> n = std::nullopt);

/// prod_{i in sigma} x_i prod_{j in tau} (1 - x_j) with sigma, tau disjoint.
class Pseudomonomial {
public:
    /// Throws OutOfRange on overlapping or out-of-range index sets.
    Pseudomonomial(int n, std::uint32_t sigma, std::uint32_t tau);

    int neurons() const noexcept { return n_; }
    std::uint32_t sigma() const noexcept { return sigma_; }
    std::uint32_t tau() const noexcept { return tau_; }
    int size() const noexcept;

    friend bool operator==(const Pseudomonomial&, const Pseudomonomial&) = default;
    friend auto operator<=>(const Pseudomonomial&, const Pseudomonomial&) = default;

private:
    int n_;
    std::uint32_t sigma_;
    std::uint32_t tau_;
};

/// Text form `x1*(1-x2)`, or `1` for the empty product.
std::string to_string(const Pseudomonomial& p);
Pseudomonomial parse_pseudomonomial(std::string_view text, int n);

/// Value of p at c over F2. Throws LengthMismatch.
bool evaluate(const Pseudomonomial& p, const Codeword& c);

/// rho_v for every v outside the code: sigma = support(v), tau = complement.
std::vector<Pseudomonomial> vanishing_generators(const NeuralCode& code);

bool pseudo_divides(const Pseudomonomial& p, const Pseudomonomial& q);
std::vector<Pseudomonomial> minimize_pseudos(std::vector<Pseudomonomial> ps);

/// x-bits at sigma, y-bits at tau.
Monomial polarize(const Pseudomonomial& p);

PolarizedNeuralIdeal code_to_polarized_ideal(const NeuralCode& code);

}  // namespace neurideal
