#include "neurideal/neural_code.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace neurideal {

namespace {

constexpr int kMaxWordLength = 32;

std::uint32_t low_bits(int n) {
    return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Codeword parse_word(std::string_view text, std::size_t line) {
    if (text.empty()) throw ParseError(line, "empty codeword");
    if (text.size() > kMaxWordLength) throw ParseError(line, "codeword longer than 32 bits");
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError(line, "codeword \"" + std::string(text) + "\" contains '" +
                                       std::string(1, c) + "'");
        }
        if (c == '1') bits |= std::uint32_t{1} << i;
    }
    return Codeword(static_cast<int>(text.size()), bits);
}

}  // namespace

Codeword::Codeword(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxWordLength) throw Error(ErrorKind::OutOfRange, "codeword length out of range");
    if (bits & ~low_bits(n)) throw Error(ErrorKind::OutOfRange, "codeword bits exceed its length");
}

Codeword Codeword::parse(std::string_view text) { return parse_word(trim(text), 0); }

std::string to_string(const Codeword& c) {
    std::string out(static_cast<std::size_t>(c.length()), '0');
    for (int i = 1; i <= c.length(); ++i)
        if (c.at(i)) out[static_cast<std::size_t>(i - 1)] = '1';
    return out;
}

NeuralCode::NeuralCode(int n, std::vector<Codeword> words) : n_(n), words_(std::move(words)) {
    if (n < 1 || n > kMaxWordLength) throw Error(ErrorKind::OutOfRange, "code length out of range");
    for (const auto& w : words_) {
        if (w.length() != n) {
            throw Error(ErrorKind::LengthMismatch, "codeword " + to_string(w) + " has length " +
                                                       std::to_string(w.length()) + ", expected " +
                                                       std::to_string(n));
        }
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool NeuralCode::contains(const Codeword& c) const {
    return std::binary_search(words_.begin(), words_.end(), c);
}

NeuralCode parse_code(std::string_view text, std::optional<int> n) {
    std::vector<Codeword> words;
    std::optional<int> length = n;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        Codeword w = parse_word(line, line_no);
        if (length && *length != w.length()) {
            throw ParseError(line_no, "codeword length " + std::to_string(w.length()) +
                                          " differs from " + std::to_string(*length));
        }
        length = w.length();
        words.push_back(w);
    }
    if (!length) throw ParseError(0, "code file has no codewords; the neuron count is unknown");
    return NeuralCode(*length, std::move(words));
}

Pseudomonomial::Pseudomonomial(int n, std::uint32_t sigma, std::uint32_t tau)
    : n_(n), sigma_(sigma), tau_(tau) {
    if (n < 1 || n > kMaxWordLength) throw Error(ErrorKind::OutOfRange, "pseudomonomial length out of range");
    if ((sigma | tau) & ~low_bits(n)) throw Error(ErrorKind::OutOfRange, "index beyond neuron count");
    if (sigma & tau) throw Error(ErrorKind::OutOfRange, "sigma and tau must be disjoint");
}

int Pseudomonomial::size() const noexcept { return std::popcount(sigma_) + std::popcount(tau_); }

std::string to_string(const Pseudomonomial& p) {
    if (p.sigma() == 0 && p.tau() == 0) return "1";
    std::string out;
    for (int i = 1; i <= p.neurons(); ++i) {
        const std::uint32_t bit = std::uint32_t{1} << (i - 1);
        if (!(p.sigma() & bit) && !(p.tau() & bit)) continue;
        if (!out.empty()) out += '*';
        out += (p.sigma() & bit) ? "x" + std::to_string(i) : "(1-x" + std::to_string(i) + ")";
    }
    return out;
}

Pseudomonomial parse_pseudomonomial(std::string_view text, int n) {
    text = trim(text);
    if (text.empty()) throw ParseError(0, "empty pseudomonomial");
    if (text == "1") return Pseudomonomial(n, 0, 0);

    std::uint32_t sigma = 0;
    std::uint32_t tau = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto star = text.find('*', start);
        std::string_view factor = trim(text.substr(start, star == std::string_view::npos ? text.npos : star - start));
        start = star == std::string_view::npos ? text.size() + 1 : star + 1;

        bool complement = false;
        if (factor.size() >= 2 && factor.front() == '(' && factor.back() == ')') {
            factor = trim(factor.substr(1, factor.size() - 2));
            if (factor.substr(0, 2) != "1-") {
                throw ParseError(0, "expected (1-x<i>) in \"" + std::string(text) + "\"");
            }
            factor = trim(factor.substr(2));
            complement = true;
        }
        if (factor.size() < 2 || factor.front() != 'x') {
            throw ParseError(0, "bad factor in pseudomonomial \"" + std::string(text) + "\"");
        }
        int index = 0;
        auto [ptr, ec] = std::from_chars(factor.data() + 1, factor.data() + factor.size(), index);
        if (ec != std::errc{} || ptr != factor.data() + factor.size() || index < 1) {
            throw ParseError(0, "bad index in pseudomonomial \"" + std::string(text) + "\"");
        }
        if (index > n) throw ParseError(0, "index " + std::to_string(index) + " exceeds neuron count");
        const std::uint32_t bit = std::uint32_t{1} << (index - 1);
        if ((sigma | tau) & bit) throw ParseError(0, "neuron " + std::to_string(index) + " repeated");
        (complement ? tau : sigma) |= bit;
    }
    return Pseudomonomial(n, sigma, tau);
}

bool evaluate(const Pseudomonomial& p, const Codeword& c) {
    if (p.neurons() != c.length()) {
        throw Error(ErrorKind::LengthMismatch, "pseudomonomial over " + std::to_string(p.neurons()) +
                                                   " neurons evaluated at a word of length " +
                                                   std::to_string(c.length()));
    }
    return (c.bits() & p.sigma()) == p.sigma() && (c.bits() & p.tau()) == 0;
}

std::vector<Pseudomonomial> vanishing_generators(const NeuralCode& code) {
    const int n = code.neurons();
    if (n > kMaxCodeNeurons) {
        throw Error(ErrorKind::OutOfRange, "code on " + std::to_string(n) + " neurons is too large to enumerate");
    }
    const std::uint32_t all = low_bits(n);
    std::vector<Pseudomonomial> out;
    out.reserve((std::size_t{1} << n) - code.size());
    auto word = code.words().begin();
    for (std::uint32_t v = 0; v <= all; ++v) {
        // Both sequences ascend by bits, so a merge walk replaces the lookup.
        while (word != code.words().end() && word->bits() < v) ++word;
        if (word != code.words().end() && word->bits() == v) continue;
        out.emplace_back(n, v, all & ~v);
        if (v == all) break;
    }
    return out;
}

bool pseudo_divides(const Pseudomonomial& p, const Pseudomonomial& q) {
    if (p.neurons() != q.neurons()) throw Error(ErrorKind::LengthMismatch, "pseudomonomials differ in n");
    return (p.sigma() & ~q.sigma()) == 0 && (p.tau() & ~q.tau()) == 0;
}

std::vector<Pseudomonomial> minimize_pseudos(std::vector<Pseudomonomial> ps) {
    std::sort(ps.begin(), ps.end(), [](const Pseudomonomial& a, const Pseudomonomial& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<Pseudomonomial> kept;
    for (const auto& p : ps) {
        const bool covered = std::any_of(kept.begin(), kept.end(),
                                         [&](const Pseudomonomial& k) { return pseudo_divides(k, p); });
        if (!covered) kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

Monomial polarize(const Pseudomonomial& p) {
    const int n = p.neurons();
    return Monomial(n, std::uint64_t{p.sigma()} | (std::uint64_t{p.tau()} << n));
}

PolarizedNeuralIdeal code_to_polarized_ideal(const NeuralCode& code) {
    auto pseudos = minimize_pseudos(vanishing_generators(code));
    std::vector<Monomial> gens;
    gens.reserve(pseudos.size());
    for (const auto& p : pseudos) gens.push_back(polarize(p));
    return validate_polarized_neural(MonomialIdeal(code.neurons(), std::move(gens)));
}

}  // namespace neurideal
