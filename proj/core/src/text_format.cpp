#include "neurideal/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace neurideal {

namespace {

struct Token {
    char kind;  // 'x' or 'y'
    int index;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Returns nullopt for the unit monomial `1`.
std::optional<std::vector<Token>> tokenize(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.empty()) throw ParseError(line, "empty monomial");
    if (text == "1") return std::nullopt;

    std::vector<Token> tokens;
    std::size_t pos = 0;
    bool expect_token = true;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c == '*') {
            if (expect_token) throw ParseError(line, "misplaced '*' in \"" + std::string(text) + "\"");
            expect_token = true;
            ++pos;
            continue;
        }
        if (c != 'x' && c != 'y') {
            throw ParseError(line, "unexpected character '" + std::string(1, c) + "' in \"" +
                                       std::string(text) + "\"");
        }
        ++pos;
        int index = 0;
        const auto* begin = text.data() + pos;
        const auto* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, index);
        if (ec != std::errc{} || ptr == begin) {
            throw ParseError(line, "variable '" + std::string(1, c) + "' lacks an index");
        }
        if (index < 1) throw ParseError(line, "variable indices are 1-based");
        pos += static_cast<std::size_t>(ptr - begin);
        tokens.push_back({c, index});
        expect_token = false;
    }
    if (expect_token) throw ParseError(line, "dangling '*' in \"" + std::string(text) + "\"");
    return tokens;
}

Monomial build(const std::optional<std::vector<Token>>& tokens, int n, std::size_t line) {
    std::uint64_t mask = 0;
    if (tokens) {
        for (const auto& t : *tokens) {
            if (t.index > n) {
                throw ParseError(line, std::string(1, t.kind) + std::to_string(t.index) +
                                           " exceeds neuron count " + std::to_string(n));
            }
            const int pos = t.kind == 'x' ? t.index - 1 : n + t.index - 1;
            const std::uint64_t bit = std::uint64_t{1} << pos;
            if (mask & bit) {
                throw ParseError(line, "repeated variable " + std::string(1, t.kind) +
                                           std::to_string(t.index) + " (monomials are squarefree)");
            }
            mask |= bit;
        }
    }
    return Monomial(n, mask);
}

int max_index(const std::optional<std::vector<Token>>& tokens) {
    int m = 0;
    if (tokens)
        for (const auto& t : *tokens) m = std::max(m, t.index);
    return m;
}

std::optional<int> neurons_directive(std::string_view comment, std::size_t line) {
    // comment starts after '#'
    comment = trim(comment);
    constexpr std::string_view key = "neurons:";
    if (comment.substr(0, key.size()) != key) return std::nullopt;
    auto rest = trim(comment.substr(key.size()));
    int n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
        throw ParseError(line, "malformed neurons directive");
    }
    return n;
}

void check_n(int n, std::size_t line) {
    if (n < 1 || n > kMaxNeurons) {
        throw ParseError(line, "neuron count " + std::to_string(n) + " outside [1, " +
                                   std::to_string(kMaxNeurons) + "]");
    }
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
    check_n(n, 0);
    return build(tokenize(text, 0), n, 0);
}

int max_neuron_index(std::string_view text) { return max_index(tokenize(text, 0)); }

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n) {
    std::vector<std::pair<std::size_t, std::optional<std::vector<Token>>>> rows;
    std::optional<int> directive;
    int largest = 0;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            if (auto d = neurons_directive(line.substr(hash + 1), line_no)) {
                if (directive && *directive != *d) throw ParseError(line_no, "conflicting neurons directives");
                directive = d;
            }
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        auto tokens = tokenize(line, line_no);
        largest = std::max(largest, max_index(tokens));
        rows.emplace_back(line_no, std::move(tokens));
    }

    if (n && directive && *n != *directive) {
        throw ParseError(0, "neuron count " + std::to_string(*n) + " conflicts with file directive " +
                                std::to_string(*directive));
    }
    const int count = n ? *n : directive ? *directive : std::max(largest, 1);
    check_n(count, 0);
    if (largest > count) {
        throw ParseError(0, "index " + std::to_string(largest) + " exceeds neuron count " +
                                std::to_string(count));
    }

    std::vector<Monomial> gens;
    gens.reserve(rows.size());
    for (const auto& [where, tokens] : rows) gens.push_back(build(tokens, count, where));
    return MonomialIdeal(count, std::move(gens));
}

std::string render_ideal(const MonomialIdeal& ideal) {
    std::string out = "# neurons: " + std::to_string(ideal.neurons()) + "\n";
    for (const auto& g : ideal.gens()) {
        out += to_string(g);
        out += '\n';
    }
    return out;
}

}  // namespace neurideal
