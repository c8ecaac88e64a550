#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "neurideal/enumerate.hpp"
#include "neurideal/error.hpp"
#include "neurideal/neural_code.hpp"
#include "neurideal/text_format.hpp"

using namespace neurideal;
using testing_support::ideal;
using testing_support::mono;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("text_format") {
    TEST_CASE("monomial syntax") {
        CHECK(parse_monomial("x1*y2*x3", 3) == parse_monomial("x1 y2 x3", 3));
        CHECK(parse_monomial("1", 2).is_unit());
        CHECK(parse_monomial("  y2 ", 2) == Monomial::y(2, 2));
        CHECK(kind_of([] { (void)parse_monomial("x0", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_monomial("x1**y1", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_monomial("z1", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_monomial("x1*x1", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_monomial("x3", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_monomial("x1*", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_monomial("", 2); }) == ErrorKind::Parse);
        CHECK(max_neuron_index("x1*y7") == 7);
    }

    TEST_CASE("ideal files") {
        const auto i = parse_ideal("# a comment\nx1*y2\n\ny1*x2  # trailing\n");
        CHECK(i == ideal(2, {"x1*y2", "y1*x2"}));
        CHECK(parse_ideal("x1\n", 3).neurons() == 3);
        CHECK(parse_ideal("# neurons: 4\nx1\n").neurons() == 4);
        CHECK(parse_ideal("").is_zero());
        CHECK(kind_of([] { (void)parse_ideal("x3\n", 2); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_ideal("# neurons: 2\nx1\n", 3); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_ideal("# neurons: 2\n# neurons: 3\n"); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_ideal("# neurons: two\n"); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_ideal("x33\n"); }) == ErrorKind::Parse);
    }

    TEST_CASE("parse error carries its line") {
        try {
            (void)parse_ideal("x1\nx1*q2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }

    TEST_CASE("render round trip") {
        Rng rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(uniform_below(rng, 5));
            const MonomialIdeal i = random_polarized_neural_ideal(n, rng).ideal();
            CHECK(parse_ideal(render_ideal(i)) == i);
        }
        const MonomialIdeal unused_top = ideal(4, {"x1"});
        CHECK(parse_ideal(render_ideal(unused_top)) == unused_top);
        CHECK(parse_ideal(render_ideal(MonomialIdeal::unit(2))).is_unit());
    }
}

TEST_SUITE("neural_code") {
    TEST_CASE("codewords") {
        const Codeword c = Codeword::parse("10");
        CHECK(c.length() == 2);
        CHECK(c.at(1));
        CHECK_FALSE(c.at(2));
        CHECK(to_string(c) == "10");
        CHECK_THROWS_AS(Codeword::parse("102"), ParseError);
    }

    TEST_CASE("code files") {
        const NeuralCode code = parse_code("# c\n11\n00\n11\n");
        CHECK(code.neurons() == 2);
        CHECK(code.size() == 2);
        CHECK(code.contains(Codeword::parse("00")));
        CHECK_FALSE(code.contains(Codeword::parse("01")));
        CHECK(kind_of([] { (void)parse_code("10\n101\n"); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_code("10\n", 3); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)parse_code("# nothing\n"); }) == ErrorKind::Parse);
        CHECK(parse_code("", 2).size() == 0);
    }

    TEST_CASE("evaluate") {
        const Pseudomonomial p(2, 0b01, 0b10);
        CHECK(evaluate(p, Codeword::parse("10")));
        CHECK_FALSE(evaluate(p, Codeword::parse("01")));
        const Pseudomonomial one(2, 0, 0);
        for (auto w : {"00", "01", "10", "11"}) CHECK(evaluate(one, Codeword::parse(w)));
        CHECK(kind_of([&] { (void)evaluate(p, Codeword::parse("101")); }) == ErrorKind::LengthMismatch);
    }

    TEST_CASE("pseudomonomial text") {
        const Pseudomonomial p = parse_pseudomonomial("x1*(1-x2)", 2);
        CHECK(p == Pseudomonomial(2, 0b01, 0b10));
        CHECK(to_string(p) == "x1*(1-x2)");
        CHECK(to_string(Pseudomonomial(2, 0, 0)) == "1");
        CHECK_THROWS_AS(Pseudomonomial(2, 1, 1), Error);
    }

    TEST_CASE("vanishing generators") {
        const auto gens = vanishing_generators(parse_code("00\n11\n"));
        REQUIRE(gens.size() == 2);
        CHECK(gens[0] == Pseudomonomial(2, 0b01, 0b10));
        CHECK(gens[1] == Pseudomonomial(2, 0b10, 0b01));
        CHECK(vanishing_generators(parse_code("00\n01\n10\n11\n")).empty());
        const auto empty = vanishing_generators(NeuralCode(1, {}));
        REQUIRE(empty.size() == 2);
        CHECK(empty[0] == Pseudomonomial(1, 0, 1));
        CHECK(empty[1] == Pseudomonomial(1, 1, 0));
    }

    TEST_CASE("pseudo divisibility and minimization") {
        const Pseudomonomial a(2, 0b01, 0);
        const Pseudomonomial b(2, 0b01, 0b10);
        const Pseudomonomial c(2, 0b10, 0b01);
        CHECK(pseudo_divides(a, b));
        CHECK(pseudo_divides(b, b));
        CHECK_FALSE(pseudo_divides(a, c));
        CHECK(minimize_pseudos({a, b}) == std::vector<Pseudomonomial>{a});
        CHECK(minimize_pseudos({}).empty());
        Rng rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            const auto gens = vanishing_generators(random_code(1 + static_cast<int>(uniform_below(rng, 4)), rng));
            CHECK(minimize_pseudos(gens) == gens);
        }
    }

    TEST_CASE("polarize") {
        CHECK(polarize(Pseudomonomial(2, 0b01, 0b10)) == mono(2, "x1*y2"));
        CHECK(polarize(Pseudomonomial(2, 0b11, 0)) == mono(2, "x1*x2"));
        CHECK(polarize(Pseudomonomial(2, 0, 0)).is_unit());
    }

    TEST_CASE("polarize is injective and pair excluding") {
        const int n = 3;
        std::set<std::uint64_t> seen;
        int count = 0;
        for (std::uint32_t s = 0; s < 8; ++s)
            for (std::uint32_t t = 0; t < 8; ++t) {
                if (s & t) continue;
                const Monomial m = polarize(Pseudomonomial(n, s, t));
                CHECK(m.first_pair_violation() == 0);
                seen.insert(m.mask());
                ++count;
            }
        CHECK(seen.size() == static_cast<std::size_t>(count));
    }

    TEST_CASE("code to ideal examples") {
        CHECK(code_to_polarized_ideal(parse_code("00\n11\n")).ideal() == ideal(2, {"x1*y2", "y1*x2"}));
        CHECK(code_to_polarized_ideal(parse_code("1\n")).ideal() == ideal(1, {"y1"}));
        CHECK(code_to_polarized_ideal(parse_code("11\n")).ideal() == ideal(2, {"y1*y2", "y1*x2", "x1*y2"}));
        CHECK(code_to_polarized_ideal(parse_code("0\n1\n")).ideal().is_zero());
    }

    TEST_CASE("vanishing soundness and sharpness, exhaustive to n = 3") {
        for (int n = 1; n <= 3; ++n) {
            const std::uint32_t words = 1u << n;
            for (std::uint32_t subset = 0; subset < (1u << words); ++subset) {
                std::vector<Codeword> cs;
                for (std::uint32_t v = 0; v < words; ++v)
                    if ((subset >> v) & 1u) cs.emplace_back(n, v);
                const NeuralCode code(n, cs);
                const auto gens = vanishing_generators(code);
                CHECK(gens.size() == words - code.size());
                for (const auto& p : gens) {
                    CHECK((p.sigma() | p.tau()) == words - 1);
                    for (const auto& c : code.words()) CHECK_FALSE(evaluate(p, c));
                    CHECK(evaluate(p, Codeword(n, p.sigma())));
                }
                const auto i = code_to_polarized_ideal(code);
                CHECK(i.ideal().size() == gens.size());
                if (!i.ideal().is_zero()) CHECK(equigenerated_degree(i.ideal()) == n);
            }
        }
    }
}
