#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "neurideal/text_format.hpp"

#ifndef NEURIDEAL_TEST_DATA_DIR
#error "NEURIDEAL_TEST_DATA_DIR must point at tests/data"
#endif

using neurideal::cli::run;
namespace cli = neurideal::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "neurideal");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(NEURIDEAL_TEST_DATA_DIR) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("invariants") {
        const auto r = call({"invariants", data("pair.txt")});
        CHECK(r.code == cli::kOk);
        CHECK(has(r.out, "pd: 1\n"));
        CHECK(has(r.out, "reg: 1 "));
        const auto p = call({"invariants", data("prop33_n2_k1.txt")});
        CHECK(p.code == cli::kOk);
        CHECK(has(p.out, "reg: 2 "));
    }

    TEST_CASE("invariants json") {
        const auto r = call({"invariants", data("cross.txt"), "--json"});
        REQUIRE(r.code == cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == 1);
        CHECK(j["pd"] == 1);
        CHECK(j["reg"] == 3);
        CHECK(j["linear_resolution"] == false);
        CHECK(j["dominant"] == true);
        CHECK(j["betti"]["coarse"].size() == 2);
        const auto u = nlohmann::json::parse(call({"check-linear", data("unnested_linear.txt"), "--json"}).out);
        CHECK(u["linear_resolution"] == true);
        CHECK(u["linear_quotients"] == true);
        CHECK(u["recursive_linear_check"] == false);
        CHECK(u["refined_linear_check"] == true);
    }

    TEST_CASE("exit codes") {
        const auto v = call({"invariants", data("pair_violation.txt")});
        CHECK(v.code == cli::kPairViolation);
        CHECK(v.out.empty());
        CHECK(has(v.err, "x1*y1"));
        CHECK(call({"invariants", data("pair_violation.txt"), "--raw"}).code == cli::kOk);
        CHECK(call({"invariants", data("malformed.txt")}).code == cli::kInvalidInput);
        CHECK(call({"invariants", data("no_such_file.txt")}).code == cli::kInvalidInput);
        CHECK(call({"invariants", data("pair.txt"), "--field", "z7"}).code == cli::kUsage);
        CHECK(call({"frobnicate"}).code == cli::kUsage);
        CHECK(call({}).code == cli::kUsage);
        CHECK(call({"from-code", data("code_bad.txt")}).code == cli::kInvalidInput);
        CHECK(call({"family", "prop32", "--n", "3", "--k", "9"}).code == cli::kUsage);
        CHECK(call({"family", "nope", "--n", "3"}).code == cli::kUsage);
        CHECK(call({"verify", "--n", "4"}).code == cli::kUsage);
        CHECK(call({"--help"}).code == cli::kOk);
    }

    TEST_CASE("betti") {
        const auto r = call({"betti", data("pair.txt"), "--fine"});
        CHECK(r.code == cli::kOk);
        CHECK(has(r.out, "beta_{1, x1*y1} = 1"));
        CHECK(has(r.out, "pd 1, reg 1"));
        const auto q = call({"betti", data("cross.txt"), "--field", "q", "--json"});
        CHECK(nlohmann::json::parse(q.out)["reg"] == 3);
    }

    TEST_CASE("check-linear") {
        const auto r = call({"check-linear", data("prop33_n2_k1.txt"), "--pivot", "smallest"});
        CHECK(r.code == cli::kOk);
        CHECK(has(r.out, "linear resolution (homology): yes"));
        CHECK(has(r.out, "recursive split check: yes"));
        CHECK(call({"check-linear", data("pair.txt"), "--pivot", "middle"}).code == cli::kUsage);
    }

    TEST_CASE("from-code") {
        const auto r = call({"from-code", data("code_00_11.txt")});
        CHECK(r.code == cli::kOk);
        CHECK(neurideal::parse_ideal(r.out) == neurideal::parse_ideal("x1*y2\ny1*x2\n"));
        const auto one = call({"from-code", data("code_1.txt")});
        CHECK(neurideal::parse_ideal(one.out) == neurideal::parse_ideal("y1\n"));
        const auto full = call({"from-code", data("code_full.txt")});
        CHECK(full.code == cli::kOk);
        CHECK(has(full.out, "zero ideal"));
        const auto inv = call({"from-code", data("code_00_11.txt"), "--invariants"});
        CHECK(has(inv.out, "reg: 3 "));
        const auto j = nlohmann::json::parse(call({"from-code", data("code_00_11.txt"), "--json"}).out);
        CHECK(j["generators"].size() == 2);
    }

    TEST_CASE("polarize") {
        const auto r = call({"polarize", data("pseudos.txt")});
        CHECK(r.code == cli::kOk);
        CHECK(neurideal::parse_ideal(r.out) == neurideal::parse_ideal("x1*y2\ny1*x2\n"));
    }

    TEST_CASE("family") {
        const auto t = call({"family", "thm36", "--n", "3", "--k", "3", "--check"});
        CHECK(t.code == cli::kOk);
        CHECK(has(t.out, "computed pd 3, reg 3 -> OK"));
        CHECK(neurideal::parse_ideal(t.out).size() == 8);
        CHECK(call({"family", "prop32", "--n", "4", "--k", "1", "--check"}).code == cli::kOk);
        const auto r = call({"family", "prop34-reg", "--n", "3", "--j", "5", "--check", "--json"});
        CHECK(r.code == cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["reg"] == 5);
        CHECK(j["check"] == true);
        CHECK(call({"family", "prop32", "--n", "3"}).code == cli::kUsage);
    }

    TEST_CASE("round trip of every emitted ideal") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"family", "thm36", "--n", "4", "--k", "3"},
                 {"family", "prop33", "--n", "4", "--k", "2"},
                 {"family", "prop34-pd", "--n", "2", "--i", "3"},
                 {"from-code", data("code_00_11.txt")},
                 {"polarize", data("pseudos.txt")},
             }) {
            const auto r = call(args);
            REQUIRE(r.code == cli::kOk);
            const auto parsed = neurideal::parse_ideal(r.out);
            CHECK(neurideal::render_ideal(parsed) == r.out.substr(r.out.find("# neurons:")));
        }
    }

    TEST_CASE("verify") {
        const auto ok = call({"verify", "--n", "2", "--threads", "1"});
        CHECK(ok.code == cli::kOk);
        CHECK(has(ok.out, "ideals examined: 15"));
        const auto three = call({"verify", "--n", "3"});
        CHECK(three.code == cli::kCheckFailed);
        CHECK(has(three.out, "COUNTEREXAMPLE [lr_lq_recursive_agreement]"));
        const auto a = call({"verify", "--n", "4", "--mode", "sample", "--count", "30", "--seed", "5", "--json"});
        const auto b = call({"verify", "--n", "4", "--mode", "sample", "--count", "30", "--seed", "5", "--json",
                             "--threads", "1"});
        CHECK(a.out == b.out);
        CHECK(nlohmann::json::parse(a.out)["scope"]["seed"] == 5);
        CHECK(call({"verify", "--n", "2", "--mode", "bogus"}).code == cli::kUsage);
    }

    TEST_CASE("json output is byte-identical across runs") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"invariants", data("cross.txt"), "--json"},
                 {"betti", data("prop33_n2_k1.txt"), "--json"},
                 {"family", "thm36", "--n", "3", "--k", "2", "--check", "--json"},
             }) {
            CHECK(call(args).out == call(args).out);
        }
    }
}
