#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "neurideal/betti.hpp"
#include "neurideal/families.hpp"
#include "neurideal/json_io.hpp"
#include "neurideal/neural_code.hpp"
#include "neurideal/structure.hpp"
#include "neurideal/text_format.hpp"
#include "neurideal/verify.hpp"

namespace neurideal::cli {

namespace {

using nlohmann::ordered_json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    buf << in.rdbuf();
    return buf.str();
}

Field field_from(const std::string& name) {
    if (auto f = parse_field(name)) return *f;
    throw Usage("unknown field '" + name + "' (expected f2 or q)");
}

PivotRule pivot_from(const std::string& name) {
    if (name == "last") return PivotRule::Last;
    if (name == "smallest") return PivotRule::Smallest;
    throw Usage("unknown pivot rule '" + name + "' (expected last or smallest)");
}

ordered_json gens_json(const MonomialIdeal& ideal) {
    ordered_json a = ordered_json::array();
    for (const auto& g : ideal.gens()) a.push_back(to_string(g));
    return a;
}

std::string gens_line(const MonomialIdeal& ideal) {
    std::string s;
    for (const auto& g : ideal.gens()) s += (s.empty() ? "" : ", ") + to_string(g);
    return "(" + s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Options shared by the commands that read an ideal file.
struct IdealInput {
    std::string path;
    std::optional<int> n;
    bool raw = false;
    std::string field = "f2";
    bool json = false;
};

void add_ideal_options(CLI::App* cmd, IdealInput& in) {
    cmd->add_option("file", in.path, "ideal file, one monomial per line ('-' for stdin)")->required();
    cmd->add_option("--n", in.n, "neuron count (default: from the file)");
    cmd->add_flag("--raw", in.raw, "accept any squarefree ideal, not only polarized neural ones");
    cmd->add_option("--field", in.field, "coefficient field: f2 or q")->capture_default_str();
    cmd->add_flag("--json", in.json, "machine-readable output");
}

MonomialIdeal load_ideal(const IdealInput& in) {
    MonomialIdeal ideal = parse_ideal(read_input(in.path), in.n);
    if (!in.raw) (void)validate_polarized_neural(ideal);
    require_proper_nonzero(ideal);
    return ideal;
}

std::optional<PolarizedNeuralIdeal> as_polarized(const MonomialIdeal& ideal) {
    try {
        return validate_polarized_neural(ideal);
    } catch (const PairViolation&) {
        return std::nullopt;
    }
}

struct SplitChecks {
    bool nested;
    bool refined;
};

std::optional<SplitChecks> recursive_if_degree_n(const MonomialIdeal& ideal, PivotRule pivot) {
    const auto p = as_polarized(ideal);
    const auto d = equigenerated_degree(ideal);
    if (!p || !d || *d != ideal.neurons()) return std::nullopt;
    return SplitChecks{recursive_linear_check(*p, pivot), refined_linear_check(*p, pivot)};
}

ordered_json split_json(const std::optional<SplitChecks>& c, bool refined) {
    if (!c) return nullptr;
    return refined ? c->refined : c->nested;
}

/// Full invariant report, shared by `invariants` and `from-code --invariants`.
void report_invariants(const MonomialIdeal& ideal, Field field, bool json, std::ostream& out) {
    const BettiTable table = betti_table(ideal, field);
    const auto lr = check_linear_resolution(ideal, field);
    const auto degree = equigenerated_degree(ideal);
    const auto lq = linear_quotients_search(ideal);
    const auto witness = dominant_check(ideal);
    const auto recursive = recursive_if_degree_n(ideal, PivotRule::Last);
    const bool polarized = as_polarized(ideal).has_value();

    if (json) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "invariants";
        j["n"] = ideal.neurons();
        j["field"] = std::string(to_string(field));
        j["generators"] = gens_json(ideal);
        j["polarized_neural"] = polarized;
        j["pd"] = table.pd();
        j["reg"] = table.reg();
        j["reg_upper_bound_lcm"] = reg_upper_bound_lcm(ideal);
        j["betti"] = ordered_json::parse(betti_table_json(table, -1));
        j["equigenerated_degree"] = degree ? ordered_json(*degree) : ordered_json(nullptr);
        j["linear_resolution"] = lr.linear;
        if (lr.warning) j["linear_resolution_warning"] = *lr.warning;
        j["linear_quotients"] = lq.has_value();
        if (lq) {
            ordered_json order = ordered_json::array();
            for (const auto& m : lq->order) order.push_back(to_string(m));
            j["linear_quotient_order"] = std::move(order);
        }
        j["dominant"] = witness.has_value();
        if (witness) {
            ordered_json w = ordered_json::array();
            for (int pos : *witness) w.push_back(variable_name(ideal.neurons(), pos));
            j["dominant_witness"] = std::move(w);
        }
        j["recursive_linear_check"] = split_json(recursive, false);
        j["refined_linear_check"] = split_json(recursive, true);
        out << j.dump(2) << '\n';
        return;
    }

    out << "ideal: " << gens_line(ideal) << "  [n=" << ideal.neurons() << ", " << ideal.size()
        << " generators" << (polarized ? "" : ", not polarized neural") << "]\n";
    out << "field: " << to_string(field) << '\n';
    out << "pd: " << table.pd() << '\n';
    out << "reg: " << table.reg() << "  (lcm bound " << reg_upper_bound_lcm(ideal) << ")\n";
    out << "betti table (rows j-i, columns i):\n" << render_coarse(table);
    out << "equigenerated: " << (degree ? "degree " + std::to_string(*degree) : std::string("no")) << '\n';
    out << "linear resolution: " << yes_no(lr.linear);
    if (lr.warning) out << "  (" << *lr.warning << ")";
    out << '\n';
    out << "linear quotients: " << yes_no(lq.has_value());
    if (lq) {
        out << "  order:";
        for (const auto& m : lq->order) out << ' ' << to_string(m);
    }
    out << '\n';
    out << "dominant: " << yes_no(witness.has_value());
    if (witness) {
        const Invariants closed = dominant_invariants(ideal);
        out << "  witnesses:";
        for (int pos : *witness) out << ' ' << variable_name(ideal.neurons(), pos);
        out << "  closed form pd " << closed.pd << ", reg " << closed.reg;
    }
    out << '\n';
    if (recursive) {
        out << "recursive linear check: " << yes_no(recursive->nested) << '\n';
        out << "refined linear check: " << yes_no(recursive->refined) << '\n';
    }
}

int cmd_invariants(const IdealInput& in, std::ostream& out) {
    report_invariants(load_ideal(in), field_from(in.field), in.json, out);
    return kOk;
}

int cmd_betti(const IdealInput& in, bool fine, std::ostream& out) {
    const MonomialIdeal ideal = load_ideal(in);
    const BettiTable table = betti_table(ideal, field_from(in.field));
    if (in.json) {
        auto j = ordered_json::parse(betti_table_json(table, -1));
        ordered_json wrapped;
        wrapped["schema"] = 1;
        wrapped["command"] = "betti";
        for (auto& [k, v] : j.items()) wrapped[k] = v;
        out << wrapped.dump(2) << '\n';
        return kOk;
    }
    out << render_coarse(table);
    if (fine) {
        for (const auto& [key, rank] : table.fine())
            out << "beta_{" << key.i << ", " << to_string(key.b) << "} = " << rank << '\n';
    }
    out << "pd " << table.pd() << ", reg " << table.reg() << '\n';
    return kOk;
}

int cmd_check_linear(const IdealInput& in, const std::string& pivot_name, std::ostream& out) {
    const MonomialIdeal ideal = load_ideal(in);
    const Field field = field_from(in.field);
    const PivotRule pivot = pivot_from(pivot_name);
    const auto lr = check_linear_resolution(ideal, field);
    const auto lq = linear_quotients_search(ideal);
    const auto recursive = recursive_if_degree_n(ideal, pivot);

    if (in.json) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "check-linear";
        j["generators"] = gens_json(ideal);
        j["linear_resolution"] = lr.linear;
        if (lr.warning) j["linear_resolution_warning"] = *lr.warning;
        j["linear_quotients"] = lq.has_value();
        if (lq) {
            ordered_json order = ordered_json::array();
            for (const auto& m : lq->order) order.push_back(to_string(m));
            j["linear_quotient_order"] = std::move(order);
        }
        j["recursive_linear_check"] = split_json(recursive, false);
        j["refined_linear_check"] = split_json(recursive, true);
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "linear resolution (homology): " << yes_no(lr.linear);
    if (lr.warning) out << "  (" << *lr.warning << ")";
    out << "\nlinear quotients (search): " << yes_no(lq.has_value());
    if (lq) {
        out << "  order:";
        for (const auto& m : lq->order) out << ' ' << to_string(m);
    }
    const std::string na = "n/a (needs a degree-n polarized neural ideal)";
    out << "\nrecursive split check: " << (recursive ? yes_no(recursive->nested) : na) << '\n';
    out << "refined split check: " << (recursive ? yes_no(recursive->refined) : na) << '\n';
    return kOk;
}

int cmd_from_code(const std::string& path, std::optional<int> n, bool with_invariants, const std::string& field,
                  bool json, std::ostream& out) {
    const NeuralCode code = parse_code(read_input(path), n);
    const PolarizedNeuralIdeal ideal = code_to_polarized_ideal(code);
    if (ideal.ideal().is_zero()) {
        if (json) {
            ordered_json j{{"schema", 1}, {"command", "from-code"}, {"n", code.neurons()},
                           {"codewords", code.size()}, {"zero_ideal", true}, {"generators", ordered_json::array()}};
            out << j.dump(2) << '\n';
        } else {
            out << "# zero ideal: the code contains every word of {0,1}^" << code.neurons() << '\n';
        }
        return kOk;
    }
    if (json && !with_invariants) {
        ordered_json j{{"schema", 1},           {"command", "from-code"}, {"n", code.neurons()},
                       {"codewords", code.size()}, {"zero_ideal", false},   {"generators", gens_json(ideal.ideal())}};
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (!json) out << render_ideal(ideal.ideal());
    if (with_invariants) {
        if (!json) out << '\n';
        report_invariants(ideal.ideal(), field_from(field), json, out);
    }
    return kOk;
}

int cmd_polarize(const std::string& path, std::optional<int> n, std::ostream& out) {
    const std::string text = read_input(path);
    std::vector<std::string> lines;
    int largest = 0;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        for (std::size_t p = line.find('x'); p != std::string::npos; p = line.find('x', p + 1))
            largest = std::max(largest, std::atoi(line.c_str() + p + 1));
        lines.push_back(line);
    }
    const int count = n ? *n : std::max(largest, 1);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            gens.push_back(polarize(parse_pseudomonomial(lines[i], count)));
        } catch (const ParseError& e) {
            throw ParseError(i + 1, e.what());
        }
    }
    out << render_ideal(validate_polarized_neural(MonomialIdeal(count, std::move(gens))).ideal());
    return kOk;
}

struct FamilyArgs {
    std::string name;
    int n = 0;
    std::optional<int> k, i, j;
    bool check = false;
    std::string field = "f2";
    bool json = false;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw Usage("family " + a.name + " needs " + flag);
        return *v;
    };
    std::optional<MonomialIdeal> ideal;
    std::optional<int> expected_pd;
    std::optional<int> expected_reg;
    std::string params;
    if (a.name == "prop32") {
        const int k = need(a.k, "--k");
        ideal = family_prop32(a.n, k).ideal();
        expected_pd = k - 1;
        params = "k=" + std::to_string(k);
    } else if (a.name == "prop33") {
        const int k = need(a.k, "--k");
        ideal = family_prop33(a.n, k).ideal();
        expected_reg = a.n + k - 1;
        params = "k=" + std::to_string(k);
    } else if (a.name == "prop34-pd") {
        const int i = need(a.i, "--i");
        ideal = family_prop34_pd(a.n, i).ideal();
        expected_pd = i;
        params = "i=" + std::to_string(i);
    } else if (a.name == "prop34-reg") {
        const int j = need(a.j, "--j");
        ideal = family_prop34_reg(a.n, j);
        expected_reg = j;
        params = "j=" + std::to_string(j);
    } else if (a.name == "thm36") {
        const int k = need(a.k, "--k");
        ideal = family_thm36(a.n, k).ideal();
        expected_pd = k;
        expected_reg = k;
        params = "k=" + std::to_string(k);
    } else {
        throw Usage("unknown family '" + a.name + "' (prop32, prop33, prop34-pd, prop34-reg, thm36)");
    }

    const bool polarized = as_polarized(*ideal).has_value();
    std::optional<Invariants> computed;
    bool ok = true;
    if (a.check) {
        computed = invariants(*ideal, field_from(a.field));
        if (expected_pd && computed->pd != *expected_pd) ok = false;
        if (expected_reg && computed->reg != *expected_reg) ok = false;
    }

    if (a.json) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "family";
        j["family"] = a.name;
        j["n"] = a.n;
        j["params"] = params;
        j["generators"] = gens_json(*ideal);
        j["polarized_neural"] = polarized;
        j["expected_pd"] = expected_pd ? ordered_json(*expected_pd) : ordered_json(nullptr);
        j["expected_reg"] = expected_reg ? ordered_json(*expected_reg) : ordered_json(nullptr);
        if (computed) {
            j["pd"] = computed->pd;
            j["reg"] = computed->reg;
            j["check"] = ok;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "# family " << a.name << " n=" << a.n << ' ' << params << '\n';
        if (!polarized) out << "# note: generator is divisible by some x_i*y_i (not polarized neural)\n";
        if (expected_pd) out << "# expected pd " << *expected_pd << '\n';
        if (expected_reg) out << "# expected reg " << *expected_reg << '\n';
        if (computed) {
            out << "# computed pd " << computed->pd << ", reg " << computed->reg << " -> "
                << (ok ? "OK" : "MISMATCH") << '\n';
        }
        out << render_ideal(*ideal);
    }
    return ok ? kOk : kCheckFailed;
}

struct VerifyArgs {
    int n = 2;
    std::string mode = "exhaustive";
    std::string universe = "degree-n";
    std::uint64_t seed = 1;
    std::size_t count = 500;
    std::string field = "f2";
    std::string pivot = "last";
    unsigned threads = 0;
    bool compare_fields = false;
    bool json = false;
    bool timings = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions o;
    o.n = a.n;
    if (a.mode == "exhaustive")
        o.mode = VerifyMode::Exhaustive;
    else if (a.mode == "sample")
        o.mode = VerifyMode::Sample;
    else
        throw Usage("unknown mode '" + a.mode + "' (exhaustive or sample)");
    if (a.universe == "degree-n")
        o.universe = Universe::DegreeN;
    else if (a.universe == "all")
        o.universe = Universe::All;
    else
        throw Usage("unknown universe '" + a.universe + "' (degree-n or all)");
    o.seed = a.seed;
    o.count = a.count;
    o.field = field_from(a.field);
    o.pivot = pivot_from(a.pivot);
    o.threads = a.threads;
    o.compare_fields = a.compare_fields;

    VerificationReport report;
    try {
        report = run_verification(o);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::OutOfRange) throw Usage(e.what());
        throw;
    }
    out << (a.json ? report_json(report, a.timings) : report_text(report));
    return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homological invariants of polarized neural ideals"};
    app.name(args.empty() ? "neurideal" : args.front());
    app.require_subcommand(1);

    IdealInput inv_in;
    auto* inv = app.add_subcommand("invariants", "pd, reg, Betti table, linear resolution/quotients, dominance");
    add_ideal_options(inv, inv_in);

    IdealInput betti_in;
    bool betti_fine = false;
    auto* betti = app.add_subcommand("betti", "multigraded and graded Betti numbers");
    add_ideal_options(betti, betti_in);
    betti->add_flag("--fine", betti_fine, "also list every multigraded Betti number");

    IdealInput lin_in;
    std::string lin_pivot = "last";
    auto* lin = app.add_subcommand("check-linear", "linear resolution three ways: homology, quotients, splitting");
    add_ideal_options(lin, lin_in);
    lin->add_option("--pivot", lin_pivot, "split pivot: last or smallest")->capture_default_str();

    std::string code_path;
    std::optional<int> code_n;
    bool code_inv = false;
    std::string code_field = "f2";
    bool code_json = false;
    auto* from_code = app.add_subcommand("from-code", "polarized neural ideal of a binary neural code");
    from_code->add_option("file", code_path, "code file, one binary word per line ('-' for stdin)")->required();
    from_code->add_option("--n", code_n, "neuron count (needed only for an empty code)");
    from_code->add_flag("--invariants", code_inv, "append the full invariant report");
    from_code->add_option("--field", code_field, "coefficient field: f2 or q")->capture_default_str();
    from_code->add_flag("--json", code_json, "machine-readable output");

    std::string pol_path;
    std::optional<int> pol_n;
    auto* pol = app.add_subcommand("polarize", "polarize pseudomonomials such as x1*(1-x2)");
    pol->add_option("file", pol_path, "one pseudomonomial per line ('-' for stdin)")->required();
    pol->add_option("--n", pol_n, "neuron count (default: largest index)");

    FamilyArgs fam;
    auto* family = app.add_subcommand("family", "witness families: prop32, prop33, prop34-pd, prop34-reg, thm36");
    family->add_option("name", fam.name, "family name")->required();
    family->add_option("--n", fam.n, "neuron count")->required();
    family->add_option("--k", fam.k, "k parameter (prop32, prop33, thm36)");
    family->add_option("--i", fam.i, "target projective dimension (prop34-pd)");
    family->add_option("--j", fam.j, "target regularity (prop34-reg)");
    family->add_flag("--check", fam.check, "recompute pd/reg with the Betti oracle and compare");
    family->add_option("--field", fam.field, "coefficient field for --check: f2 or q")->capture_default_str();
    family->add_flag("--json", fam.json, "machine-readable output");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check every structural property over an ideal enumeration");
    verify->add_option("--n", ver.n, "neuron count")->required();
    verify->add_option("--mode", ver.mode, "exhaustive or sample")->capture_default_str();
    verify->add_option("--universe", ver.universe, "degree-n or all")->capture_default_str();
    verify->add_option("--seed", ver.seed, "PRNG seed for sample mode")->capture_default_str();
    verify->add_option("--count", ver.count, "ideals drawn in sample mode")->capture_default_str();
    verify->add_option("--field", ver.field, "coefficient field: f2 or q")->capture_default_str();
    verify->add_option("--pivot", ver.pivot, "split pivot: last or smallest")->capture_default_str();
    verify->add_option("--threads", ver.threads, "worker threads (0 = all cores)")->capture_default_str();
    verify->add_flag("--compare-fields", ver.compare_fields, "also compare Betti tables over f2 and q");
    verify->add_flag("--json", ver.json, "machine-readable report");
    verify->add_flag("--timings", ver.timings, "include wall-clock timings in the JSON report");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*inv) return cmd_invariants(inv_in, out);
        if (*betti) return cmd_betti(betti_in, betti_fine, out);
        if (*lin) return cmd_check_linear(lin_in, lin_pivot, out);
        if (*from_code) return cmd_from_code(code_path, code_n, code_inv, code_field, code_json, out);
        if (*pol) return cmd_polarize(pol_path, pol_n, out);
        if (*family) return cmd_family(fam, out);
        if (*verify) return cmd_verify(ver, out);
    } catch (const Usage& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PairViolation& e) {
        err << "error: " << e.what() << " (pass --raw to accept it)\n";
        return kPairViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::OutOfRange ? kUsage : kInvalidInput;
    }
    return kUsage;
}

}  // namespace neurideal::cli
