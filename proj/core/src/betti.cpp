#include "neurideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>
#include <iomanip>

#include "neurideal/homology.hpp"

namespace neurideal {

BettiTable::BettiTable(int n, FineBetti fine) : n_(n) {
    for (auto& [key, rank] : fine) {
        if (rank == 0) continue;
        fine_.emplace(key, rank);
        coarse_[{key.i, key.b.degree()}] += rank;
    }
}

std::size_t BettiTable::at(int i, const Monomial& b) const {
    const auto it = fine_.find(FineKey{i, b});
    return it == fine_.end() ? 0 : it->second;
}

std::size_t BettiTable::coarse_at(int i, int j) const {
    const auto it = coarse_.find({i, j});
    return it == coarse_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
    std::size_t sum = 0;
    for (const auto& [key, rank] : coarse_)
        if (key.first == i) sum += rank;
    return sum;
}

int BettiTable::pd() const noexcept {
    int pd = -1;
    for (const auto& [key, rank] : coarse_) pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::reg() const noexcept {
    int reg = -1;
    for (const auto& [key, rank] : coarse_) reg = std::max(reg, key.second - key.first);
    return reg;
}

std::string render_coarse(const BettiTable& table) {
    if (table.coarse().empty()) return "(empty)\n";
    int lo = std::numeric_limits<int>::max();
    for (const auto& [key, rank] : table.coarse()) lo = std::min(lo, key.second - key.first);
    const int pd = table.pd();
    const int reg = table.reg();

    std::ostringstream os;
    os << std::setw(6) << "";
    for (int i = 0; i <= pd; ++i) os << std::setw(6) << i;
    os << '\n' << std::setw(6) << "total:";
    for (int i = 0; i <= pd; ++i) os << std::setw(6) << table.total(i);
    os << '\n';
    for (int r = lo; r <= reg; ++r) {
        os << std::setw(5) << r << ':';
        for (int i = 0; i <= pd; ++i) {
            const auto v = table.coarse_at(i, i + r);
            if (v == 0)
                os << std::setw(6) << '.';
            else
                os << std::setw(6) << v;
        }
        os << '\n';
    }
    return os.str();
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
    require_proper_nonzero(ideal);
    std::vector<std::uint64_t> divisors;
    for (const auto& g : ideal.gens())
        if (g.divides(b)) divisors.push_back(g.mask());

    const std::uint64_t support = b.mask();
    std::vector<std::uint64_t> faces;
    auto in_ideal = [&](std::uint64_t m) {
        return std::any_of(divisors.begin(), divisors.end(), [&](std::uint64_t g) { return (g & ~m) == 0; });
    };
    // Walk every submask tau of supp(b), including the empty one.
    std::uint64_t tau = support;
    while (true) {
        if (in_ideal(support & ~tau)) faces.push_back(tau);
        if (tau == 0) break;
        tau = (tau - 1) & support;
    }
    if (faces.empty()) return SimplicialComplex::void_complex(support);
    return SimplicialComplex::from_faces(support, std::move(faces));
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal) {
    std::set<std::uint64_t> closure;
    for (const auto& g : ideal.gens()) {
        std::vector<std::uint64_t> fresh{g.mask()};
        for (auto m : closure) fresh.push_back(m | g.mask());
        closure.insert(fresh.begin(), fresh.end());
    }
    std::vector<Monomial> out;
    out.reserve(closure.size());
    for (auto m : closure) out.emplace_back(ideal.neurons(), m);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Squeezes the bits of `value` selected by `select` into the low bits.
std::uint64_t compress(std::uint64_t value, std::uint64_t select) {
    std::uint64_t out = 0;
    int k = 0;
    for (std::uint64_t rest = select; rest != 0; rest &= rest - 1, ++k) {
        if (value & rest & (~rest + 1)) out |= std::uint64_t{1} << k;
    }
    return out;
}

// Memo key: the complex relabelled onto 0..d-1, as the indicator of its faces.
struct LocalComplexKey {
    int d;
    std::vector<std::uint64_t> faces;

    friend auto operator<=>(const LocalComplexKey&, const LocalComplexKey&) = default;
};

// Face indicators above this support size are too wide to be worth keying.
constexpr int kMemoMaxDegree = 16;

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, Field f) {
    require_proper_nonzero(ideal);
    std::map<LocalComplexKey, std::map<int, std::size_t>> memo;
    FineBetti fine;

    for (const auto& b : lcm_closure(ideal)) {
        const SimplicialComplex complex = upper_koszul(ideal, b);
        const int d = b.degree();
        if (d > kMemoMaxDegree) {
            for (const auto& [dim, rank] : reduced_homology_ranks(complex, f)) fine[FineKey{dim + 1, b}] = rank;
            continue;
        }

        LocalComplexKey key{d, std::vector<std::uint64_t>(((std::size_t{1} << d) + 63) / 64, 0)};
        for (const auto& group : complex.faces_by_dimension()) {
            for (auto face : group) {
                const std::uint64_t local = compress(face, b.mask());
                key.faces[local / 64] |= std::uint64_t{1} << (local % 64);
            }
        }

        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(std::move(key), reduced_homology_ranks(complex, f)).first;
        for (const auto& [dim, rank] : it->second) fine[FineKey{dim + 1, b}] = rank;
    }
    return BettiTable(ideal.neurons(), std::move(fine));
}

Invariants invariants(const MonomialIdeal& ideal, Field f) {
    const BettiTable table = betti_table(ideal, f);
    return {table.pd(), table.reg()};
}

LinearResolutionCheck check_linear_resolution(const MonomialIdeal& ideal, Field f) {
    require_proper_nonzero(ideal);
    const auto d = equigenerated_degree(ideal);
    if (!d) {
        return {false, "ideal is not equigenerated; linear resolution is only defined for a single "
                       "generator degree"};
    }
    return {invariants(ideal, f).reg == *d, std::nullopt};
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field f) {
    return check_linear_resolution(ideal, f).linear;
}

int reg_upper_bound_lcm(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal);
    // Smallest subset size reaching each lcm, grown one generator at a time.
    std::map<std::uint64_t, int> smallest;
    for (const auto& g : ideal.gens()) {
        std::map<std::uint64_t, int> next = smallest;
        auto relax = [&](std::uint64_t m, int size) {
            auto [it, inserted] = next.emplace(m, size);
            if (!inserted) it->second = std::min(it->second, size);
        };
        relax(g.mask(), 1);
        for (const auto& [m, size] : smallest) relax(m | g.mask(), size + 1);
        smallest = std::move(next);
    }
    int best = std::numeric_limits<int>::min();
    for (const auto& [m, size] : smallest) best = std::max(best, std::popcount(m) - size);
    return best + 1;
}

std::optional<std::vector<int>> dominant_check(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return std::nullopt;
    const auto gens = ideal.gens();
    std::vector<int> witness;
    witness.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::uint64_t others = 0;
        for (std::size_t l = 0; l < gens.size(); ++l)
            if (l != k) others |= gens[l].mask();
        const std::uint64_t own = gens[k].mask() & ~others;
        if (own == 0) return std::nullopt;
        witness.push_back(std::countr_zero(own));
    }
    return witness;
}

Invariants dominant_invariants(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal);
    if (!dominant_check(ideal)) {
        throw Error(ErrorKind::NotDominant, "generating set is not dominant");
    }
    const int q = static_cast<int>(ideal.size());
    return {q - 1, ideal.lcm_all().degree() - q + 1};
}

LcmPolynomial euler_polynomial(const BettiTable& table) {
    LcmPolynomial out;
    for (const auto& [key, rank] : table.fine()) {
        const auto signed_rank = static_cast<std::int64_t>(rank);
        out[key.b] += (key.i % 2 == 0) ? signed_rank : -signed_rank;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

LcmPolynomial inclusion_exclusion_polynomial(const MonomialIdeal& ideal) {
    // P(G ∪ {g}) = P(G) + t^g - sum_m P(G)[m] t^{lcm(m, g)}
    std::map<std::uint64_t, std::int64_t> poly;
    for (const auto& g : ideal.gens()) {
        std::map<std::uint64_t, std::int64_t> next = poly;
        next[g.mask()] += 1;
        for (const auto& [m, c] : poly) next[m | g.mask()] -= c;
        poly = std::move(next);
    }
    LcmPolynomial out;
    for (const auto& [m, c] : poly)
        if (c != 0) out.emplace(Monomial(ideal.neurons(), m), c);
    return out;
}

}  // namespace neurideal
