#include "neurideal/families.hpp"

#include <string>

namespace neurideal {

namespace {

void require_range(const char* what, int value, int lo, int hi) {
    if (value < lo || value > hi) {
        throw Error(ErrorKind::OutOfRange, std::string(what) + " = " + std::to_string(value) +
                                               " outside [" + std::to_string(lo) + ", " +
                                               std::to_string(hi) + "]");
    }
}

void require_neurons(int n) { require_range("n", n, 1, kMaxNeurons); }

std::uint64_t bit(int pos) { return std::uint64_t{1} << pos; }

}  // namespace

PolarizedNeuralIdeal family_prop32(int n, int k) {
    require_neurons(n);
    require_range("k", k, 1, n);
    std::vector<Monomial> gens;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t mask = bit(i - 1);
        for (int l = 1; l <= n; ++l)
            if (l != i) mask |= bit(n + l - 1);
        gens.emplace_back(n, mask);
    }
    return validate_polarized_neural(MonomialIdeal(n, std::move(gens)));
}

PolarizedNeuralIdeal family_prop33(int n, int k) {
    require_neurons(n);
    require_range("k", k, 1, n);
    std::uint64_t all_x = 0;
    std::uint64_t mixed = 0;
    for (int i = 1; i <= n; ++i) {
        all_x |= bit(i - 1);
        mixed |= i <= k ? bit(n + i - 1) : bit(i - 1);
    }
    return validate_polarized_neural(MonomialIdeal(n, {Monomial(n, all_x), Monomial(n, mixed)}));
}

PolarizedNeuralIdeal family_prop34_pd(int n, int i) {
    require_neurons(n);
    require_range("i", i, 0, 2 * n - 1);
    std::vector<Monomial> gens;
    for (int pos = 0; pos <= i; ++pos) gens.push_back(Monomial::variable(n, pos));
    return validate_polarized_neural(MonomialIdeal(n, std::move(gens)));
}

MonomialIdeal family_prop34_reg(int n, int j) {
    require_neurons(n);
    require_range("j", j, 1, 2 * n - 1);
    std::uint64_t mask = 0;
    for (int pos = 0; pos < j; ++pos) mask |= bit(pos);  // x_1.. then y_1.. past n
    return MonomialIdeal(n, {Monomial(n, mask)});
}

PolarizedNeuralIdeal family_thm36(int n, int k) {
    require_neurons(n);
    require_range("k", k, 1, n);
    if (k > 24) throw Error(ErrorKind::OutOfRange, "thm36 expands to 2^k generators; k too large");
    std::vector<Monomial> gens;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
        std::uint64_t mask = 0;
        for (int i = 1; i <= k; ++i) mask |= (choice >> (i - 1)) & 1u ? bit(n + i - 1) : bit(i - 1);
        gens.emplace_back(n, mask);
    }
    return validate_polarized_neural(MonomialIdeal(n, std::move(gens)));
}

}  // namespace neurideal
