#include "neurideal/monomial.hpp"

namespace neurideal {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::TooManyNeurons: return "TooManyNeurons";
    case ErrorKind::NeuronMismatch: return "NeuronMismatch";
    case ErrorKind::NonSquarefreeProduct: return "NonSquarefreeProduct";
    case ErrorKind::PairViolation: return "PairViolation";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::UnitOrZeroIdeal: return "UnitOrZeroIdeal";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotSplittable: return "NotSplittable";
    case ErrorKind::JNotLinear: return "JNotLinear";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotEquigeneratedDegreeN: return "NotEquigeneratedDegreeN";
    }
    return "Unknown";
}

namespace {

void check_neurons(int n) {
    if (n < 1 || n > kMaxNeurons) {
        throw Error(ErrorKind::TooManyNeurons,
                    "neuron count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxNeurons) + "]");
    }
}

std::uint64_t width_mask(int n) {
    return n == kMaxNeurons ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1;
}

void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.neurons() != b.neurons()) {
        throw Error(ErrorKind::NeuronMismatch, "monomials live over different neuron counts (" +
                                                   std::to_string(a.neurons()) + " vs " +
                                                   std::to_string(b.neurons()) + ")");
    }
}

}  // namespace

Monomial::Monomial(int n, std::uint64_t mask) : mask_(mask), n_(static_cast<std::uint8_t>(n)) {
    check_neurons(n);
    if ((mask & ~width_mask(n)) != 0) {
        throw Error(ErrorKind::OutOfRange, "monomial mask uses variables beyond 2n");
    }
}

Monomial Monomial::x(int n, int i) {
    check_neurons(n);
    if (i < 1 || i > n) throw Error(ErrorKind::OutOfRange, "x index out of range");
    return Monomial(n, std::uint64_t{1} << (i - 1));
}

Monomial Monomial::y(int n, int i) {
    check_neurons(n);
    if (i < 1 || i > n) throw Error(ErrorKind::OutOfRange, "y index out of range");
    return Monomial(n, std::uint64_t{1} << (n + i - 1));
}

Monomial Monomial::variable(int n, int pos) {
    check_neurons(n);
    if (pos < 0 || pos >= 2 * n) throw Error(ErrorKind::OutOfRange, "variable position out of range");
    return Monomial(n, std::uint64_t{1} << pos);
}

Monomial Monomial::full(int n) {
    check_neurons(n);
    return Monomial(n, width_mask(n));
}

int Monomial::first_pair_violation() const noexcept {
    const std::uint64_t xs = mask_ & ((std::uint64_t{1} << n_) - 1);
    const std::uint64_t both = xs & (mask_ >> n_);
    return both == 0 ? 0 : std::countr_zero(both) + 1;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    return Monomial(a.neurons(), a.mask() | b.mask());
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    return Monomial(a.neurons(), a.mask() & b.mask());
}

Monomial strip(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    return Monomial(a.neurons(), a.mask() & ~b.mask());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    if (!a.coprime(b)) {
        throw Error(ErrorKind::NonSquarefreeProduct,
                    "product " + to_string(a) + " * " + to_string(b) + " is not squarefree");
    }
    return Monomial(a.neurons(), a.mask() | b.mask());
}

std::string variable_name(int n, int pos) {
    return pos < n ? "x" + std::to_string(pos + 1) : "y" + std::to_string(pos - n + 1);
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    const int n = m.neurons();
    for (int i = 1; i <= n; ++i) {
        for (int pos : {i - 1, n + i - 1}) {
            if (!m.has_variable(pos)) continue;
            if (!out.empty()) out += '*';
            out += variable_name(n, pos);
        }
    }
    return out;
}

}  // namespace neurideal
