#include "neurideal/linalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include <gmpxx.h>

namespace neurideal {

namespace {

std::size_t column_count(const IntMatrix& m) {
    std::size_t cols = 0;
    for (const auto& row : m) cols = std::max(cols, row.size());
    return cols;
}

}  // namespace

std::size_t rank_f2(const IntMatrix& m) {
    const std::size_t cols = column_count(m);
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(m.size());
    for (const auto& r : m) {
        std::vector<std::uint64_t> packed(words, 0);
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] & 1) packed[c / 64] |= std::uint64_t{1} << (c % 64);
        rows.push_back(std::move(packed));
    }

    std::size_t rank = 0;
    for (std::size_t w = 0; w < words && rank < rows.size(); ++w) {
        for (unsigned bit = 0; bit < 64 && rank < rows.size(); ++bit) {
            const std::uint64_t probe = std::uint64_t{1} << bit;
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(rows[pivot][w] & probe)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                if (!(rows[r][w] & probe)) continue;
                for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
            }
            ++rank;
        }
    }
    return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
    const std::size_t cols = column_count(m);
    std::vector<std::vector<mpq_class>> a;
    a.reserve(m.size());
    for (const auto& r : m) {
        std::vector<mpq_class> row(cols);
        for (std::size_t c = 0; c < r.size(); ++c) row[c] = static_cast<long>(r[c]);
        a.push_back(std::move(row));
    }

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.size() && sgn(a[pivot][c]) == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            if (sgn(a[r][c]) == 0) continue;
            const mpq_class factor = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(const IntMatrix& m, Field f) {
    return f == Field::F2 ? rank_f2(m) : rank_rational(m);
}

}  // namespace neurideal
