#include "neurideal/homology.hpp"

#include <algorithm>
#include <bit>

#include "neurideal/linalg.hpp"

namespace neurideal {

namespace {

// Boundary map from faces of size k to faces of size k-1, one row per face.
IntMatrix boundary(const std::vector<std::uint64_t>& faces, const std::vector<std::uint64_t>& lower) {
    IntMatrix m;
    m.reserve(faces.size());
    for (auto face : faces) {
        std::vector<std::int64_t> row(lower.size(), 0);
        int position = 0;
        for (std::uint64_t rest = face; rest != 0; rest &= rest - 1, ++position) {
            const std::uint64_t vertex = rest & (~rest + 1);
            const auto it = std::lower_bound(lower.begin(), lower.end(), face & ~vertex);
            row[static_cast<std::size_t>(it - lower.begin())] = (position % 2 == 0) ? 1 : -1;
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, Field f) {
    std::map<int, std::size_t> out;
    const auto groups = complex.faces_by_dimension();
    if (groups.empty()) return out;

    // ranks[k] = rank of the boundary leaving faces of size k (k >= 1).
    std::vector<std::size_t> ranks(groups.size() + 1, 0);
    for (std::size_t k = 1; k < groups.size(); ++k) ranks[k] = rank(boundary(groups[k], groups[k - 1]), f);

    for (std::size_t k = 0; k < groups.size(); ++k) {
        const std::size_t cycles = groups[k].size() - ranks[k];
        const std::size_t h = cycles - ranks[k + 1];
        if (h != 0) out.emplace(static_cast<int>(k) - 1, h);
    }
    return out;
}

}  // namespace neurideal
