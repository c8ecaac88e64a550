#include "neurideal/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace neurideal {

SimplicialComplex SimplicialComplex::void_complex(std::uint64_t vertices) {
    return SimplicialComplex(vertices, {}, false);
}

SimplicialComplex SimplicialComplex::irrelevant(std::uint64_t vertices) {
    return SimplicialComplex(vertices, {}, true);
}

SimplicialComplex SimplicialComplex::from_faces(std::uint64_t vertices, std::vector<std::uint64_t> faces) {
    if (faces.empty()) return void_complex(vertices);
    for (auto f : faces) {
        if (f & ~vertices) throw std::invalid_argument("face uses a vertex outside the vertex set");
    }
    // Larger faces first so maximality is a single pass against kept facets.
    std::sort(faces.begin(), faces.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::uint64_t> facets;
    for (auto f : faces) {
        if (f == 0) continue;
        const bool covered =
            std::any_of(facets.begin(), facets.end(), [&](std::uint64_t g) { return (f & ~g) == 0; });
        if (!covered) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex(vertices, std::move(facets), true);
}

SimplicialComplex::Kind SimplicialComplex::kind() const noexcept {
    if (!has_empty_) return Kind::Void;
    return facets_.empty() ? Kind::Irrelevant : Kind::Nonempty;
}

int SimplicialComplex::dimension() const noexcept {
    if (!has_empty_) return -2;
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::contains(std::uint64_t face) const noexcept {
    if (!has_empty_) return false;
    if (face == 0) return true;
    return std::any_of(facets_.begin(), facets_.end(), [&](std::uint64_t g) { return (face & ~g) == 0; });
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_dimension() const {
    std::vector<std::vector<std::uint64_t>> out;
    if (!has_empty_) return out;
    out.resize(static_cast<std::size_t>(dimension() + 2));
    std::vector<std::uint64_t> all{0};
    for (auto facet : facets_) {
        // Every subset of the facet, via the standard submask walk.
        for (std::uint64_t s = facet; s != 0; s = (s - 1) & facet) all.push_back(s);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (auto f : all) out[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    return out;
}

}  // namespace neurideal
