#pragma once

#include <cstdint>
#include <vector>

namespace neurideal {

/// Finite simplicial complex on a subset of at most 64 vertex labels, faces
/// stored as bit masks.
///
/// The void complex (no faces at all) and the irrelevant complex {∅} are
/// distinct: both have no facets, and `has_empty_face` tells them apart.
class SimplicialComplex {
public:
    enum class Kind { Void, Irrelevant, Nonempty };

    static SimplicialComplex void_complex(std::uint64_t vertices);
    static SimplicialComplex irrelevant(std::uint64_t vertices);
    /// Downward closure of `faces` (which may include the empty face 0).
    static SimplicialComplex from_faces(std::uint64_t vertices, std::vector<std::uint64_t> faces);

    std::uint64_t vertex_set() const noexcept { return vertices_; }
    /// Inclusion-maximal nonempty faces, sorted.
    const std::vector<std::uint64_t>& facets() const noexcept { return facets_; }
    bool has_empty_face() const noexcept { return has_empty_; }
    Kind kind() const noexcept;

    /// -2 for the void complex, -1 for {∅}, otherwise max facet size - 1.
    int dimension() const noexcept;
    bool contains(std::uint64_t face) const noexcept;

    /// All faces grouped by dimension; index d+1 holds the d-faces, so index
    /// 0 is {∅} when present. Each group is sorted ascending.
    std::vector<std::vector<std::uint64_t>> faces_by_dimension() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::uint64_t vertices, std::vector<std::uint64_t> facets, bool has_empty)
        : vertices_(vertices), facets_(std::move(facets)), has_empty_(has_empty) {}

    std::uint64_t vertices_ = 0;
    std::vector<std::uint64_t> facets_;
    bool has_empty_ = false;
};

}  // namespace neurideal
