#pragma once

#include <cstddef>
#include <map>

#include "neurideal/field.hpp"
#include "neurideal/simplicial.hpp"

namespace neurideal {

/// Nonzero reduced homology dimensions of K over f, keyed by dimension.
///
/// Dimension -1 is included: {∅} has H̃_{-1} of rank 1 through the
/// augmentation map. The void complex has no homology at all.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, Field f);

}  // namespace neurideal
