#pragma once

// Exhaustive enumeration of simplicial maps by backtracking over generator
// images.  This is the single search core under the lifting engine: lifting
// squares, fibre-wise map spaces and isomorphism tests all reduce to
// enumerate_maps with the right constraints.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/sset.hpp"

namespace cylkit {

// A search instance.  Images are assigned to the generators of `source` in
// canonical order (dimension ascending, generator index ascending); a
// candidate image for a d-generator is any element of target_d compatible
// with the images already chosen for its faces.
struct MapSearchSpec {
    SSetPtr source;
    SSetPtr target;

    // Pinned images, keyed by source generator name.  A forced generator
    // still passes through the face-compatibility and over-base filters, so
    // inconsistent pins yield an empty result rather than an invalid map.
    std::map<std::string, Simplex> forced;

    // When set, only maps over the common base are enumerated:
    // over_target ∘ f = over_source.  Both legs must share their codomain.
    std::optional<SimplicialMap> over_source;  // source -> base
    std::optional<SimplicialMap> over_target;  // target -> base

    // Stop after this many maps have been collected; 0 means enumerate all.
    std::uint64_t limit = 0;
};

struct MapSearchResult {
    std::vector<SimplicialMap> maps;  // in canonical order
    std::uint64_t total = 0;          // maps found before stopping
    bool complete = false;            // search space exhausted (total is exact)
    std::uint64_t nodes = 0;          // candidate assignments tried
};

MapSearchResult enumerate_maps(const MapSearchSpec& spec);

// First isomorphism a -> b in canonical order, if any.  Searches level-wise
// generator bijections; an isomorphism of finite simplicial sets necessarily
// matches non-degenerate simplices dimension by dimension.
std::optional<SimplicialMap> find_isomorphism(const SSetPtr& a, const SSetPtr& b);

}  // namespace cylkit
