// Generic extraction of generator form from levelwise data.  Callers present
// a simplicial set as finite sets of elements per level together with face
// and degeneracy operators; this module finds the nondegenerate elements and
// their normal forms.  The caller guarantees the levels are closed under the
// operators and that max_level bounds the nondegenerate dimension (outputs
// above that bound are truncations, which callers must track themselves).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cylkit/sset.hpp"

namespace cylkit {

struct LevelwiseSpec {
    std::string name;
    int max_level = -1;               // inclusive; -1 gives the empty object
    std::vector<int> counts;          // elements per level, canonical order
    std::function<int(int n, int idx, int i)> face;        // level n -> n-1
    std::function<int(int n, int idx, int i)> degeneracy;  // level n -> n+1
    std::function<std::string(int n, int idx)> elem_name;  // names for generators
    Provenance prov;
};

struct LevelwiseResult {
    SSetPtr object;
    // Normal form of every presented element.
    std::vector<std::vector<Simplex>> elem_simplex;
    // Presented element index of each generator, per dimension.
    std::vector<std::vector<int>> gen_elem;
};

LevelwiseResult from_levelwise(const LevelwiseSpec& spec);

}  // namespace cylkit
