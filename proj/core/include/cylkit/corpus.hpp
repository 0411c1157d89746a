// Seeded corpus generation for the acceptance battery: random posets and
// functors between them, thin profunctors, small standard objects, maps
// picked uniformly from exhaustive enumerations, cylinders, and composable
// pairs of inner anodyne extensions.  Every draw flows through the one
// SplitMix64 passed in, so a seed pins the whole corpus byte for byte.
#pragma once

#include <optional>
#include <string>

#include "cylkit/category.hpp"
#include "cylkit/cylinder.hpp"
#include "cylkit/rng.hpp"
#include "cylkit/sset.hpp"

namespace cylkit {

// Random poset with 2..max_objects objects ("q0", "q1", ...), edges drawn by
// coin on the underlying linear order and closed transitively.  Morphisms
// follow the linear_poset naming ("m<i>_<j>").
CategoryPtr random_poset(SplitMix64& rng, int max_objects, const std::string& name);

// Random monotone map between posets, drawn uniformly from the full list of
// functors (posets are thin, so object images determine everything).
FiniteFunctor random_poset_functor(SplitMix64& rng, const CategoryPtr& c,
                                   const CategoryPtr& d);

// Thin profunctor between posets: a coin per object pair, then closure under
// both actions; elements named "u(a,b)".
Profunctor random_thin_profunctor(SplitMix64& rng, const CategoryPtr& a,
                                  const CategoryPtr& b);

// A small standard object: a simplex, boundary, horn, or spine of dimension
// at most 2.
SSetPtr corpus_object(SplitMix64& rng);

// Uniform draw from every map a -> b; nullopt when there are none.
std::optional<SimplicialMap> random_map(SplitMix64& rng, const SSetPtr& a,
                                        const SSetPtr& b);

// Cylinder drawn from the construction mix: initial, terminal, collage nerve
// of a random thin profunctor, or the dual of one of those.
Cylinder random_cylinder(SplitMix64& rng);

// u and v are each pushouts of one inner horn inclusion (hence inner
// anodyne), with the target of u the source of v.
struct AnodynePair {
    SimplicialMap u;
    SimplicialMap v;
};
AnodynePair random_anodyne_pair(SplitMix64& rng);

}  // namespace cylkit
