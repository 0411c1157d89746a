// Standard simplicial sets.  Simplices, boundaries, horns and spines are
// built from vertex subsets of [n], named by dot-joined vertex lists; J is
// the nerve of the two-object contractible groupoid.
#pragma once

#include "cylkit/category.hpp"
#include "cylkit/sset.hpp"

namespace cylkit {

// Delta[n].  Carries complete-nerve provenance (it is the nerve of the
// linear poset).
SSetPtr std_simplex(int n);
// Boundary of Delta[n]: all proper subsets.
SSetPtr std_boundary(int n);
// Horn with the k-th face removed.  Requires 0 <= k <= n, n >= 1.
SSetPtr std_horn(int n, int k);
// Spine: the chain of edges (i, i+1).
SSetPtr std_spine(int n);
// J truncated: nerve of the contractible groupoid on {0, 1}.
SSetPtr std_j(int truncation);
// The empty simplicial set.
SSetPtr std_empty();

// The contractible groupoid on two objects "0","1" (morphisms "01","10").
CategoryPtr indiscrete2();
// The linear poset 0 < 1 < ... < n with morphisms "m<i>_<j>".
CategoryPtr linear_poset(int n);
// Discrete category on n objects "0".."n-1".
CategoryPtr discrete_category(int n);

// Vertex list of a generator of a subset-named object such as std_simplex.
std::vector<int> vertex_list(const std::string& gen_name);
std::string subset_name(const std::vector<int>& verts);

// Classifying map Delta[n] -> X of the n-simplex s.
SimplicialMap simplex_classifier(const SSetPtr& x, const Simplex& s);

// Inclusions between standard objects (boundary or horn into the simplex,
// spine into the simplex), as name-respecting monomorphisms.
SimplicialMap boundary_inclusion(int n);
SimplicialMap horn_inclusion(int n, int k);
SimplicialMap spine_inclusion(int n);

// Inclusion of a standard subobject given by its generator names.
SimplicialMap subcomplex_inclusion(const SSetPtr& sub, const SSetPtr& whole);

// Induced subcomplex of X on the given generator set (must be face-closed);
// keeps generator names.
SSetPtr subcomplex(const SSetPtr& x, const std::vector<std::string>& gens,
                   const std::string& name);

}  // namespace cylkit
