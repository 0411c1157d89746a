// Arithmetic of the simplex category: monotone maps between finite ordinals
// [n] = {0 < 1 < ... < n}, their composition, and the unique epi-mono
// factorization.  Everything downstream normalizes through this module, so
// maps are stored as explicit value lists and validated on construction.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cylkit::delta {

struct DeltaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monotone map [source_rank] -> [target_rank], values[i] = image of i.
// Invariant: values weakly increasing, each within [0, target_rank].
struct MonotoneMap {
    int source_rank = 0;
    int target_rank = 0;
    std::vector<int> values;

    bool operator==(const MonotoneMap&) const = default;
};

// Validating constructor; reports the offending index on failure.
MonotoneMap make_map(int source_rank, int target_rank, std::vector<int> values);

MonotoneMap identity(int rank);
// Coface d_i: [n-1] -> [n], the injection missing i.
MonotoneMap face(int n, int i);
// Codegeneracy s_i: [n+1] -> [n], the surjection repeating i.
MonotoneMap degeneracy(int n, int i);
// Vertex inclusion [0] -> [n] at i.
MonotoneMap vertex(int n, int i);
// Initial segment [m] -> [n], i |-> i.  Requires m <= n.
MonotoneMap initial_segment(int m, int n);
// Final segment [m] -> [n], i |-> n - m + i.  Requires m <= n.
MonotoneMap final_segment(int m, int n);
// Inclusion of the subset (strictly increasing vertex list) into [n].
MonotoneMap subset_inclusion(const std::vector<int>& verts, int n);

bool is_identity(const MonotoneMap& f);
bool is_epi(const MonotoneMap& f);
bool is_mono(const MonotoneMap& f);

// compose(outer, inner) = outer after inner; inner.target_rank must equal
// outer.source_rank.
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

// Unique factorization f = mono after epi.
struct EpiMonoFactorization {
    MonotoneMap epi;
    MonotoneMap mono;
};
EpiMonoFactorization epi_mono_factor(const MonotoneMap& f);

// Word views.  Both words are element-operator words: a degeneracy word
// [j0 > j1 > ...] means the simplex operator s_{j0} s_{j1} ... , a face word
// [i0 < i1 < ...] means d_{i0} d_{i1} ... .  These are the normal forms with
// strictly decreasing (resp. increasing) indices.
std::vector<int> degeneracy_word(const MonotoneMap& epi);
std::vector<int> face_word(const MonotoneMap& mono);
// Rebuild the epi [rank + word.size()] ->> [rank] from a decreasing word.
MonotoneMap epi_from_word(const std::vector<int>& word, int target_rank);
// Rebuild the mono from the increasing word of missed values.
MonotoneMap mono_from_word(const std::vector<int>& word, int target_rank);

// The involution of the simplex category: op(f)(i) = n - f(m - i).
MonotoneMap opposite(const MonotoneMap& f);

// Join of maps: alpha * beta : [a+1+b] -> [a'+1+b'], left block then
// shifted right block.
MonotoneMap join(const MonotoneMap& alpha, const MonotoneMap& beta);

// All monotone maps [m] -> [n] in lexicographic order of value lists.
std::vector<MonotoneMap> all_maps(int m, int n);
// All epis [m] ->> [k], lexicographic.
std::vector<MonotoneMap> all_epis(int m, int k);

std::string to_string(const MonotoneMap& f);

}  // namespace cylkit::delta
