// Finite simplicial sets in generator form: nondegenerate simplices per
// dimension plus a face table.  Every simplex has a unique normal form
// (degeneracy word, generator); the presheaf action is computed through the
// stored face table and the simplex-category algebra, so validation of the
// simplicial identities at build time is the single trust anchor.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/delta.hpp"

namespace cylkit {

struct SSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reference to a generator: dimension and index into that dimension's list.
struct GenId {
    int dim = 0;
    int idx = 0;
    bool operator==(const GenId&) const = default;
    auto operator<=>(const GenId&) const = default;
};

// Normal form of a simplex: the element s_{w0} s_{w1} ... (generator),
// word strictly decreasing.  dim = gen.dim + word.size().
struct Simplex {
    int dim = 0;
    std::vector<int> word;
    GenId gen;
    bool operator==(const Simplex&) const = default;

    bool degenerate() const { return !word.empty(); }
};

class FiniteSimplicialSet;
using SSetPtr = std::shared_ptr<const FiniteSimplicialSet>;

// Construction-time provenance, used by classifiers to upgrade bounded
// verdicts to certified ones.  Not part of structural equality.
struct Provenance {
    enum class Kind { none, complete_nerve, truncated_nerve, coproduct, join };
    Kind kind = Kind::none;
    int truncation = -1;   // nerve kinds: dimension the nerve was built to
    std::string detail;
};

// One face entry as written by callers: word plus generator name.
struct FaceRef {
    std::vector<int> word;
    std::string target;
};

// Declaration of one generator: name plus its faces (empty for dimension 0).
struct GenSpec {
    std::string name;
    std::vector<FaceRef> faces;
};

class FiniteSimplicialSet {
  public:
    // Builds and validates.  gens[d] lists the d-dimensional generators;
    // per-dimension lists are sorted by name, names must be globally unique,
    // and the simplicial identities d_i d_j = d_{j-1} d_i (i < j) must hold.
    static SSetPtr build(std::string name, std::vector<std::vector<GenSpec>> gens,
                         Provenance prov = {});

    const std::string& name() const { return name_; }
    const Provenance& provenance() const { return prov_; }

    // Largest dimension carrying a generator; -1 for the empty object.
    int dimension() const { return (int)gen_names_.size() - 1; }
    int gen_count(int dim) const {
        return dim >= 0 && dim <= dimension() ? (int)gen_names_[dim].size() : 0;
    }
    int total_gen_count() const;
    const std::string& gen_name(GenId g) const { return gen_names_[g.dim][g.idx]; }
    std::optional<GenId> find_gen(const std::string& name) const;

    // Face i of a generator of dimension >= 1.
    const Simplex& gen_face(GenId g, int i) const { return faces_[g.dim][g.idx][i]; }

    // Presheaf action: the simplex s . op, where op: [n] -> [s.dim].
    Simplex act(const Simplex& s, const delta::MonotoneMap& op) const;

    // All n-simplices in canonical order (generator dimension descending,
    // then generator index, then word).
    std::vector<Simplex> simplices_at(int n) const;

    // Total degeneracy of a vertex at dimension n.
    Simplex degenerate_at(GenId vertex, int n) const;

    Simplex nondeg(GenId g) const { return Simplex{g.dim, {}, g}; }

    // Structural equality: names and face tables agree (provenance ignored).
    bool same_as(const FiniteSimplicialSet& other) const;

    // Canonical key for ordering simplices of equal dimension.
    static bool simplex_less(const Simplex& a, const Simplex& b);

    std::string simplex_repr(const Simplex& s) const;

  private:
    FiniteSimplicialSet() = default;
    std::string name_;
    Provenance prov_;
    std::vector<std::vector<std::string>> gen_names_;          // [dim][idx]
    std::vector<std::vector<std::vector<Simplex>>> faces_;      // [dim][idx][i]
    std::map<std::string, GenId> index_;
};

// The opposite simplicial set: same generators, reversed face order.
SSetPtr opposite(const SSetPtr& x);

// A simplicial map, stored as the images of the source's generators.
// Immutable after construction; make_map validates face compatibility.
class SimplicialMap {
  public:
    SimplicialMap() = default;

    const SSetPtr& source() const { return source_; }
    const SSetPtr& target() const { return target_; }
    const Simplex& gen_image(GenId g) const { return assign_[g.dim][g.idx]; }

    // Image of an arbitrary simplex: f(w . g) = w . f(g).
    Simplex apply(const Simplex& s) const;

    bool is_nerve_map() const { return nerve_map_; }

    bool operator==(const SimplicialMap& other) const;

  private:
    friend SimplicialMap make_map(SSetPtr, SSetPtr,
                                  std::vector<std::vector<Simplex>>, bool);
    SSetPtr source_, target_;
    std::vector<std::vector<Simplex>> assign_;
    bool nerve_map_ = false;
};

// Validates dimension agreement and face compatibility on every generator;
// reports the offending generator and face index otherwise.
SimplicialMap make_map(SSetPtr source, SSetPtr target,
                       std::vector<std::vector<Simplex>> assignment,
                       bool nerve_map = false);

// Convenience: build from generator-name to simplex assignment.
SimplicialMap make_map_by_names(
    SSetPtr source, SSetPtr target,
    const std::map<std::string, std::pair<std::vector<int>, std::string>>& images,
    bool nerve_map = false);

SimplicialMap identity_map(const SSetPtr& x);
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);
SimplicialMap opposite_map(const SimplicialMap& f);

bool is_identity(const SimplicialMap& f);

// Property flags computed by exhaustive level checks up to
// max(source dimension, target dimension) + 1.
struct MapProps {
    bool mono = false;
    bool epi = false;
    bool bijective_on_0 = false;
};
MapProps map_props(const SimplicialMap& f);

// Whether the map is levelwise bijective (an isomorphism).
bool is_iso(const SimplicialMap& f);

}  // namespace cylkit
