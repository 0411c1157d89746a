// Finite categories with explicit composition tables, functors between
// them, and profunctors with their actions.  Validation is exhaustive:
// these objects are tiny and correctness of everything downstream rests on
// the laws holding on the nose.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/sset.hpp"

namespace cylkit {

struct CategoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MorSpec {
    std::string id;
    std::string src;
    std::string dst;
};

class FiniteCategory {
  public:
    // Objects sorted by name; morphisms include identities, given explicitly
    // via the identities table.  composition maps (g, f) with f: x->y,
    // g: y->z to the id of g o f.  Laws checked exhaustively.
    static std::shared_ptr<const FiniteCategory> build(
        std::string name, std::vector<std::string> objects,
        std::vector<MorSpec> morphisms,
        std::map<std::pair<std::string, std::string>, std::string> composition,
        std::map<std::string, std::string> identities);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<MorSpec>& morphisms() const { return mors_; }
    const std::string& identity_of(const std::string& obj) const;
    bool is_identity(const std::string& mor) const;
    const MorSpec& mor(const std::string& id) const;
    // g o f; throws if not composable.
    const std::string& compose(const std::string& g, const std::string& f) const;
    // All morphisms x -> y, sorted by id.
    std::vector<std::string> hom(const std::string& x, const std::string& y) const;
    bool is_iso(const std::string& mor) const;

    std::shared_ptr<const FiniteCategory> opposite() const;

  private:
    FiniteCategory() = default;
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<MorSpec> mors_;
    std::map<std::string, size_t> mor_index_;
    std::map<std::pair<std::string, std::string>, std::string> comp_;
    std::map<std::string, std::string> ident_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

// A functor given on objects and morphisms; laws checked exhaustively.
struct FiniteFunctor {
    CategoryPtr source;
    CategoryPtr target;
    std::map<std::string, std::string> on_objects;
    std::map<std::string, std::string> on_morphisms;
};
FiniteFunctor make_functor(CategoryPtr source, CategoryPtr target,
                           std::map<std::string, std::string> on_objects,
                           std::map<std::string, std::string> on_morphisms);

// Profunctor M: A^op x B -> Set with explicit element sets and actions.
// left_action[(f, m)] = m . f for f: a' -> a in A, m in M(a, b);
// right_action[(g, m)] = g . m for g: b -> b' in B.
struct Profunctor {
    CategoryPtr source;  // A
    CategoryPtr target;  // B
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> values;
    std::map<std::pair<std::string, std::string>, std::string> left_action;
    std::map<std::pair<std::string, std::string>, std::string> right_action;
};
// Validates functoriality of both actions and their commutation.
Profunctor make_profunctor(
    CategoryPtr source, CategoryPtr target,
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> values,
    std::map<std::pair<std::string, std::string>, std::string> left_action,
    std::map<std::pair<std::string, std::string>, std::string> right_action);

// Collage of a profunctor: objects A + B, morphisms A-arrows, B-arrows and
// the elements of M as arrows a -> b, composed through the actions.
CategoryPtr collage_category(const Profunctor& m);

// The terminal profunctor between A and B (one element per pair); its
// collage is the categorical join.
Profunctor terminal_profunctor(CategoryPtr a, CategoryPtr b);

// Nerve, truncated at the requested dimension.  Generators in dimension k
// are identity-free composable chains, named by joining morphism ids with
// '.'; vertices are named by object.  Provenance records the truncation and
// whether the nerve is complete (no identity-free chains above it).
SSetPtr nerve(const CategoryPtr& c, int truncation);

// Nerve of a functor as a simplicial map between (compatibly) truncated
// nerves; carries the nerve-map flag used for certified verdicts.
SimplicialMap nerve_map(const FiniteFunctor& f, int truncation);

// Inverse direction: the homotopy-category machinery lives in classify.hpp.

}  // namespace cylkit
