// Fibration-class checkers built on the lifting engine: quasi-category
// detection, homotopy categories and their functors, isofibrations (plain,
// discrete, fibrewise), hom-spaces, equivalence checks, and the two
// composite reports (inner-to-trivial, parametrised equivalence).  Exact
// category-level computations are exhaustive; simplicial-level verdicts
// inherit the lifting engine's bounded semantics.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylkit/category.hpp"
#include "cylkit/levelwise.hpp"
#include "cylkit/lifting.hpp"
#include "cylkit/limits.hpp"
#include "cylkit/search.hpp"

namespace cylkit {

enum class FibKind { inner, left, right, kan, trivial };
std::string to_string(FibKind kind);
// The generating family whose right lifting property defines the class.
FamilySpec family_for(FibKind kind);

// Delegates to has_rlp against family_for(kind).
Verdict classify_fibration(const SimplicialMap& p, FibKind kind,
                           const RunConfig& config = {});

// classify_fibration(X -> Delta[0], inner).
Verdict is_quasicategory(const SSetPtr& x, const RunConfig& config = {});

// Homotopy category of a (bounded-verified) quasi-category: objects are the
// vertices, morphisms are 1-simplices modulo the 2-simplex homotopy
// relation, composition is chosen via the first inner-horn filler in
// canonical order.  Construction asserts that every 2-simplex witnesses the
// same class-level composition and that the category laws hold.
struct HomotopyCategory {
    SSetPtr underlying;
    CategoryPtr cat;
    // Vertex generator index -> object name (sanitized, deduplicated).
    std::vector<std::string> object_of_vertex;
    // Class index -> members (1-simplices in canonical order, degenerate
    // included) and the morphism id "c<k>" it became.
    std::vector<std::vector<Simplex>> classes;
    std::vector<std::string> class_mor;
    std::map<std::string, int> mor_to_class;

    int class_of(const Simplex& edge) const;  // throws on non-1-simplices
    const std::string& object_name(int vertex_idx) const {
        return object_of_vertex[vertex_idx];
    }
};

HomotopyCategory homotopy_category(const SSetPtr& x, const RunConfig& config = {});

// The induced functor between homotopy categories; make_functor validates
// functoriality exhaustively, so a failure there is an engine bug.
struct HoFunctor {
    HomotopyCategory source;
    HomotopyCategory target;
    FiniteFunctor fun;
};
HoFunctor ho_functor(const SimplicialMap& f, const HomotopyCategory& hx,
                     const HomotopyCategory& hy);

// Isomorphism of finite categories, by exhaustive search over object and
// hom-set bijections compatible with composition.
bool categories_isomorphic(const CategoryPtr& a, const CategoryPtr& b);

// Inner-fibration verdict combined with isomorphism lifting in the homotopy
// categories (exhaustive).  Precondition: source and target not refuted as
// quasi-categories at the configured bound.
Verdict is_isofibration(const SimplicialMap& p, const RunConfig& config = {});

// Every isomorphism lifts uniquely along the functor.
bool is_discrete_isofibration(const HoFunctor& f);

// Restriction of f to the fibres over a vertex of the base; p and q are the
// structure maps with q o f = p.  Vertex fibres keep generator names, so the
// restriction is computed by name.
SimplicialMap fibre_map(const SimplicialMap& f, const SimplicialMap& p,
                        const SimplicialMap& q, const std::string& vertex);

// Inner-fibration verdict for f plus is_isofibration on every vertex-fibre
// map.  Precondition: p and q pass inner-fibration checks.
Verdict fibrewise_isofibration(const SimplicialMap& f, const SimplicialMap& p,
                               const SimplicialMap& q, const RunConfig& config = {});

// Right-hom construction: level n is the set of (n+1)-simplices whose front
// face is totally degenerate at `from` and whose last vertex is `to`,
// computed levelwise up to the configured bound and extracted to generator
// form.  elements[n] lists the ambient simplices presented at level n, in
// the order the extraction saw them.
struct HomSpace {
    SSetPtr object;
    SSetPtr ambient;        // the object the simplices in `elements` live in
    std::string from, to;   // the ambient vertices the construction used
    std::vector<std::vector<Simplex>> elements;
    LevelwiseResult extraction;
};
HomSpace hom_space(const SSetPtr& x, const std::string& from, const std::string& to,
                   const RunConfig& config = {});

// Hom-space inside the fibre X_f of p over the 1-simplex f (the pullback of
// p along f's classifier).  from/to are vertices of the total object lying
// over f's endpoints.  Precondition: p not refuted as an inner fibration.
HomSpace hom_space_over_edge(const SimplicialMap& p, const std::string& from,
                             const std::string& to, const Simplex& edge,
                             const RunConfig& config = {});

// The map of hom-spaces induced by f (which must send hx's ambient object
// into hy's).
SimplicialMap hom_induced(const HomSpace& hx, const HomSpace& hy,
                          const SimplicialMap& f);

// has_rlp(K -> Delta[0], boundaries).
Verdict is_contractible_kan(const SSetPtr& k, const RunConfig& config = {});

// Equivalence of quasi-categories: essential surjectivity of the homotopy
// functor (exact) plus, for every vertex pair, the induced hom-space map
// passing the factor-then-bounded-trivial-fibration check.  Precondition:
// source and target not refuted as quasi-categories.
Verdict qcat_equivalence(const SimplicialMap& f, const RunConfig& config = {});

// Report for the inner-to-trivial comparison: (i) trivial-fibration
// verdict, (ii) per-1-simplex pullback trivial-fibration verdicts,
// (iii) vertex surjectivity plus hom-space contractibility over every edge.
// The agreement flag states the non-EXHAUSTED aggregates do not contradict
// one another.  Precondition: p passes the inner-fibration check.
struct Inn2TrivReport {
    Verdict whole;                                            // (i)
    std::vector<std::pair<std::string, Verdict>> edges;       // (ii) per 1-simplex
    Verdict edges_all;
    std::optional<std::string> missed_vertex;                 // (iii) surjectivity
    std::vector<std::pair<std::string, Verdict>> homs;        // (iii) per edge and pair
    Verdict homs_all;
    bool agreement = false;
};
Inn2TrivReport check_inn2triv(const SimplicialMap& p, const RunConfig& config = {});

// Simplicial hom over the base: level n of the result is the set of maps
// Delta[n] x X -> Y over B, enumerated exhaustively and extracted to
// generator form.  elements[n] lists those maps in enumeration order.
// status reports the levelwise bound (EXHAUSTED when the size guard
// truncated the enumeration).
struct FunOver {
    SSetPtr object;
    Verdict status;
    std::vector<std::vector<SimplicialMap>> elements;
    LevelwiseResult extraction;
};
FunOver fun_over(const SSetPtr& base, const SimplicialMap& p, const SimplicialMap& q,
                 const RunConfig& config = {});

// The map Fun_B(W, X) -> Fun_B(W, Y) given by composing with u (which must
// commute with the structure maps used to build fx and fy).
SimplicialMap fun_over_induced(const FunOver& fx, const FunOver& fy,
                               const SimplicialMap& u);

// Report for the parametrised-equivalence comparison of u: (X,p) -> (Y,q)
// over B: (ii) per-1-simplex equivalence of fibre maps, (iii) equivalence of
// the simplicial homs Fun_B((Delta[1],f), -), (iv) fibrewise essential
// surjectivity plus parametrised full faithfulness via hom-spaces over
// edges.  The model-structure condition itself admits no direct decision
// procedure, so no verdict is emitted for it; the note records that.
struct ParaequivReport {
    std::vector<std::pair<std::string, Verdict>> fibres;      // (ii) per 1-simplex
    Verdict fibres_all;
    std::vector<std::pair<std::string, Verdict>> funs;        // (iii) per 1-simplex
    Verdict funs_all;
    std::vector<std::pair<std::string, Verdict>> pointwise;   // (iv) details
    Verdict pointwise_all;
    bool agreement = false;
    std::string note;
};
ParaequivReport check_paraequiv(const SimplicialMap& u, const SimplicialMap& p,
                                const SimplicialMap& q, const RunConfig& config = {});

}  // namespace cylkit
