// Finite colimits and limits in generator form: coproducts, pushouts,
// pullbacks, products, fibres, joins, and the pushout-corner (Leibniz)
// construction, together with their mediating maps.  Also the decomposition
// of a monomorphism into boundary-cell attachments.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/sset.hpp"

namespace cylkit {

SimplicialMap terminal_map(const SSetPtr& x);                 // X -> Delta[0]
SimplicialMap initial_map(const SSetPtr& x);                  // Empty -> X
SimplicialMap constant_map(const SSetPtr& x, const SSetPtr& y,
                           const std::string& vertex);

struct Coproduct {
    SSetPtr object;
    std::vector<SimplicialMap> inj;
    // Keyed by summand: original generator name -> name in the coproduct.
    std::vector<std::map<std::string, std::string>> names;
    SimplicialMap mediating(const std::vector<SimplicialMap>& legs) const;
};

// Binary coproduct keeps left names and primes right names until fresh;
// n-ary coproduct tags summand k with the prefix "k#".
Coproduct coproduct(const SSetPtr& a, const SSetPtr& b);
Coproduct coproduct_many(const std::vector<SSetPtr>& parts, std::string name);

struct Pushout {
    SSetPtr object;
    SimplicialMap inj_left;   // codomain of f -> P
    SimplicialMap inj_right;  // codomain of g -> P
    // Least nondegenerate representative of each generator's class.
    struct Rep {
        int side;  // 0 = left, 1 = right
        Simplex simplex;
    };
    std::vector<std::vector<Rep>> reps;
    SimplicialMap mediating(const SimplicialMap& u, const SimplicialMap& v) const;
};

// Pushout of  cod(f) <-f- dom -g-> cod(g);  f and g share their source.
// Class names prefer representatives from cod(f), then cod(g), lexicographic
// least, deduplicated with "~k" suffixes.
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g, std::string name);

struct Pullback {
    SSetPtr object;
    SimplicialMap proj_left;   // P -> dom(f)
    SimplicialMap proj_right;  // P -> dom(g)
    Simplex pair_simplex(const Simplex& x, const Simplex& y) const;
    SimplicialMap mediating(const SimplicialMap& r, const SimplicialMap& s) const;

    // internal: element tables per level
    struct Key {
        int gdim, gidx;
        std::vector<int> word;
        auto operator<=>(const Key&) const = default;
    };
    std::vector<std::map<std::pair<Key, Key>, Simplex>> table;
};

// Pullback of  dom(f) -f-> cod = cod(g) <-g- dom(g).
Pullback pullback(const SimplicialMap& f, const SimplicialMap& g, std::string name);
Pullback product(const SSetPtr& x, const SSetPtr& y);

// Fibre of p over a vertex of its codomain, as a pullback against Delta[0].
// When every generator of the total object lands entirely in or out of the
// fibre this reduces to a named subcomplex with name-identical inclusion.
struct Fibre {
    SSetPtr object;
    SimplicialMap inclusion;  // fibre -> total
};
Fibre fibre_over_vertex(const SimplicialMap& p, const std::string& vertex);

struct Join {
    SSetPtr object;
    SSetPtr left, right;
    SimplicialMap incl_left;
    SimplicialMap incl_right;
    SimplicialMap structure;  // A*B -> Delta[1]
    std::map<std::string, std::string> right_names;  // B generator -> tagged
    std::map<std::pair<std::string, std::string>, std::string> pair_names;

    Simplex left_simplex(const Simplex& a) const;
    Simplex right_simplex(const Simplex& b) const;
    Simplex pair(const Simplex& a, const Simplex& b) const;

    // Splits a simplex of the join into its (possibly absent) halves.
    struct Split {
        std::optional<Simplex> a, b;
    };
    Split split(const Simplex& s) const;
};

Join join(const SSetPtr& a, const SSetPtr& b);

// Functorial action:  src = a*b, dst = a'*b', f: a -> a', g: b -> b'.
SimplicialMap join_map(const Join& src, const Join& dst, const SimplicialMap& f,
                       const SimplicialMap& g);

// Pushout corner map of f: M -> N and g: S -> T under the join:
//   N*S  u_{M*S}  M*T  --->  N*T.
struct LeibnizJoin {
    Join ns, mt, nt, ms;
    Pushout corner_domain;
    SimplicialMap corner;  // corner_domain.object -> nt.object
};
LeibnizJoin leibniz_join(const SimplicialMap& f, const SimplicialMap& g);

// Writes a monomorphism i: A -> B as a finite sequence of boundary-cell
// attachments, one cell per generator of B missed by i, in dimension order.
struct CellPresentation {
    struct Step {
        int dim;
        std::string cell;           // name of the generator being attached
        SimplicialMap attach;       // dDelta[dim] -> stage
        SSetPtr stage_after;
        SimplicialMap incl_after;   // stage_after -> B
    };
    SSetPtr base;
    std::vector<Step> steps;
    SimplicialMap final_iso;  // last stage -> B, bijective on generators
};
CellPresentation cell_presentation_mono(const SimplicialMap& i);

}  // namespace cylkit
