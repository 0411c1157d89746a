#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "cylkit/classify.hpp"
#include "cylkit/lifting.hpp"
#include "cylkit/limits.hpp"
#include "cylkit/standard.hpp"

using namespace cylkit;

namespace {

// The category with two objects and two parallel non-identity arrows a -> b.
// Its nerve has a 2-point discrete hom from a to b, which pins down the
// hom-space construction independently of the levelwise machinery.
CategoryPtr parallel_pair() {
    std::vector<MorSpec> mors = {
        {"ida", "a", "a"}, {"idb", "b", "b"}, {"u", "a", "b"}, {"v", "a", "b"}};
    std::map<std::pair<std::string, std::string>, std::string> comp;
    comp[{"ida", "ida"}] = "ida";
    comp[{"idb", "idb"}] = "idb";
    comp[{"u", "ida"}] = "u";
    comp[{"idb", "u"}] = "u";
    comp[{"v", "ida"}] = "v";
    comp[{"idb", "v"}] = "v";
    return FiniteCategory::build("par", {"a", "b"}, std::move(mors), std::move(comp),
                                 {{"a", "ida"}, {"b", "idb"}});
}

// Independent count of the edges x -> y among ALL 1-simplices, by endpoint
// vertices.  Oracle for hom-space level 0.
int edges_between(const SSetPtr& x, const std::string& from, const std::string& to) {
    GenId gf = *x->find_gen(from);
    GenId gt = *x->find_gen(to);
    int count = 0;
    for (const Simplex& e : x->simplices_at(1))
        if (x->act(e, delta::face(1, 1)).gen == gf && x->act(e, delta::face(1, 0)).gen == gt)
            ++count;
    return count;
}

}  // namespace

TEST_CASE("fibration classes name their generating families") {
    CHECK(to_string(FibKind::inner) == "inner");
    CHECK(to_string(FibKind::trivial) == "trivial");
    CHECK(family_for(FibKind::inner).kind == Family::inner_horns);
    CHECK(family_for(FibKind::left).kind == Family::left_horns);
    CHECK(family_for(FibKind::right).kind == Family::right_horns);
    CHECK(family_for(FibKind::kan).kind == Family::all_horns);
    CHECK(family_for(FibKind::trivial).kind == Family::boundaries);
}

TEST_CASE("quasi-category detection: nerves certified, truncations bounded") {
    auto n2 = nerve(linear_poset(2), 3);
    CHECK(is_quasicategory(n2).status == Status::yes_certified);

    // The truncated interval-groupoid nerve fills every horn that fits under
    // the bound but is refuted one dimension higher.
    auto j3 = std_j(3);
    CHECK(is_quasicategory(j3, {.max_dim = 3}).status == Status::yes_bounded);
    CHECK(is_quasicategory(std_j(2), {.max_dim = 3}).status == Status::no);
}

TEST_CASE("left/right classification is exchanged by the opposite") {
    RunConfig cfg{.max_dim = 3};
    std::vector<SimplicialMap> probes = {
        terminal_map(nerve(linear_poset(2), 3)),
        terminal_map(std_j(3)),
        boundary_inclusion(1),
    };
    for (const auto& p : probes) {
        CHECK(classify_fibration(p, FibKind::left, cfg).status ==
              classify_fibration(opposite_map(p), FibKind::right, cfg).status);
        CHECK(classify_fibration(p, FibKind::kan, cfg).status ==
              classify_fibration(opposite_map(p), FibKind::kan, cfg).status);
    }
    // A nerve of a non-groupoid poset is not a left fibration over the point:
    // a horn(2,0) whose two edges come in the wrong order has no filler.
    CHECK(classify_fibration(terminal_map(nerve(linear_poset(2), 3)), FibKind::left)
              .status == Status::no);
}

TEST_CASE("homotopy category of a nerve recovers the category") {
    for (const CategoryPtr& c :
         {linear_poset(2), discrete_category(2), indiscrete2(), parallel_pair()}) {
        // max_dim 3: a nerve truncated at level 3 only presents filler data
        // up to that level, and the homotopy category needs no more.
        auto ho = homotopy_category(nerve(c, 3), {.max_dim = 3});
        CHECK(categories_isomorphic(ho.cat, c));
    }
    // Same content under subset naming: the standard 2-simplex.
    auto ho2 = homotopy_category(std_simplex(2));
    CHECK(ho2.classes.size() == 6);  // 3 generating edges + 3 identities
    CHECK(categories_isomorphic(ho2.cat, linear_poset(2)));
    // Round-trip of the class lookup on a nondegenerate edge.
    Simplex e01 = std_simplex(2)->nondeg(*std_simplex(2)->find_gen("0.1"));
    int k = ho2.class_of(e01);
    CHECK(ho2.classes[k].front() == e01);

    // The truncated interval groupoid: both nondegenerate edges become
    // mutually inverse isomorphisms.
    auto hoj = homotopy_category(std_j(3), {.max_dim = 3});
    CHECK(categories_isomorphic(hoj.cat, indiscrete2()));
    CHECK_FALSE(categories_isomorphic(hoj.cat, linear_poset(1)));
}

TEST_CASE("category isomorphism testing distinguishes small categories") {
    CHECK(categories_isomorphic(linear_poset(1), linear_poset(1)));
    CHECK_FALSE(categories_isomorphic(linear_poset(1), indiscrete2()));
    CHECK_FALSE(categories_isomorphic(discrete_category(2), linear_poset(1)));
    CHECK_FALSE(categories_isomorphic(linear_poset(2), parallel_pair()));
}

TEST_CASE("hom-spaces in nerves are the discrete hom-sets") {
    auto npar = nerve(parallel_pair(), 3);
    auto h = hom_space(npar, "a", "b");
    CHECK(h.object->dimension() == 0);
    CHECK(h.object->gen_count(0) == 2);
    CHECK(h.elements[0].size() == 2);
    CHECK(edges_between(npar, "a", "b") == 2);

    auto hb = hom_space(npar, "b", "a");
    CHECK(hb.object->dimension() == -1);  // empty: no arrows b -> a
    CHECK(edges_between(npar, "b", "a") == 0);

    auto d2 = std_simplex(2);
    auto h02 = hom_space(d2, "0", "2");
    CHECK(h02.object->dimension() == 0);
    CHECK(h02.object->gen_count(0) == 1);
    CHECK(edges_between(d2, "0", "2") == 1);

    auto hb1 = hom_space(std_boundary(1), "0", "1");
    CHECK(hb1.object->dimension() == -1);

    // Endomorphism hom at a vertex of the interval groupoid truncation is a
    // point: every level is the total degeneracy of the identity edge.
    auto j3 = std_j(3);
    auto hjj = hom_space(j3, "0", "0", {.max_dim = 3});
    CHECK(hjj.object->dimension() == 0);
    CHECK(hjj.object->gen_count(0) == 1);
    for (size_t n = 0; n < hjj.elements.size(); ++n) CHECK(hjj.elements[n].size() == 1);
}

TEST_CASE("hom-space over an edge sees only the chosen slice") {
    // Identity of Delta[1]: hom over the nondegenerate edge from the vertex
    // over 0 to the vertex over 1 is a point; the empty direction stays empty.
    auto d1 = std_simplex(1);
    auto id1 = identity_map(d1);
    Simplex e = d1->nondeg(*d1->find_gen("0.1"));
    auto h = hom_space_over_edge(id1, "0", "1", e);
    CHECK(h.object->dimension() == 0);
    CHECK(h.object->gen_count(0) == 1);

    // Boundary inclusion: the two endpoints are not connected over the edge.
    auto p = boundary_inclusion(1);
    auto hb = hom_space_over_edge(p, "0", "1", e);
    CHECK(hb.object->dimension() == -1);

    // Vertices must actually lie over the edge ends.
    CHECK_THROWS_AS((void)hom_space_over_edge(id1, "1", "0", e), SSetError);
}

TEST_CASE("induced hom-space maps: identity gives an isomorphism") {
    auto j3 = std_j(3);
    RunConfig cfg{.max_dim = 3};
    auto h = hom_space(j3, "0", "1", cfg);
    auto g = hom_induced(h, h, identity_map(j3));
    CHECK(is_iso(g));
}

TEST_CASE("contractibility of small complexes") {
    // The terminal map of the point is an identity, so the verdict upgrades
    // to a certificate rather than a bounded search result.
    CHECK(is_contractible_kan(std_simplex(0)).status == Status::yes_certified);
    CHECK(is_contractible_kan(std_boundary(1)).status == Status::no);
    auto empty = FiniteSimplicialSet::build("E", {});
    CHECK(is_contractible_kan(empty).status == Status::no);
}

TEST_CASE("isofibrations: identities and Kan targets pass, vertex inclusion fails") {
    RunConfig cfg{.max_dim = 3};
    auto n2 = nerve(linear_poset(2), 3);
    CHECK(is_isofibration(identity_map(n2), cfg).status == Status::yes_certified);

    auto j3 = std_j(3);
    CHECK(is_isofibration(terminal_map(j3), cfg).yes());

    // The endpoint inclusion into the interval groupoid is an inner
    // fibration, but the isomorphism 0 -> 1 has no lift at the point.
    auto incl = constant_map(std_simplex(0), j3, "0");
    CHECK(classify_fibration(incl, FibKind::inner, cfg).yes());
    Verdict iso = is_isofibration(incl, cfg);
    CHECK(iso.status == Status::no);
    CHECK(iso.detail.find("isomorphism") != std::string::npos);

    // One dimension higher the target itself stops being a quasi-category,
    // so the precondition fails loudly.
    CHECK_THROWS_AS((void)is_isofibration(incl, RunConfig{.max_dim = 4}), SSetError);
}

TEST_CASE("discrete isofibrations require unique isomorphism lifts") {
    RunConfig cfg{.max_dim = 3};
    auto j3 = std_j(3);
    auto hj = homotopy_category(j3, cfg);
    CHECK(is_discrete_isofibration(ho_functor(identity_map(j3), hj, hj)));

    // The projection of the square of the interval groupoid has two
    // isomorphism lifts of 0 -> 1 at (0,0): one per second coordinate.
    auto pr = product(j3, j3);
    auto hp = homotopy_category(pr.object, cfg);
    auto f = ho_functor(pr.proj_left, hp, hj);
    CHECK(hp.cat->objects().size() == 4);
    CHECK_FALSE(is_discrete_isofibration(f));
}

TEST_CASE("fibrewise isofibration checks every vertex fibre") {
    RunConfig cfg{.max_dim = 3};
    auto d1 = std_simplex(1);
    auto id1 = identity_map(d1);
    CHECK(fibrewise_isofibration(id1, id1, id1, cfg).status == Status::yes_certified);

    // Over the point the fibre test is the whole map: the endpoint inclusion
    // into the interval groupoid fails it.
    auto j3 = std_j(3);
    auto incl = constant_map(std_simplex(0), j3, "0");
    Verdict v = fibrewise_isofibration(incl, terminal_map(std_simplex(0)),
                                       terminal_map(j3), cfg);
    CHECK(v.status == Status::no);
    CHECK(v.detail.find("fibre over") != std::string::npos);
}

TEST_CASE("equivalences of quasi-categories") {
    RunConfig cfg{.max_dim = 3};

    // Collapsing the interval groupoid to the point is an equivalence.
    auto term = FiniteCategory::build("term", {"z"}, {{"idz", "z", "z"}},
                                      {{{"idz", "idz"}, "idz"}}, {{"z", "idz"}});
    auto collapse = make_functor(indiscrete2(), term, {{"0", "z"}, {"1", "z"}},
                                 {{"e0", "idz"}, {"e1", "idz"}, {"01", "idz"},
                                  {"10", "idz"}});
    auto f = nerve_map(collapse, 3);
    CHECK(qcat_equivalence(f, cfg).yes());

    // A vertex into two points misses a component: essential surjectivity.
    auto disc = nerve(discrete_category(2), 3);
    auto miss = constant_map(std_simplex(0), disc, "0");
    Verdict vmiss = qcat_equivalence(miss, cfg);
    CHECK(vmiss.status == Status::no);
    CHECK(vmiss.detail.find("essential surjectivity") != std::string::npos);

    // Collapsing two points to one is surjective but not fully faithful: the
    // empty hom compares against a point.
    Verdict vcol = qcat_equivalence(terminal_map(disc), cfg);
    CHECK(vcol.status == Status::no);
    CHECK(vcol.detail.find("hom-space comparison") != std::string::npos);
}

TEST_CASE("indiscrete2 morphism names match the generated nerve") {
    // Guard for the functor spelled out in the equivalence test: the
    // interval groupoid's morphisms are e0, e1 (identities), 01, 10.
    auto c = indiscrete2();
    CHECK(c->identity_of("0") == "e0");
    CHECK(c->identity_of("1") == "e1");
    CHECK(c->hom("0", "1") == std::vector<std::string>{"01"});
    CHECK(c->hom("1", "0") == std::vector<std::string>{"10"});
}

TEST_CASE("inner-to-trivial comparison on the boundary inclusion") {
    auto p = boundary_inclusion(1);
    auto rep = check_inn2triv(p);

    CHECK(rep.whole.status == Status::no);
    CHECK(rep.edges.size() == 3);  // two degenerate edges and "0.1"
    bool saw_nondeg = false;
    for (const auto& [name, v] : rep.edges)
        if (name == "0.1") {
            saw_nondeg = true;
            CHECK(v.status == Status::no);
        } else {
            CHECK(v.yes());
        }
    CHECK(saw_nondeg);
    CHECK(rep.edges_all.status == Status::no);

    CHECK_FALSE(rep.missed_vertex.has_value());
    CHECK(rep.homs_all.status == Status::no);  // empty hom over "0.1"
    CHECK(rep.agreement);
}

TEST_CASE("inner-to-trivial comparison on an isomorphism agrees positively") {
    auto rep = check_inn2triv(identity_map(std_simplex(1)));
    CHECK(rep.whole.status == Status::yes_certified);
    CHECK(rep.edges_all.yes());
    CHECK_FALSE(rep.missed_vertex.has_value());
    CHECK(rep.homs_all.yes());
    CHECK(rep.agreement);
}

TEST_CASE("simplicial homs over a base: frozen small shapes") {
    auto d0 = std_simplex(0);
    auto d1 = std_simplex(1);

    // Fun_pt(Delta[1], Delta[1]) has the three monotone endomorphisms as
    // vertices.
    auto f11 = fun_over(d0, terminal_map(d1), terminal_map(d1));
    CHECK(f11.status.yes());
    CHECK(f11.elements[0].size() == 3);

    // Fun_pt(Delta[0], Delta[1]) is Delta[1] itself.
    auto f01 = fun_over(d0, terminal_map(d0), terminal_map(d1));
    CHECK(f01.status.yes());
    CHECK(f01.elements[0].size() == 2);
    CHECK(find_isomorphism(f01.object, d1).has_value());

    // Fun over the identity marking: only the structure map itself, at every
    // level, so the mapping object is a point.
    auto id1 = identity_map(d1);
    auto fid = fun_over(d1, id1, id1);
    CHECK(fid.status.yes());
    CHECK(fid.object->dimension() == 0);
    CHECK(fid.object->gen_count(0) == 1);

    // Induced map along the identity is an isomorphism.
    CHECK(is_iso(fun_over_induced(f11, f11, id1)));
}

TEST_CASE("parametrised equivalence report: identity over the interval") {
    auto d1 = std_simplex(1);
    auto id1 = identity_map(d1);
    auto rep = check_paraequiv(id1, id1, id1);
    CHECK(rep.fibres.size() == 3);
    CHECK(rep.fibres_all.yes());
    CHECK(rep.funs_all.yes());
    CHECK(rep.pointwise_all.yes());
    CHECK(rep.agreement);
    CHECK_FALSE(rep.note.empty());
}

TEST_CASE("parametrised equivalence report: collapse of two points is refuted") {
    auto disc = nerve(discrete_category(2), 3);
    auto d0 = std_simplex(0);
    auto u = terminal_map(disc);
    auto rep = check_paraequiv(u, terminal_map(disc), identity_map(d0));

    // All three characterizations agree on NO: the slice comparison, the
    // mapping-object comparison, and the pointwise hom comparison all see
    // the empty hom between the two components against a point.
    CHECK(rep.fibres_all.status == Status::no);
    CHECK(rep.funs_all.status == Status::no);
    CHECK(rep.pointwise_all.status == Status::no);
    CHECK(rep.agreement);

    // Essential surjectivity on the unique fibre still holds.
    bool saw_ess = false;
    for (const auto& [name, v] : rep.pointwise)
        if (name.rfind("ess-surj", 0) == 0) {
            saw_ess = true;
            CHECK(v.yes());
        }
    CHECK(saw_ess);
}
