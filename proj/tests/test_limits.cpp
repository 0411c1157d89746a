#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cylkit/limits.hpp"
#include "cylkit/standard.hpp"

using namespace cylkit;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<int> gen_counts(const SSetPtr& x) {
    std::vector<int> out;
    for (int d = 0; d <= x->dimension(); ++d) out.push_back(x->gen_count(d));
    return out;
}

}  // namespace

TEST_CASE("coproducts prime clashing names and admit mediating maps") {
    auto d1 = std_simplex(1);
    Coproduct cp = coproduct(d1, d1);
    CHECK(gen_counts(cp.object) == std::vector<int>{4, 2});
    CHECK(cp.object->find_gen("0'").has_value());
    CHECK(cp.object->find_gen("0.1'").has_value());
    CHECK(map_props(cp.inj[0]).mono);
    CHECK(map_props(cp.inj[1]).mono);
    SimplicialMap fold = cp.mediating({identity_map(d1), identity_map(d1)});
    CHECK(map_props(fold).epi);

    Coproduct many = coproduct_many({std_simplex(0), std_simplex(0), d1}, "three");
    CHECK(gen_counts(many.object) == std::vector<int>{4, 1});
    CHECK(many.object->find_gen("2#0.1").has_value());
}

TEST_CASE("pushout of two triangles along an inner horn") {
    SimplicialMap i = horn_inclusion(2, 1);
    Pushout po = pushout(i, i, "glued");
    CHECK(gen_counts(po.object) == std::vector<int>{3, 4, 2});
    CHECK(map_props(po.inj_left).mono);
    CHECK(map_props(po.inj_right).mono);
    SimplicialMap fold = po.mediating(identity_map(i.target()), identity_map(i.target()));
    CHECK(map_props(fold).epi);
    CHECK(!map_props(fold).mono);
}

TEST_CASE("pushout quotients: collapsing the boundary of an edge") {
    SimplicialMap i = boundary_inclusion(1);
    SimplicialMap t = terminal_map(std_boundary(1));
    Pushout po = pushout(i, t, "circle");
    CHECK(gen_counts(po.object) == std::vector<int>{1, 1});
    // the two degeneracies of the loop and the degenerate point
    CHECK(po.object->simplices_at(2).size() == 3);
    GenId loop = *po.object->find_gen("0.1");
    CHECK(po.object->gen_face(loop, 0) == po.object->gen_face(loop, 1));
}

TEST_CASE("pushout along an identity is an isomorphism on the other leg") {
    SimplicialMap i = horn_inclusion(3, 2);
    Pushout po = pushout(identity_map(i.source()), i, "same");
    CHECK(is_iso(po.inj_right));
    // class names come from the horn side where present, the simplex side
    // elsewhere, so the result is the simplex on the nose
    CHECK(po.object->same_as(*std_simplex(3)));
}

TEST_CASE("products match the level-count oracle") {
    auto d1 = std_simplex(1);
    Pullback sq = product(d1, d1);
    CHECK(gen_counts(sq.object) == std::vector<int>{4, 5, 2});
    for (int n = 0; n <= 4; ++n)
        CHECK((long long)sq.object->simplices_at(n).size() ==
              binom(n + 2, 1) * binom(n + 2, 1));
    // projections recover both factors on vertices
    CHECK(map_props(sq.proj_left).epi);
    CHECK(map_props(sq.proj_right).epi);

    Pullback cube = product(sq.object, d1);
    for (int n = 0; n <= 3; ++n)
        CHECK((long long)cube.object->simplices_at(n).size() ==
              binom(n + 2, 1) * binom(n + 2, 1) * binom(n + 2, 1));
}

TEST_CASE("pullback mediating maps, including above the stored levels") {
    auto d1 = std_simplex(1);
    Pullback sq = product(d1, d1);
    SimplicialMap diag = sq.mediating(identity_map(d1), identity_map(d1));
    CHECK(compose(sq.proj_left, diag) == identity_map(d1));
    CHECK(map_props(diag).mono);

    // a 3-simplex mapping in: exercises pair lookups above dim 1 + dim 1
    auto d3 = std_simplex(3);
    auto collapse = [&](int cut) {
        std::map<std::string, std::pair<std::vector<int>, std::string>> images;
        for (int d = 0; d <= 3; ++d)
            for (int i = 0; i < d3->gen_count(d); ++i) {
                std::string nm = d3->gen_name(GenId{d, i});
                std::vector<int> verts = vertex_list(nm);
                std::vector<int> hit;
                for (int v : verts) {
                    int img = v <= cut ? 0 : 1;
                    if (hit.empty() || hit.back() != img) hit.push_back(img);
                }
                // degeneracy word of the monotone collapse on this simplex
                std::vector<int> word;
                for (size_t t = 0; t + 1 < verts.size(); ++t)
                    if ((verts[t] <= cut) == (verts[t + 1] <= cut)) word.push_back((int)t);
                std::reverse(word.begin(), word.end());
                images[nm] = {word, subset_name(hit)};
            }
        return make_map_by_names(d3, d1, images);
    };
    SimplicialMap r = collapse(1);
    SimplicialMap s = collapse(2);
    SimplicialMap m = sq.mediating(r, s);
    CHECK(compose(sq.proj_left, m) == r);
    CHECK(compose(sq.proj_right, m) == s);
}

TEST_CASE("vertex fibres are induced subcomplexes") {
    auto d1 = std_simplex(1);
    Pullback sq = product(d1, d1);
    // project to the first factor, take the fibre over each endpoint
    Fibre f0 = fibre_over_vertex(sq.proj_left, "0");
    CHECK(gen_counts(f0.object) == std::vector<int>{2, 1});
    CHECK(map_props(f0.inclusion).mono);
    Fibre f1 = fibre_over_vertex(sq.proj_left, "1");
    CHECK(gen_counts(f1.object) == std::vector<int>{2, 1});
}

TEST_CASE("joins of simplices are simplices (binomial oracle)") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 1; ++n) {
            Join j = join(std_simplex(m), std_simplex(n));
            auto counts = gen_counts(j.object);
            auto expect = gen_counts(std_simplex(m + n + 1));
            CHECK(counts == expect);
            for (int lvl = 0; lvl <= 3; ++lvl)
                CHECK(j.object->simplices_at(lvl).size() ==
                      std_simplex(m + n + 1)->simplices_at(lvl).size());
        }
    Join seg = join(std_simplex(0), std_simplex(0));
    CHECK(seg.object->find_gen("(0*0)").has_value());
    CHECK(seg.object->find_gen("0'").has_value());
}

TEST_CASE("join inclusions, structure map, and empties") {
    auto a = std_horn(2, 1);
    auto b = std_simplex(1);
    Join j = join(a, b);
    CHECK(map_props(j.incl_left).mono);
    CHECK(map_props(j.incl_right).mono);
    CHECK(compose(j.structure, j.incl_left) == constant_map(a, j.structure.target(), "0"));
    CHECK(compose(j.structure, j.incl_right) == constant_map(b, j.structure.target(), "1"));

    Join le = join(std_empty(), b);
    CHECK(le.object->same_as(*b));
    Join re = join(a, std_empty());
    CHECK(re.object->same_as(*a));
    Join ee = join(std_empty(), std_empty());
    CHECK(ee.object->dimension() == -1);
}

TEST_CASE("split and reassemble every simplex of a join") {
    Join j = join(std_simplex(1), std_horn(2, 0));
    for (int n = 0; n <= 5; ++n)
        for (const Simplex& s : j.object->simplices_at(n)) {
            Join::Split sp = j.split(s);
            if (sp.a && sp.b) {
                CHECK(j.pair(*sp.a, *sp.b) == s);
                CHECK(sp.a->dim + sp.b->dim + 1 == n);
            } else if (sp.a) {
                CHECK(j.left_simplex(*sp.a) == s);
            } else {
                REQUIRE(sp.b.has_value());
                CHECK(j.right_simplex(*sp.b) == s);
            }
        }
}

TEST_CASE("join structure map fibres recover the factors") {
    Join j = join(std_simplex(1), std_horn(2, 0));
    Fibre f0 = fibre_over_vertex(j.structure, "0");
    CHECK(f0.object->same_as(*std_simplex(1)));
    Fibre f1 = fibre_over_vertex(j.structure, "1");
    CHECK(gen_counts(f1.object) == gen_counts(std_horn(2, 0)));
}

TEST_CASE("join is functorial") {
    Join src = join(std_horn(2, 1), std_simplex(0));
    Join dst = join(std_simplex(2), std_simplex(0));
    SimplicialMap jm = join_map(src, dst, horn_inclusion(2, 1),
                                identity_map(std_simplex(0)));
    CHECK(map_props(jm).mono);
    SimplicialMap jid = join_map(src, src, identity_map(src.left),
                                 identity_map(src.right));
    CHECK(is_identity(jid));
    // compatible with the structure maps
    CHECK(compose(dst.structure, jm) == src.structure);
}

TEST_CASE("pushout corner of a horn against the point is a bigger horn") {
    SimplicialMap f = horn_inclusion(2, 1);
    SimplicialMap g = initial_map(std_simplex(0));
    LeibnizJoin lj = leibniz_join(f, g);
    CHECK(gen_counts(lj.corner_domain.object) == gen_counts(std_horn(3, 1)));
    CHECK(map_props(lj.corner).mono);
    CHECK(!map_props(lj.corner).epi);
    CHECK(lj.nt.object->same_as(*join(std_simplex(2), std_simplex(0)).object));

    // boundary against boundary: dDelta[1] x dDelta[0] gives dDelta[2]
    LeibnizJoin bb = leibniz_join(boundary_inclusion(1), boundary_inclusion(0));
    CHECK(gen_counts(bb.corner_domain.object) == gen_counts(std_boundary(2)));
    CHECK(map_props(bb.corner).mono);
}

TEST_CASE("cell presentations of monomorphisms replay to the target") {
    CellPresentation cp = cell_presentation_mono(horn_inclusion(2, 1));
    REQUIRE(cp.steps.size() == 2);
    CHECK(cp.steps[0].dim == 1);
    CHECK(cp.steps[0].cell == "0.2");
    CHECK(cp.steps[1].dim == 2);
    CHECK(cp.steps[1].cell == "0.1.2");
    CHECK(is_iso(cp.final_iso));

    CellPresentation whole = cell_presentation_mono(initial_map(std_simplex(1)));
    CHECK(whole.steps.size() == 3);
    CHECK(whole.steps[0].dim == 0);

    CHECK_THROWS_AS(cell_presentation_mono(terminal_map(std_simplex(1))), SSetError);
}
