#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cylkit/category.hpp"
#include "cylkit/sset.hpp"
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

TEST_CASE("simplex levels match the binomial oracle") {
    for (int m = 0; m <= 3; ++m) {
        auto dm = std_simplex(m);
        CHECK(dm->dimension() == m);
        for (int n = 0; n <= 5; ++n)
            CHECK((long long)dm->simplices_at(n).size() == binom(m + n + 1, m));
    }
    CHECK(std_simplex(2)->simplices_at(3).size() == 15);
}

TEST_CASE("presheaf action is functorial on assorted objects") {
    std::vector<SSetPtr> objects = {std_simplex(3), std_boundary(3), std_horn(3, 1),
                                    std_j(2), std_spine(3)};
    for (const auto& x : objects) {
        for (int n = 0; n <= 4; ++n)
            for (const Simplex& s : x->simplices_at(n)) {
                CHECK(x->act(s, delta::identity(n)) == s);
                for (int k = 0; k <= 3; ++k)
                    for (const auto& op : delta::all_maps(k, n)) {
                        Simplex t = x->act(s, op);
                        CHECK(t.dim == k);
                        for (int j = 0; j <= 2; ++j)
                            for (const auto& op2 : delta::all_maps(j, k))
                                CHECK(x->act(t, op2) == x->act(s, delta::compose(op, op2)));
                    }
            }
    }
}

TEST_CASE("simplex listing is canonical: sorted, duplicate-free, complete") {
    auto x = std_horn(2, 1);
    for (int n = 0; n <= 3; ++n) {
        auto level = x->simplices_at(n);
        for (size_t i = 0; i + 1 < level.size(); ++i) {
            CHECK(FiniteSimplicialSet::simplex_less(level[i], level[i + 1]));
            CHECK(!(level[i] == level[i + 1]));
        }
        // complete: every degeneracy word of every lower generator appears
        size_t expect = 0;
        for (int d = 0; d <= std::min(n, x->dimension()); ++d)
            expect += x->gen_count(d) * delta::all_epis(n, d).size();
        CHECK(level.size() == expect);
    }
}

TEST_CASE("boundaries and horns have the right generator counts") {
    for (int n = 1; n <= 4; ++n) {
        auto b = gen_counts(std_boundary(n));
        REQUIRE((int)b.size() == n);
        for (int d = 0; d < n; ++d) CHECK((long long)b[d] == binom(n + 1, d + 1));
        for (int k = 0; k <= n; ++k) {
            auto h = gen_counts(std_horn(n, k));
            REQUIRE((int)h.size() == n);
            for (int d = 0; d + 1 < n; ++d) CHECK((long long)h[d] == binom(n + 1, d + 1));
            CHECK(h[n - 1] == n);
        }
    }
    CHECK(std_boundary(0)->dimension() == -1);
    CHECK(gen_counts(std_spine(4)) == std::vector<int>{5, 4});
}

TEST_CASE("degenerate_at is totally degenerate") {
    auto x = std_simplex(2);
    GenId v = *x->find_gen("1");
    Simplex s = x->degenerate_at(v, 3);
    CHECK(s.dim == 3);
    CHECK(s.word == std::vector<int>{2, 1, 0});
    for (int i = 0; i <= 3; ++i) CHECK(x->act(s, delta::face(3, i)) == x->degenerate_at(v, 2));
}

TEST_CASE("the walking interval groupoid nerve: frozen face table") {
    auto j2 = std_j(2);
    CHECK(gen_counts(j2) == std::vector<int>{2, 2, 2});
    CHECK(j2->provenance().kind == Provenance::Kind::truncated_nerve);
    CHECK(j2->provenance().truncation == 2);

    // dim-2 chains: 01.10 (0 -> 1 -> 0) and 10.01; inner face composes to an
    // identity, hence a degenerate edge.
    GenId c = *j2->find_gen("01.10");
    CHECK(j2->gen_face(c, 0) == Simplex{1, {}, *j2->find_gen("10")});
    CHECK(j2->gen_face(c, 1) == Simplex{1, {0}, *j2->find_gen("0")});
    CHECK(j2->gen_face(c, 2) == Simplex{1, {}, *j2->find_gen("01")});

    auto j3 = std_j(3);
    CHECK(gen_counts(j3) == std::vector<int>{2, 2, 2, 2});
    CHECK(j3->find_gen("01.10.01").has_value());
}

TEST_CASE("complete nerves are marked complete") {
    auto n2 = nerve(linear_poset(2), 2);
    CHECK(n2->provenance().kind == Provenance::Kind::complete_nerve);
    CHECK(gen_counts(n2) == gen_counts(std_simplex(2)));
    // the indiscrete groupoid has nondegenerate chains in every dimension
    CHECK(nerve(indiscrete2(), 4)->provenance().kind == Provenance::Kind::truncated_nerve);
}

TEST_CASE("nerve of a functor: identity images become degeneracy words") {
    auto p2 = linear_poset(2);
    auto p1 = linear_poset(1);
    // collapse 1 and 2
    FiniteFunctor f = make_functor(
        p2, p1, {{"0", "0"}, {"1", "1"}, {"2", "1"}},
        {{"m0_0", "m0_0"}, {"m1_1", "m1_1"}, {"m2_2", "m1_1"}, {"m0_1", "m0_1"},
         {"m0_2", "m0_1"}, {"m1_2", "m1_1"}});
    SimplicialMap nf = nerve_map(f, 3);
    CHECK(nf.is_nerve_map());
    auto src = nf.source();
    auto dst = nf.target();
    GenId chain = *src->find_gen("m0_1.m1_2");
    // images (m0_1, m1_1): identity in slot 1
    CHECK(nf.gen_image(chain) == Simplex{2, {1}, *dst->find_gen("m0_1")});
    GenId edge = *src->find_gen("m1_2");
    CHECK(nf.gen_image(edge) == Simplex{1, {0}, *dst->find_gen("1")});
}

TEST_CASE("opposites") {
    for (const auto& x : {std_simplex(2), std_j(2), std_horn(2, 1)}) {
        auto op = opposite(x);
        CHECK(opposite(op)->same_as(*x));
        CHECK(gen_counts(op) == gen_counts(x));
    }
    // 0.1 in the opposite simplex has its endpoints swapped
    auto op1 = opposite(std_simplex(1));
    GenId e = *op1->find_gen("0.1");
    CHECK(op1->gen_name(op1->gen_face(e, 0).gen) == "0");
    CHECK(op1->gen_name(op1->gen_face(e, 1).gen) == "1");
    // opposite of a left horn looks like the matching right horn
    auto oph = opposite(std_horn(2, 0));
    GenId f = *oph->find_gen("0.1");
    CHECK(oph->gen_name(oph->gen_face(f, 0).gen) == "0");
}

TEST_CASE("map validation accepts inclusions and rejects face mismatches") {
    SimplicialMap inc = horn_inclusion(2, 1);
    MapProps props = map_props(inc);
    CHECK(props.mono);
    CHECK(!props.epi);
    CHECK(props.bijective_on_0);
    CHECK(is_iso(identity_map(std_simplex(2))));
    CHECK(!is_identity(inc));

    // sending the edge 0.1 to 1.2 breaks the vertex assignment
    auto d1 = std_simplex(1);
    auto d2 = std_simplex(2);
    std::vector<std::vector<Simplex>> bad(2);
    bad[0] = {Simplex{0, {}, *d2->find_gen("0")}, Simplex{0, {}, *d2->find_gen("1")}};
    bad[1] = {Simplex{1, {}, *d2->find_gen("1.2")}};
    CHECK_THROWS_AS(make_map(d1, d2, bad), SSetError);
}

TEST_CASE("composition of maps and opposite maps") {
    SimplicialMap i = horn_inclusion(2, 1);
    SimplicialMap c = simplex_classifier(std_simplex(2), std_simplex(2)->nondeg(GenId{2, 0}));
    CHECK(is_iso(c));
    SimplicialMap both = compose(c, i);
    CHECK(both.source()->same_as(*std_horn(2, 1)));
    SimplicialMap iop = opposite_map(i);
    CHECK(map_props(iop).mono);
    CHECK(iop.source()->same_as(*opposite(std_horn(2, 1))));
}

TEST_CASE("simplex classifiers agree with the acted simplex") {
    auto x = std_j(2);
    for (int n = 0; n <= 2; ++n)
        for (const Simplex& s : x->simplices_at(n)) {
            SimplicialMap cl = simplex_classifier(x, s);
            auto dn = cl.source();
            // the top generator goes to s itself
            CHECK(cl.gen_image(*dn->find_gen(subset_name([&] {
                std::vector<int> all;
                for (int v = 0; v <= n; ++v) all.push_back(v);
                return all;
            }()))) == s);
        }
}

TEST_CASE("structural equality ignores provenance but not faces") {
    auto a = std_simplex(1);
    auto b = FiniteSimplicialSet::build(
        "other",
        {{GenSpec{"0", {}}, GenSpec{"1", {}}},
         {GenSpec{"0.1", {FaceRef{{}, "1"}, FaceRef{{}, "0"}}}}});
    CHECK(a->same_as(*b));
    auto c = FiniteSimplicialSet::build(
        "loop", {{GenSpec{"0", {}}, GenSpec{"1", {}}},
                 {GenSpec{"0.1", {FaceRef{{}, "0"}, FaceRef{{}, "0"}}}}});
    CHECK(!a->same_as(*c));
}

TEST_CASE("build rejects broken face tables") {
    // d_0 d_0 = d_0 d_1 fails: square face identity violated
    std::vector<std::vector<GenSpec>> gens(3);
    gens[0] = {GenSpec{"a", {}}, GenSpec{"b", {}}, GenSpec{"c", {}}, GenSpec{"d", {}}};
    gens[1] = {GenSpec{"e", {FaceRef{{}, "a"}, FaceRef{{}, "b"}}},
               GenSpec{"f", {FaceRef{{}, "c"}, FaceRef{{}, "d"}}},
               GenSpec{"g", {FaceRef{{}, "a"}, FaceRef{{}, "c"}}}};
    gens[2] = {GenSpec{"t", {FaceRef{{}, "e"}, FaceRef{{}, "f"}, FaceRef{{}, "g"}}}};
    CHECK_THROWS_AS(FiniteSimplicialSet::build("bad", gens), SSetError);
    CHECK_THROWS_AS(FiniteSimplicialSet::build(
                        "dup", {{GenSpec{"x", {}}, GenSpec{"x", {}}}}),
                    SSetError);
}

TEST_CASE("category validation") {
    CHECK_THROWS_AS(FiniteCategory::build("bad", {"x"}, {{"ex", "x", "x"}, {"f", "x", "x"}},
                                          {{{"ex", "ex"}, "ex"},
                                           {{"f", "ex"}, "f"},
                                           {{"ex", "f"}, "f"},
                                           {{"f", "f"}, "ex"}},
                                          {{"x", "f"}}),  // wrong identity
                    CategoryError);
    auto ind = indiscrete2();
    CHECK(ind->is_iso("01"));
    auto opp = ind->opposite();
    CHECK(opp->mor("01").src == "1");
    CHECK(opp->compose("10", "01") == ind->compose("01", "10"));
}

TEST_CASE("profunctors and collages") {
    auto p1 = linear_poset(1);
    auto dot = FiniteCategory::build("dot", {"z"}, {{"ez", "z", "z"}},
                                     {{{"ez", "ez"}, "ez"}}, {{"z", "ez"}});
    Profunctor t = terminal_profunctor(p1, dot);
    CHECK(t.values.at({"0", "z"}).size() == 1);
    auto col = collage_category(t);
    CHECK(col->hom("0", "z") == std::vector<std::string>{"u(0,z)"});
    CHECK(col->hom("z", "0").empty());
    CHECK(col->compose("u(1,z)", "m0_1") == "u(0,z)");
    // nerve of the collage: the profunctor elements appear as edges
    auto n = nerve(col, 2);
    CHECK(n->find_gen("m0_1.u(1,z)").has_value());
}

TEST_CASE("subcomplexes keep names and reject non-closed subsets") {
    auto d2 = std_simplex(2);
    auto sub = subcomplex(d2, {"0", "1", "0.1"}, "edge01");
    CHECK(sub->same_as(*std_simplex(1)));
    CHECK_THROWS_AS(subcomplex(d2, {"0.1"}, "noends"), SSetError);
    SimplicialMap inc = subcomplex_inclusion(sub, d2);
    CHECK(map_props(inc).mono);
}
