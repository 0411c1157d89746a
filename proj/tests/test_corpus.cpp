#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include <cylkit/category.hpp>
#include <cylkit/corpus.hpp>
#include <cylkit/cylinder.hpp>
#include <cylkit/lifting.hpp>
#include <cylkit/rng.hpp>
#include <cylkit/sset.hpp>

using namespace cylkit;

TEST_CASE("identical seeds reproduce identical draws") {
    SplitMix64 a(123), b(123);
    for (int i = 0; i < 5; ++i) {
        CategoryPtr ca = random_poset(a, 4, "P");
        CategoryPtr cb = random_poset(b, 4, "P");
        CHECK(ca->objects() == cb->objects());
        REQUIRE(ca->morphisms().size() == cb->morphisms().size());
        for (std::size_t k = 0; k < ca->morphisms().size(); ++k)
            CHECK(ca->morphisms()[k].id == cb->morphisms()[k].id);
    }
    for (int i = 0; i < 5; ++i) {
        Cylinder x = random_cylinder(a);
        Cylinder y = random_cylinder(b);
        CHECK(x.total->same_as(*y.total));
        CHECK(x.structure == y.structure);
    }
    CHECK(a.draws() == b.draws());
}

TEST_CASE("random posets are posets") {
    SplitMix64 rng(5);
    for (int i = 0; i < 20; ++i) {
        CategoryPtr c = random_poset(rng, 4, "P" + std::to_string(i));
        CHECK(c->objects().size() >= 2);
        CHECK(c->objects().size() <= 4);
        // Thin: at most one morphism between any two objects.
        for (const std::string& x : c->objects())
            for (const std::string& y : c->objects()) {
                auto h = c->hom(x, y);
                CHECK(h.size() <= 1);
                if (x == y) {
                    REQUIRE(h.size() == 1);
                    CHECK(c->is_identity(h[0]));
                }
            }
        // Antisymmetric: no inverse pairs between distinct objects.
        for (const MorSpec& m : c->morphisms())
            if (m.src != m.dst) CHECK(c->hom(m.dst, m.src).empty());
    }
}

TEST_CASE("random poset functors are functors onto thin targets") {
    SplitMix64 rng(9);
    for (int i = 0; i < 10; ++i) {
        CategoryPtr c = random_poset(rng, 4, "C");
        CategoryPtr d = random_poset(rng, 4, "D");
        FiniteFunctor f = random_poset_functor(rng, c, d);  // validated on build
        CHECK(f.source->objects() == c->objects());
        for (const MorSpec& m : c->morphisms()) {
            const std::string& img = f.on_morphisms.at(m.id);
            CHECK(f.target->mor(img).src == f.on_objects.at(m.src));
            CHECK(f.target->mor(img).dst == f.on_objects.at(m.dst));
        }
    }
}

TEST_CASE("random thin profunctors are closed under both actions") {
    SplitMix64 rng(13);
    for (int i = 0; i < 10; ++i) {
        CategoryPtr a = random_poset(rng, 3, "A");
        CategoryPtr b = random_poset(rng, 3, "B");
        Profunctor m = random_thin_profunctor(rng, a, b);
        collage_category(m);  // validates composition through the collage
        for (const auto& [key, elems] : m.values) CHECK(elems.size() <= 1);
        for (const MorSpec& f : a->morphisms())
            for (const std::string& y : b->objects())
                if (!m.values.at({f.dst, y}).empty())
                    CHECK(m.left_action.count({f.id, m.values.at({f.dst, y})[0]}));
    }
}

TEST_CASE("corpus objects and maps stay inside the advertised pool") {
    SplitMix64 rng(17);
    std::set<std::string> seen;
    for (int i = 0; i < 40; ++i) {
        SSetPtr x = corpus_object(rng);
        CHECK(x->dimension() <= 2);
        seen.insert(x->name());
    }
    CHECK(seen.size() >= 4);  // the draw actually mixes
    for (int i = 0; i < 10; ++i) {
        SSetPtr a = corpus_object(rng), b = corpus_object(rng);
        auto f = random_map(rng, a, b);
        if (f) {
            CHECK(f->source()->same_as(*a));
            CHECK(f->target()->same_as(*b));
        }
    }
}

TEST_CASE("random cylinders validate") {
    SplitMix64 rng(21);
    for (int i = 0; i < 12; ++i) {
        Cylinder x = random_cylinder(rng);
        validate_cylinder(x);
    }
}

TEST_CASE("anodyne pairs compose and certify") {
    SplitMix64 rng(25);
    for (int i = 0; i < 3; ++i) {
        AnodynePair pr = random_anodyne_pair(rng);
        CHECK(pr.u.target()->same_as(*pr.v.source()));
        CHECK(map_props(pr.u).mono);
        CHECK(map_props(pr.v).mono);
        AnodyneCertification cert = certify_inner_anodyne(pr.u);
        CHECK(cert.verdict.status == Status::yes_certified);
    }
}
