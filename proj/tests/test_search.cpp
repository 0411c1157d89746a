#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "cylkit/limits.hpp"
#include "cylkit/search.hpp"
#include "cylkit/standard.hpp"

using namespace cylkit;

namespace {

// Independent oracle: enumerate every assignment of generator images by a
// plain odometer over the target's simplex levels and let make_map's
// validation decide which tuples are simplicial maps.  No pruning, no shared
// search code.
std::vector<SimplicialMap> oracle_maps(const SSetPtr& src, const SSetPtr& tgt) {
    std::vector<SimplicialMap> found;
    std::vector<GenId> gens;
    for (int d = 0; d <= src->dimension(); ++d)
        for (int i = 0; i < src->gen_count(d); ++i) gens.push_back(GenId{d, i});
    if (gens.empty()) {
        found.push_back(make_map(src, tgt, {}));
        return found;
    }
    std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(src->dimension()) + 1);
    for (int d = 0; d <= src->dimension(); ++d) levels[d] = tgt->simplices_at(d);
    for (const auto& g : gens)
        if (levels[static_cast<std::size_t>(g.dim)].empty()) return found;
    std::vector<std::size_t> odo(gens.size(), 0);
    for (;;) {
        std::vector<std::vector<Simplex>> table(static_cast<std::size_t>(src->dimension()) + 1);
        for (int d = 0; d <= src->dimension(); ++d)
            table[d].resize(static_cast<std::size_t>(src->gen_count(d)));
        for (std::size_t j = 0; j < gens.size(); ++j)
            table[gens[j].dim][gens[j].idx] = levels[gens[j].dim][odo[j]];
        try {
            found.push_back(make_map(src, tgt, std::move(table)));
        } catch (const SSetError&) {
        }
        std::size_t j = 0;
        while (j < gens.size()) {
            if (++odo[j] < levels[static_cast<std::size_t>(gens[j].dim)].size()) break;
            odo[j] = 0;
            ++j;
        }
        if (j == gens.size()) break;
    }
    return found;
}

std::uint64_t count_maps(const SSetPtr& src, const SSetPtr& tgt) {
    MapSearchSpec spec;
    spec.source = src;
    spec.target = tgt;
    return enumerate_maps(spec).total;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("enumeration agrees with the odometer oracle") {
    std::vector<std::pair<SSetPtr, SSetPtr>> cases = {
        {std_horn(2, 1), std_simplex(1)},
        {std_boundary(2), std_simplex(1)},
        {std_simplex(1), std_j(2)},
        {std_boundary(1), std_boundary(1)},
        {std_simplex(2), std_simplex(2)},
        {std_spine(3), std_simplex(1)},
        {std_empty(), std_simplex(2)},
        {std_boundary(1), std_empty()},
    };
    for (const auto& [src, tgt] : cases) {
        CAPTURE(src->name());
        CAPTURE(tgt->name());
        auto oracle = oracle_maps(src, tgt);
        MapSearchSpec spec;
        spec.source = src;
        spec.target = tgt;
        auto got = enumerate_maps(spec);
        REQUIRE(got.complete);
        REQUIRE(got.total == oracle.size());
        REQUIRE(got.maps.size() == oracle.size());
        // Same set of maps: every oracle map appears exactly once.
        for (const auto& f : oracle) {
            std::size_t hits = 0;
            for (const auto& g : got.maps)
                if (f == g) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("representable counts: maps Delta[m] -> X are the m-simplices") {
    for (int m = 0; m <= 3; ++m) {
        for (const auto& x : {std_simplex(2), std_boundary(2), std_horn(2, 1), std_j(2)}) {
            CAPTURE(m);
            CAPTURE(x->name());
            CHECK(count_maps(std_simplex(m), x) == x->simplices_at(m).size());
        }
    }
    // Against a simplex that is itself a nerve of a linear poset the count is
    // the number of monotone maps [m] -> [n].
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(count_maps(std_simplex(m), std_simplex(n)) ==
                  binomial(n + m + 1, n));
}

TEST_CASE("canonical order and limit") {
    MapSearchSpec spec;
    spec.source = std_simplex(1);
    spec.target = std_simplex(1);
    auto all = enumerate_maps(spec);
    REQUIRE(all.total == 3);
    REQUIRE(all.complete);

    spec.limit = 2;
    auto two = enumerate_maps(spec);
    CHECK(two.total == 2);
    CHECK(two.maps.size() == 2);
    CHECK_FALSE(two.complete);
    CHECK(two.maps[0] == all.maps[0]);
    CHECK(two.maps[1] == all.maps[1]);

    // Determinism: identical inputs, identical outputs.
    auto again = enumerate_maps(spec);
    REQUIRE(again.maps.size() == two.maps.size());
    for (std::size_t i = 0; i < two.maps.size(); ++i) CHECK(two.maps[i] == again.maps[i]);
    CHECK(again.nodes == two.nodes);
}

TEST_CASE("forced images") {
    auto d1 = std_simplex(1);
    MapSearchSpec spec;
    spec.source = d1;
    spec.target = d1;
    spec.forced["0"] = Simplex{0, {}, *d1->find_gen("1")};
    auto res = enumerate_maps(spec);
    // Monotone endomaps of [1] sending 0 to 1: only the constant at 1.
    REQUIRE(res.total == 1);
    auto img = res.maps[0].gen_image(*d1->find_gen("0.1"));
    CHECK(img.degenerate());
    CHECK(img.gen == *d1->find_gen("1"));

    // Inconsistent pin: constant edge cannot land on the top cell.
    auto d2 = std_simplex(2);
    MapSearchSpec bad;
    bad.source = d1;
    bad.target = d2;
    bad.forced["0.1"] = Simplex{1, {0}, *d2->find_gen("2")};
    bad.forced["0"] = Simplex{0, {}, *d2->find_gen("0")};
    auto none = enumerate_maps(bad);
    CHECK(none.total == 0);
    CHECK(none.complete);

    MapSearchSpec wrong;
    wrong.source = d1;
    wrong.target = d1;
    wrong.forced["no-such-gen"] = Simplex{0, {}, GenId{0, 0}};
    CHECK_THROWS_AS(enumerate_maps(wrong), SSetError);

    MapSearchSpec wrong_dim;
    wrong_dim.source = d1;
    wrong_dim.target = d1;
    wrong_dim.forced["0"] = Simplex{1, {}, *d1->find_gen("0.1")};
    CHECK_THROWS_AS(enumerate_maps(wrong_dim), SSetError);
}

TEST_CASE("over-base constraint enumerates sections") {
    auto d1 = std_simplex(1);
    auto pr = product(d1, d1);
    MapSearchSpec spec;
    spec.source = d1;
    spec.target = pr.object;
    spec.over_source = identity_map(d1);
    spec.over_target = pr.proj_left;
    auto res = enumerate_maps(spec);
    // Sections of the first projection correspond to maps into the second
    // factor: the three monotone endomaps of [1].
    REQUIRE(res.total == 3);
    for (const auto& s : res.maps) CHECK(compose(pr.proj_left, s) == identity_map(d1));

    MapSearchSpec lopsided;
    lopsided.source = d1;
    lopsided.target = pr.object;
    lopsided.over_source = identity_map(d1);
    CHECK_THROWS_AS(enumerate_maps(lopsided), SSetError);
}

TEST_CASE("isomorphism search") {
    CHECK(find_isomorphism(std_simplex(2), std_simplex(2)).has_value());
    CHECK_FALSE(find_isomorphism(std_simplex(2), std_horn(2, 1)).has_value());

    auto pr = product(std_simplex(1), std_simplex(0));
    auto iso = find_isomorphism(pr.object, std_simplex(1));
    REQUIRE(iso.has_value());
    CHECK(is_iso(*iso));

    // Opposite of the truncated interval nerve is isomorphic to itself.
    CHECK(find_isomorphism(opposite(std_j(2)), std_j(2)).has_value());

    // Equal generator counts are not enough: a loop with an isolated point is
    // not isomorphic to a segment.
    auto loop_plus_point = FiniteSimplicialSet::build(
        "loop+pt", {{GenSpec{"a", {}}, GenSpec{"b", {}}},
                    {GenSpec{"e", {FaceRef{{}, "a"}, FaceRef{{}, "a"}}}}});
    auto segment = FiniteSimplicialSet::build(
        "seg", {{GenSpec{"a", {}}, GenSpec{"b", {}}},
                {GenSpec{"e", {FaceRef{{}, "b"}, FaceRef{{}, "a"}}}}});
    CHECK_FALSE(find_isomorphism(loop_plus_point, segment).has_value());
    CHECK(find_isomorphism(loop_plus_point, loop_plus_point).has_value());
}
