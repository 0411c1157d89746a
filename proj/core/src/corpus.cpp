// Deterministic corpus construction.  Enumerate-then-index is used wherever
// a uniform draw is needed: enumeration orders are canonical, so the k-th
// entry is the same on every toolchain.
#include "cylkit/corpus.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "cylkit/lifting.hpp"
#include "cylkit/limits.hpp"
#include "cylkit/search.hpp"
#include "cylkit/standard.hpp"

namespace cylkit {

namespace {

std::string mid(int i, int j) {
    return "m" + std::to_string(i) + "_" + std::to_string(j);
}

// Relation matrix of a poset drawn on the linear order of its indices:
// reflexive, a coin per i < j, then transitive closure.
std::vector<std::vector<bool>> random_relation(SplitMix64& rng, int k) {
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) rel[i][i] = true;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) rel[i][j] = rng.coin();
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (rel[i][m] && rel[m][j]) rel[i][j] = true;
    return rel;
}

// Object and morphism ids carry the category name so that two differently
// named posets can meet in one collage without clashes.
CategoryPtr poset_from_relation(const std::vector<std::vector<bool>>& rel,
                                const std::string& name) {
    int k = static_cast<int>(rel.size());
    auto obj = [&](int i) { return name + "q" + std::to_string(i); };
    auto arr = [&](int i, int j) { return name + mid(i, j); };
    std::vector<std::string> objects;
    std::vector<MorSpec> mors;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> ident;
    for (int i = 0; i < k; ++i) {
        objects.push_back(obj(i));
        ident[obj(i)] = arr(i, i);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (rel[i][j]) mors.push_back(MorSpec{arr(i, j), obj(i), obj(j)});
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            for (int m = j; m < k; ++m)
                if (rel[i][j] && rel[j][m]) comp[{arr(j, m), arr(i, j)}] = arr(i, m);
    return FiniteCategory::build(name, std::move(objects), std::move(mors), std::move(comp),
                                 std::move(ident));
}

bool related(const CategoryPtr& c, const std::string& x, const std::string& y) {
    return !c->hom(x, y).empty();
}

}  // namespace

CategoryPtr random_poset(SplitMix64& rng, int max_objects, const std::string& name) {
    int k = 2 + static_cast<int>(rng.below(std::max(1, max_objects - 1)));
    return poset_from_relation(random_relation(rng, k), name);
}

FiniteFunctor random_poset_functor(SplitMix64& rng, const CategoryPtr& c,
                                   const CategoryPtr& d) {
    const auto& cobj = c->objects();
    const auto& dobj = d->objects();
    int kc = static_cast<int>(cobj.size()), kd = static_cast<int>(dobj.size());
    std::vector<std::vector<int>> monotone;
    std::vector<int> pick(kc, 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < kc && ok; ++i)
            for (int j = 0; j < kc && ok; ++j)
                if (related(c, cobj[i], cobj[j]) && !related(d, dobj[pick[i]], dobj[pick[j]]))
                    ok = false;
        if (ok) monotone.push_back(pick);
        int pos = kc - 1;
        while (pos >= 0 && pick[pos] == kd - 1) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    const std::vector<int>& sel = monotone[rng.below(monotone.size())];
    std::map<std::string, std::string> on_obj, on_mor;
    for (int i = 0; i < kc; ++i) on_obj[cobj[i]] = dobj[sel[i]];
    auto dmor = [&](const std::string& x, const std::string& y) {
        return d->hom(x, y).at(0);  // thin: the unique morphism
    };
    for (const MorSpec& m : c->morphisms())
        on_mor[m.id] = dmor(on_obj.at(m.src), on_obj.at(m.dst));
    return make_functor(c, d, std::move(on_obj), std::move(on_mor));
}

Profunctor random_thin_profunctor(SplitMix64& rng, const CategoryPtr& a,
                                  const CategoryPtr& b) {
    const auto& aobj = a->objects();
    const auto& bobj = b->objects();
    std::map<std::pair<std::string, std::string>, bool> present;
    for (const auto& x : aobj)
        for (const auto& y : bobj) present[{x, y}] = rng.coin();
    // Close under both actions: a' <= a and b <= b' propagate presence.
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& x : aobj)
            for (const auto& y : bobj) {
                if (present[{x, y}]) continue;
                for (const auto& x2 : aobj)
                    for (const auto& y2 : bobj)
                        if (present[{x2, y2}] && related(a, x, x2) && related(b, y2, y)) {
                            present[{x, y}] = true;
                            changed = true;
                        }
            }
    }
    auto el = [](const std::string& x, const std::string& y) {
        return "u(" + x + "," + y + ")";
    };
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> values;
    for (const auto& x : aobj)
        for (const auto& y : bobj)
            values[{x, y}] = present[{x, y}] ? std::vector<std::string>{el(x, y)}
                                             : std::vector<std::string>{};
    std::map<std::pair<std::string, std::string>, std::string> lact, ract;
    for (const MorSpec& f : a->morphisms())  // f: x' -> x acts M(x,b) -> M(x',b)
        for (const auto& y : bobj)
            if (present[{f.dst, y}]) lact[{f.id, el(f.dst, y)}] = el(f.src, y);
    for (const MorSpec& g : b->morphisms())  // g: y -> y' acts M(a,y) -> M(a,y')
        for (const auto& x : aobj)
            if (present[{x, g.src}]) ract[{g.id, el(x, g.src)}] = el(x, g.dst);
    return make_profunctor(a, b, std::move(values), std::move(lact), std::move(ract));
}

SSetPtr corpus_object(SplitMix64& rng) {
    switch (rng.below(7)) {
        case 0: return std_simplex(0);
        case 1: return std_simplex(1);
        case 2: return std_simplex(2);
        case 3: return std_boundary(1);
        case 4: return std_boundary(2);
        case 5: return std_horn(2, 1);
        default: return std_spine(2);
    }
}

std::optional<SimplicialMap> random_map(SplitMix64& rng, const SSetPtr& a,
                                        const SSetPtr& b) {
    MapSearchSpec spec;
    spec.source = a;
    spec.target = b;
    MapSearchResult res = enumerate_maps(spec);
    if (res.maps.empty()) return std::nullopt;
    return res.maps[rng.below(res.maps.size())];
}

namespace {

SSetPtr small_endpoint(SplitMix64& rng) {
    switch (rng.below(5)) {
        case 0: return std_simplex(0);
        case 1: return std_simplex(1);
        case 2: return std_boundary(1);
        case 3: return std_horn(2, 1);
        default: return std_spine(2);
    }
}

}  // namespace

Cylinder random_cylinder(SplitMix64& rng) {
    switch (rng.below(4)) {
        case 0: return initial_cylinder(small_endpoint(rng), small_endpoint(rng));
        case 1: return terminal_cylinder(small_endpoint(rng), small_endpoint(rng));
        case 2: {
            CategoryPtr a = random_poset(rng, 2, "A");
            CategoryPtr b = random_poset(rng, 2, "B");
            return collage_nerve(random_thin_profunctor(rng, a, b), 3);
        }
        default: {
            Cylinder base = rng.coin()
                                ? initial_cylinder(small_endpoint(rng), small_endpoint(rng))
                                : terminal_cylinder(small_endpoint(rng), small_endpoint(rng));
            return dual_cylinder(base);
        }
    }
}

namespace {

// Pushout of one inner horn inclusion along a random attaching map.
SimplicialMap attach_inner_horn(SplitMix64& rng, const SSetPtr& base) {
    int n = 2 + static_cast<int>(rng.below(2));
    int k = 1 + static_cast<int>(rng.below(n - 1));
    SimplicialMap incl = horn_inclusion(n, k);
    MapSearchSpec spec;
    spec.source = incl.source();
    spec.target = base;
    MapSearchResult res = enumerate_maps(spec);
    const SimplicialMap& f = res.maps[rng.below(res.maps.size())];
    Pushout po = pushout(incl, f, base->name() + "+cell");
    return po.inj_right;
}

}  // namespace

AnodynePair random_anodyne_pair(SplitMix64& rng) {
    SSetPtr base;
    switch (rng.below(4)) {
        case 0: base = std_simplex(1); break;
        case 1: base = std_simplex(2); break;
        case 2: base = std_horn(2, 1); break;
        default: base = std_spine(2); break;
    }
    SimplicialMap u = attach_inner_horn(rng, base);
    SimplicialMap v = attach_inner_horn(rng, u.target());
    return AnodynePair{std::move(u), std::move(v)};
}

}  // namespace cylkit
