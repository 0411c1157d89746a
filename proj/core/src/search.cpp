#include "cylkit/search.hpp"

#include <algorithm>
#include <functional>

#include "cylkit/delta.hpp"

namespace cylkit {

namespace {

// Image of s under a partial generator-image table.  Only valid once s's
// generator has been assigned.
Simplex partial_image(const FiniteSimplicialSet& target,
                      const std::vector<std::vector<Simplex>>& table, const Simplex& s) {
    const Simplex& base = table[s.gen.dim][s.gen.idx];
    if (s.word.empty()) return base;
    return target.act(base, delta::epi_from_word(s.word, s.gen.dim));
}

struct SearchState {
    const MapSearchSpec& spec;
    const FiniteSimplicialSet& src;
    const FiniteSimplicialSet& tgt;
    std::vector<GenId> order;                      // dimension-ascending
    std::vector<std::vector<Simplex>> table;       // partial assignment
    std::vector<std::vector<Simplex>> candidates;  // per order position, pre-filtered
    MapSearchResult out;
};

void search(SearchState& st, std::size_t pos) {
    if (pos == st.order.size()) {
        ++st.out.total;
        if (st.spec.limit == 0 || st.out.maps.size() < st.spec.limit)
            st.out.maps.push_back(
                make_map(st.spec.source, st.spec.target, st.table));
        return;
    }
    GenId g = st.order[pos];
    int d = g.dim;
    for (const Simplex& c : st.candidates[pos]) {
        ++st.out.nodes;
        bool ok = true;
        for (int i = 0; i <= d && d > 0; ++i) {
            Simplex want = partial_image(st.tgt, st.table, st.src.gen_face(g, i));
            if (!(st.tgt.act(c, delta::face(d, i)) == want)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            st.table[d][g.idx] = c;
            search(st, pos + 1);
        }
        if (st.spec.limit != 0 && st.out.total >= st.spec.limit) return;
    }
}

}  // namespace

MapSearchResult enumerate_maps(const MapSearchSpec& spec) {
    if (!spec.source || !spec.target) throw SSetError("enumerate_maps: null object");
    if (spec.over_source.has_value() != spec.over_target.has_value())
        throw SSetError("enumerate_maps: over-base constraint needs both projections");
    if (spec.over_source) {
        if (!spec.over_source->source()->same_as(*spec.source))
            throw SSetError("enumerate_maps: over_source does not start at the search source");
        if (!spec.over_target->source()->same_as(*spec.target))
            throw SSetError("enumerate_maps: over_target does not start at the search target");
        if (!spec.over_source->target()->same_as(*spec.over_target->target()))
            throw SSetError("enumerate_maps: projections disagree on the base");
    }

    const FiniteSimplicialSet& src = *spec.source;
    const FiniteSimplicialSet& tgt = *spec.target;
    SearchState st{spec, src, tgt, {}, {}, {}, {}};

    int sdim = src.dimension();
    st.table.resize(sdim + 1);
    for (int d = 0; d <= sdim; ++d) {
        st.table[d].resize(src.gen_count(d));
        for (int i = 0; i < src.gen_count(d); ++i) st.order.push_back(GenId{d, i});
    }
    // simplices_at handles levels above the target's dimension (degeneracies)
    // and returns nothing for an empty target, so no special cases here.
    std::vector<std::vector<Simplex>> level(sdim + 1);
    for (int d = 0; d <= sdim; ++d) level[d] = tgt.simplices_at(d);
    // With an over-base constraint, projection images of whole levels are
    // computed once so each position sees only the simplices over its own
    // base cell, not the full level on every search node.
    std::vector<std::vector<Simplex>> level_proj(sdim + 1);
    if (spec.over_target)
        for (int d = 0; d <= sdim; ++d)
            for (const Simplex& c : level[d]) level_proj[d].push_back(spec.over_target->apply(c));

    st.candidates.resize(st.order.size());
    std::size_t used_pins = 0;
    for (std::size_t pos = 0; pos < st.order.size(); ++pos) {
        GenId g = st.order[pos];
        std::optional<Simplex> base;
        if (spec.over_source) base = spec.over_source->apply(Simplex{g.dim, {}, g});
        auto admissible = [&](const Simplex& c) {
            return !base || spec.over_target->apply(c) == *base;
        };
        auto it = spec.forced.find(src.gen_name(g));
        if (it != spec.forced.end()) {
            const Simplex& v = it->second;
            if (v.dim != g.dim)
                throw SSetError("enumerate_maps: forced image for '" + it->first +
                                "' has dimension " + std::to_string(v.dim) +
                                ", generator has " + std::to_string(g.dim));
            if (admissible(v)) st.candidates[pos].push_back(v);
            ++used_pins;
        } else if (base) {
            const auto& lv = level[g.dim];
            for (std::size_t k = 0; k < lv.size(); ++k)
                if (level_proj[g.dim][k] == *base) st.candidates[pos].push_back(lv[k]);
        } else {
            st.candidates[pos] = level[g.dim];
        }
    }
    if (used_pins != spec.forced.size())
        throw SSetError("enumerate_maps: forced image for a name that is not a generator");

    search(st, 0);
    // complete means the tree was exhausted: true unless we stopped at limit.
    st.out.complete = spec.limit == 0 || st.out.total < spec.limit;
    return st.out;
}

std::optional<SimplicialMap> find_isomorphism(const SSetPtr& a, const SSetPtr& b) {
    if (!a || !b) throw SSetError("find_isomorphism: null object");
    if (a->dimension() != b->dimension()) return std::nullopt;
    int dim = a->dimension();
    for (int d = 0; d <= dim; ++d)
        if (a->gen_count(d) != b->gen_count(d)) return std::nullopt;

    std::vector<GenId> order;
    std::vector<std::vector<Simplex>> table(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        table[d].resize(a->gen_count(d));
        for (int i = 0; i < a->gen_count(d); ++i) order.push_back(GenId{d, i});
    }
    std::vector<std::vector<bool>> used(dim + 1);
    for (int d = 0; d <= dim; ++d) used[d].assign(b->gen_count(d), false);

    std::function<bool(std::size_t)> place = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        GenId g = order[pos];
        int d = g.dim;
        for (int j = 0; j < b->gen_count(d); ++j) {
            if (used[d][j]) continue;
            Simplex c{d, {}, GenId{d, j}};
            bool ok = true;
            for (int i = 0; i <= d && d > 0; ++i) {
                Simplex want = partial_image(*b, table, a->gen_face(g, i));
                if (!(b->act(c, delta::face(d, i)) == want)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[d][j] = true;
            table[d][g.idx] = c;
            if (place(pos + 1)) return true;
            used[d][j] = false;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    SimplicialMap f = make_map(a, b, std::move(table));
    if (!is_iso(f)) throw SSetError("find_isomorphism: generator bijection is not an isomorphism");
    return f;
}

}  // namespace cylkit
