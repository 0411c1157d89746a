#include "cylkit/levelwise.hpp"

#include <stdexcept>

namespace cylkit {

namespace {

// Raw normal form: degeneracy word plus the level/index of a nondegenerate
// element.  Resolved into a Simplex only after the object is built.
struct RawForm {
    std::vector<int> word;
    int core_level = -1;
    int core_idx = -1;
};

}  // namespace

LevelwiseResult from_levelwise(const LevelwiseSpec& spec) {
    const int top = spec.max_level;
    if (static_cast<int>(spec.counts.size()) < top + 1)
        throw SSetError("from_levelwise: counts shorter than max_level");

    std::vector<std::vector<RawForm>> raw(top + 1);
    std::vector<std::vector<int>> nondeg(top + 1);  // elem indices per level
    std::vector<std::vector<int>> gen_of(top + 1);  // elem -> gen position or -1

    for (int n = 0; n <= top; ++n) {
        raw[n].resize(spec.counts[n]);
        gen_of[n].assign(spec.counts[n], -1);
        for (int idx = 0; idx < spec.counts[n]; ++idx) {
            // Largest i with s_i(d_i x) = x; stripping it and recursing on the
            // stored form of d_i x yields a strictly decreasing word.
            int strip = -1;
            for (int i = n - 1; i >= 0; --i) {
                int below = spec.face(n, idx, i);
                if (spec.degeneracy(n - 1, below, i) == idx) {
                    strip = i;
                    break;
                }
            }
            if (strip < 0) {
                gen_of[n][idx] = static_cast<int>(nondeg[n].size());
                nondeg[n].push_back(idx);
                raw[n][idx] = RawForm{{}, n, idx};
            } else {
                int below = spec.face(n, idx, strip);
                RawForm form = raw[n - 1][below];
                form.word.insert(form.word.begin(), strip);
                raw[n][idx] = std::move(form);
            }
        }
    }

    std::vector<std::vector<GenSpec>> gens(top + 1);
    for (int n = 0; n <= top; ++n) {
        for (int idx : nondeg[n]) {
            GenSpec g;
            g.name = spec.elem_name(n, idx);
            for (int i = 0; i <= n && n > 0; ++i) {
                const RawForm& f = raw[n - 1][spec.face(n, idx, i)];
                g.faces.push_back(
                    FaceRef{f.word, spec.elem_name(f.core_level, f.core_idx)});
            }
            gens[n].push_back(std::move(g));
        }
    }

    LevelwiseResult out;
    out.object = FiniteSimplicialSet::build(spec.name, gens, spec.prov);
    out.elem_simplex.resize(top + 1);
    out.gen_elem.resize(out.object->dimension() + 1);
    for (int n = 0; n <= out.object->dimension(); ++n)
        out.gen_elem[n].resize(out.object->gen_count(n), -1);
    for (int n = 0; n <= top; ++n) {
        out.elem_simplex[n].resize(spec.counts[n]);
        for (int idx = 0; idx < spec.counts[n]; ++idx) {
            const RawForm& f = raw[n][idx];
            GenId gen =
                *out.object->find_gen(spec.elem_name(f.core_level, f.core_idx));
            out.elem_simplex[n][idx] = Simplex{n, f.word, gen};
            if (f.core_level == n && f.core_idx == idx)
                out.gen_elem[gen.dim][gen.idx] = idx;
        }
    }
    return out;
}

}  // namespace cylkit
