#include "cylkit/limits.hpp"

#include <algorithm>
#include <set>

#include "cylkit/levelwise.hpp"
#include "cylkit/standard.hpp"

namespace cylkit {

namespace {

using delta::MonotoneMap;

using SKey = std::tuple<int, int, std::vector<int>>;

SKey skey(const Simplex& s) { return {s.gen.dim, s.gen.idx, s.word}; }

FaceRef face_ref(const FiniteSimplicialSet& x, const Simplex& s) {
    return FaceRef{s.word, x.gen_name(s.gen)};
}

std::string fresh_primed(const std::string& base, const std::set<std::string>& used) {
    std::string n = base;
    while (used.count(n)) n += "'";
    return n;
}

std::string fresh_tilde(const std::string& base, const std::set<std::string>& used) {
    std::string n = base;
    for (int k = 1; used.count(n); ++k) n = base + "~" + std::to_string(k);
    return n;
}

// Generator assignment sending each generator of sub to the generator of
// whole carrying the (renamed) name.
SimplicialMap rename_inclusion(const SSetPtr& sub, const SSetPtr& whole,
                               const std::map<std::string, std::string>& names) {
    std::vector<std::vector<Simplex>> assign(sub->dimension() + 1);
    for (int d = 0; d <= sub->dimension(); ++d)
        for (int i = 0; i < sub->gen_count(d); ++i) {
            auto g = whole->find_gen(names.at(sub->gen_name(GenId{d, i})));
            if (!g) throw SSetError("rename_inclusion: missing generator");
            assign[d].push_back(Simplex{d, {}, *g});
        }
    return make_map(sub, whole, std::move(assign));
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplicialMap terminal_map(const SSetPtr& x) {
    SSetPtr pt = std_simplex(0);
    GenId v = *pt->find_gen("0");
    std::vector<std::vector<Simplex>> assign(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d)
        assign[d].assign(x->gen_count(d), pt->degenerate_at(v, d));
    return make_map(x, pt, std::move(assign));
}

SimplicialMap initial_map(const SSetPtr& x) {
    return make_map(std_empty(), x, {});
}

SimplicialMap constant_map(const SSetPtr& x, const SSetPtr& y,
                           const std::string& vertex) {
    auto v = y->find_gen(vertex);
    if (!v || v->dim != 0) throw SSetError("constant_map: no such vertex: " + vertex);
    std::vector<std::vector<Simplex>> assign(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d)
        assign[d].assign(x->gen_count(d), y->degenerate_at(*v, d));
    return make_map(x, y, std::move(assign));
}

Coproduct coproduct(const SSetPtr& a, const SSetPtr& b) {
    std::set<std::string> used;
    std::map<std::string, std::string> name_a, name_b;
    for (int d = 0; d <= a->dimension(); ++d)
        for (int i = 0; i < a->gen_count(d); ++i) {
            const std::string& n = a->gen_name(GenId{d, i});
            name_a[n] = n;
            used.insert(n);
        }
    for (int d = 0; d <= b->dimension(); ++d)
        for (int i = 0; i < b->gen_count(d); ++i) {
            const std::string& n = b->gen_name(GenId{d, i});
            name_b[n] = fresh_primed(n, used);
            used.insert(name_b[n]);
        }

    int top = std::max(a->dimension(), b->dimension());
    std::vector<std::vector<GenSpec>> gens(std::max(top + 1, 0));
    for (int d = 0; d <= a->dimension(); ++d)
        for (int i = 0; i < a->gen_count(d); ++i) {
            GenSpec g{a->gen_name(GenId{d, i}), {}};
            for (int k = 0; k <= d && d > 0; ++k)
                g.faces.push_back(face_ref(*a, a->gen_face(GenId{d, i}, k)));
            gens[d].push_back(std::move(g));
        }
    for (int d = 0; d <= b->dimension(); ++d)
        for (int i = 0; i < b->gen_count(d); ++i) {
            GenSpec g{name_b.at(b->gen_name(GenId{d, i})), {}};
            for (int k = 0; k <= d && d > 0; ++k) {
                const Simplex& f = b->gen_face(GenId{d, i}, k);
                g.faces.push_back(FaceRef{f.word, name_b.at(b->gen_name(f.gen))});
            }
            gens[d].push_back(std::move(g));
        }

    Provenance prov;
    prov.kind = Provenance::Kind::coproduct;
    prov.detail = a->name() + "+" + b->name();
    Coproduct out;
    out.object = FiniteSimplicialSet::build(a->name() + "+" + b->name(),
                                            std::move(gens), prov);
    out.inj.push_back(rename_inclusion(a, out.object, name_a));
    out.inj.push_back(rename_inclusion(b, out.object, name_b));
    out.names = {name_a, name_b};
    return out;
}

Coproduct coproduct_many(const std::vector<SSetPtr>& parts, std::string name) {
    Coproduct out;
    std::vector<std::vector<GenSpec>> gens;
    out.names.resize(parts.size());
    for (size_t k = 0; k < parts.size(); ++k) {
        const SSetPtr& p = parts[k];
        std::string prefix = std::to_string(k) + "#";
        if ((int)gens.size() < p->dimension() + 1) gens.resize(p->dimension() + 1);
        for (int d = 0; d <= p->dimension(); ++d)
            for (int i = 0; i < p->gen_count(d); ++i) {
                const std::string& n = p->gen_name(GenId{d, i});
                out.names[k][n] = prefix + n;
                GenSpec g{prefix + n, {}};
                for (int j = 0; j <= d && d > 0; ++j) {
                    const Simplex& f = p->gen_face(GenId{d, i}, j);
                    g.faces.push_back(FaceRef{f.word, prefix + p->gen_name(f.gen)});
                }
                gens[d].push_back(std::move(g));
            }
    }
    out.object = FiniteSimplicialSet::build(std::move(name), std::move(gens));
    for (size_t k = 0; k < parts.size(); ++k)
        out.inj.push_back(rename_inclusion(parts[k], out.object, out.names[k]));
    return out;
}

SimplicialMap Coproduct::mediating(const std::vector<SimplicialMap>& legs) const {
    if (legs.size() != inj.size())
        throw SSetError("coproduct mediating: wrong number of legs");
    for (size_t k = 0; k < legs.size(); ++k) {
        if (!legs[k].source()->same_as(*inj[k].source()))
            throw SSetError("coproduct mediating: leg source mismatch");
        if (!legs.empty() && !legs[k].target()->same_as(*legs[0].target()))
            throw SSetError("coproduct mediating: leg target mismatch");
    }
    SSetPtr z = legs.empty() ? std_empty() : legs[0].target();
    std::vector<std::vector<Simplex>> assign(object->dimension() + 1);
    // Invert the name tagging: every generator of the coproduct is the image
    // of exactly one summand generator.
    std::map<std::string, std::pair<size_t, std::string>> origin;
    for (size_t k = 0; k < names.size(); ++k)
        for (const auto& [orig, tagged] : names[k]) origin[tagged] = {k, orig};
    for (int d = 0; d <= object->dimension(); ++d) {
        assign[d].resize(object->gen_count(d));
        for (int i = 0; i < object->gen_count(d); ++i) {
            auto [k, orig] = origin.at(object->gen_name(GenId{d, i}));
            assign[d][i] = legs[k].gen_image(*legs[k].source()->find_gen(orig));
        }
    }
    SimplicialMap m = make_map(object, z, std::move(assign));
    for (size_t k = 0; k < legs.size(); ++k)
        if (!(compose(m, inj[k]) == legs[k]))
            throw SSetError("coproduct mediating: leg does not factor");
    return m;
}

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g, std::string name) {
    if (!f.source()->same_as(*g.source()))
        throw SSetError("pushout: maps must share their source");
    const SSetPtr& a = f.source();
    const SSetPtr& b = f.target();
    const SSetPtr& c = g.target();
    const int top = std::max(b->dimension(), c->dimension());

    // Levelwise elements: the b-simplices followed by the c-simplices.
    struct Level {
        std::vector<Simplex> members;  // b part then c part
        int b_count = 0;
        std::map<SKey, int> index_b, index_c;
        std::vector<int> cls;                 // member -> class
        std::vector<int> rep;                 // class -> member
        std::vector<std::string> cls_name;    // nondegenerate classes only
        std::vector<Pushout::Rep> cls_least;
    };
    std::vector<Level> levels(std::max(top + 1, 0));
    for (int n = 0; n <= top; ++n) {
        Level& L = levels[n];
        for (const Simplex& s : b->simplices_at(n)) {
            L.index_b[skey(s)] = (int)L.members.size();
            L.members.push_back(s);
        }
        L.b_count = (int)L.members.size();
        for (const Simplex& s : c->simplices_at(n)) {
            L.index_c[skey(s)] = (int)L.members.size();
            L.members.push_back(s);
        }
        DisjointSets ds((int)L.members.size());
        for (const Simplex& s : a->simplices_at(n))
            ds.unite(L.index_b.at(skey(f.apply(s))), L.index_c.at(skey(g.apply(s))));
        std::map<int, int> root_to_cls;
        L.cls.resize(L.members.size());
        for (int m = 0; m < (int)L.members.size(); ++m) {
            int r = ds.find(m);
            auto it = root_to_cls.find(r);
            if (it == root_to_cls.end()) {
                it = root_to_cls.emplace(r, (int)L.rep.size()).first;
                L.rep.push_back(m);
            }
            L.cls[m] = it->second;
        }
    }

    // Name the nondegenerate classes (all members nondegenerate) from the
    // least generator name, preferring the b side; deduplicate globally.
    std::set<std::string> used;
    for (int n = 0; n <= top; ++n) {
        Level& L = levels[n];
        L.cls_name.assign(L.rep.size(), "");
        L.cls_least.resize(L.rep.size());
        std::vector<std::vector<int>> by_cls(L.rep.size());
        for (int m = 0; m < (int)L.members.size(); ++m)
            by_cls[L.cls[m]].push_back(m);
        for (size_t k = 0; k < L.rep.size(); ++k) {
            std::string least;
            int least_side = 2;
            bool nondeg = true;
            for (int m : by_cls[k]) {
                const Simplex& s = L.members[m];
                if (s.degenerate()) {
                    nondeg = false;
                    break;
                }
                int side = m < L.b_count ? 0 : 1;
                const std::string& nm =
                    (side == 0 ? b : c)->gen_name(s.gen);
                if (side < least_side || (side == least_side && nm < least)) {
                    least = nm;
                    least_side = side;
                    L.cls_least[k] = Pushout::Rep{side, s};
                }
            }
            if (!nondeg) continue;
            L.cls_name[k] = fresh_tilde(least, used);
            used.insert(L.cls_name[k]);
        }
    }

    LevelwiseSpec spec;
    spec.name = std::move(name);
    spec.max_level = top;
    for (int n = 0; n <= top; ++n) spec.counts.push_back((int)levels[n].rep.size());
    auto member_object = [&](int n, int m) -> const FiniteSimplicialSet& {
        return m < levels[n].b_count ? *b : *c;
    };
    auto locate = [&](int n, const Simplex& s, bool from_b) {
        return from_b ? levels[n].index_b.at(skey(s)) : levels[n].index_c.at(skey(s));
    };
    spec.face = [&](int n, int idx, int i) {
        int m = levels[n].rep[idx];
        Simplex t = member_object(n, m).act(levels[n].members[m], delta::face(n, i));
        return levels[n - 1].cls[locate(n - 1, t, m < levels[n].b_count)];
    };
    spec.degeneracy = [&](int n, int idx, int i) {
        int m = levels[n].rep[idx];
        Simplex t =
            member_object(n, m).act(levels[n].members[m], delta::degeneracy(n, i));
        return levels[n + 1].cls[locate(n + 1, t, m < levels[n].b_count)];
    };
    spec.elem_name = [&](int n, int idx) { return levels[n].cls_name[idx]; };
    LevelwiseResult built = from_levelwise(spec);

    Pushout out;
    out.object = built.object;
    auto side_inclusion = [&](const SSetPtr& src, bool from_b) {
        std::vector<std::vector<Simplex>> assign(src->dimension() + 1);
        for (int d = 0; d <= src->dimension(); ++d)
            for (int i = 0; i < src->gen_count(d); ++i) {
                int m = locate(d, Simplex{d, {}, GenId{d, i}}, from_b);
                assign[d].push_back(built.elem_simplex[d][levels[d].cls[m]]);
            }
        return make_map(src, out.object, std::move(assign));
    };
    out.inj_left = side_inclusion(b, true);
    out.inj_right = side_inclusion(c, false);
    out.reps.resize(out.object->dimension() + 1);
    for (int d = 0; d <= out.object->dimension(); ++d)
        for (int i = 0; i < out.object->gen_count(d); ++i)
            out.reps[d].push_back(levels[d].cls_least[built.gen_elem[d][i]]);
    return out;
}

SimplicialMap Pushout::mediating(const SimplicialMap& u, const SimplicialMap& v) const {
    if (!u.source()->same_as(*inj_left.source()) ||
        !v.source()->same_as(*inj_right.source()))
        throw SSetError("pushout mediating: source mismatch");
    if (!u.target()->same_as(*v.target()))
        throw SSetError("pushout mediating: target mismatch");
    std::vector<std::vector<Simplex>> assign(object->dimension() + 1);
    for (int d = 0; d <= object->dimension(); ++d)
        for (int i = 0; i < object->gen_count(d); ++i) {
            const Rep& r = reps[d][i];
            assign[d].push_back(r.side == 0 ? u.apply(r.simplex) : v.apply(r.simplex));
        }
    SimplicialMap m = make_map(object, u.target(), std::move(assign));
    if (!(compose(m, inj_left) == u) || !(compose(m, inj_right) == v))
        throw SSetError("pushout mediating: legs do not factor");
    return m;
}

Pullback pullback(const SimplicialMap& f, const SimplicialMap& g, std::string name) {
    if (!f.target()->same_as(*g.target()))
        throw SSetError("pullback: maps must share their target");
    const SSetPtr& x = f.source();
    const SSetPtr& y = g.source();
    // Any pair above dim x + dim y has a common degeneracy position, so the
    // levels below are exact.
    const int top = (x->dimension() < 0 || y->dimension() < 0)
                        ? -1
                        : x->dimension() + y->dimension();

    struct Level {
        std::vector<std::pair<Simplex, Simplex>> elems;
        std::map<std::pair<SKey, SKey>, int> index;
    };
    std::vector<Level> levels(std::max(top + 1, 0));
    for (int n = 0; n <= top; ++n) {
        std::map<SKey, std::vector<Simplex>> by_image;
        for (const Simplex& t : y->simplices_at(n))
            by_image[skey(g.apply(t))].push_back(t);
        for (const Simplex& s : x->simplices_at(n)) {
            auto it = by_image.find(skey(f.apply(s)));
            if (it == by_image.end()) continue;
            for (const Simplex& t : it->second) {
                levels[n].index[{skey(s), skey(t)}] = (int)levels[n].elems.size();
                levels[n].elems.emplace_back(s, t);
            }
        }
    }

    LevelwiseSpec spec;
    spec.name = std::move(name);
    spec.max_level = top;
    for (int n = 0; n <= top; ++n) spec.counts.push_back((int)levels[n].elems.size());
    auto shift = [&](int n, int idx, const MonotoneMap& op, int m) {
        const auto& [s, t] = levels[n].elems[idx];
        return levels[m].index.at({skey(x->act(s, op)), skey(y->act(t, op))});
    };
    spec.face = [&](int n, int idx, int i) {
        return shift(n, idx, delta::face(n, i), n - 1);
    };
    spec.degeneracy = [&](int n, int idx, int i) {
        return shift(n, idx, delta::degeneracy(n, i), n + 1);
    };
    spec.elem_name = [&](int n, int idx) {
        const auto& [s, t] = levels[n].elems[idx];
        return "(" + x->simplex_repr(s) + "|" + y->simplex_repr(t) + ")";
    };
    LevelwiseResult built = from_levelwise(spec);

    Pullback out;
    out.object = built.object;
    auto projection = [&](bool left) {
        std::vector<std::vector<Simplex>> assign(out.object->dimension() + 1);
        for (int d = 0; d <= out.object->dimension(); ++d)
            for (int i = 0; i < out.object->gen_count(d); ++i) {
                const auto& [s, t] = levels[d].elems[built.gen_elem[d][i]];
                assign[d].push_back(left ? s : t);
            }
        return make_map(out.object, left ? x : y, std::move(assign));
    };
    out.proj_left = projection(true);
    out.proj_right = projection(false);
    out.table.resize(std::max(top + 1, 0));
    for (int n = 0; n <= top; ++n)
        for (const auto& [key, idx] : levels[n].index) {
            const auto& [s, t] = levels[n].elems[idx];
            out.table[n][{Pullback::Key{s.gen.dim, s.gen.idx, s.word},
                          Pullback::Key{t.gen.dim, t.gen.idx, t.word}}] =
                built.elem_simplex[n][idx];
        }
    return out;
}

Simplex Pullback::pair_simplex(const Simplex& x, const Simplex& y) const {
    if (x.dim != y.dim) throw SSetError("pair_simplex: dimension mismatch");
    int n = x.dim;
    if (n < (int)table.size()) {
        auto it = table[n].find(
            {Key{x.gen.dim, x.gen.idx, x.word}, Key{y.gen.dim, y.gen.idx, y.word}});
        if (it == table[n].end())
            throw SSetError("pair_simplex: components do not match over the base");
        return it->second;
    }
    // Above the stored levels every matching pair has a common degeneracy;
    // strip the largest one and rebuild.
    std::set<int> wx(x.word.begin(), x.word.end());
    int strip = -1;
    for (int i : y.word)
        if (wx.count(i)) strip = std::max(strip, i);
    if (strip < 0) throw SSetError("pair_simplex: no common degeneracy above cutoff");
    const SSetPtr& xs = proj_left.target();
    const SSetPtr& ys = proj_right.target();
    Simplex below = pair_simplex(xs->act(x, delta::face(n, strip)),
                                 ys->act(y, delta::face(n, strip)));
    return object->act(below, delta::degeneracy(n - 1, strip));
}

SimplicialMap Pullback::mediating(const SimplicialMap& r, const SimplicialMap& s) const {
    if (!r.source()->same_as(*s.source()))
        throw SSetError("pullback mediating: source mismatch");
    std::vector<std::vector<Simplex>> assign(r.source()->dimension() + 1);
    for (int d = 0; d <= r.source()->dimension(); ++d)
        for (int i = 0; i < r.source()->gen_count(d); ++i) {
            GenId g{d, i};
            assign[d].push_back(pair_simplex(r.gen_image(g), s.gen_image(g)));
        }
    SimplicialMap m = make_map(r.source(), object, std::move(assign));
    if (!(compose(proj_left, m) == r) || !(compose(proj_right, m) == s))
        throw SSetError("pullback mediating: projections do not factor");
    return m;
}

Pullback product(const SSetPtr& x, const SSetPtr& y) {
    if (x->dimension() < 0 || y->dimension() < 0) {
        Pullback out;
        out.object = std_empty();
        out.proj_left = make_map(out.object, x, {});
        out.proj_right = make_map(out.object, y, {});
        return out;
    }
    return pullback(terminal_map(x), terminal_map(y),
                    x->name() + "x" + y->name());
}

Fibre fibre_over_vertex(const SimplicialMap& p, const std::string& vertex) {
    auto v = p.target()->find_gen(vertex);
    if (!v || v->dim != 0)
        throw SSetError("fibre_over_vertex: no such vertex: " + vertex);
    // A simplex lies over the vertex exactly when its generator does, so the
    // fibre is the induced subcomplex on those generators.
    const SSetPtr& x = p.source();
    std::vector<std::string> keep;
    for (int d = 0; d <= x->dimension(); ++d)
        for (int i = 0; i < x->gen_count(d); ++i)
            if (p.gen_image(GenId{d, i}) == p.target()->degenerate_at(*v, d))
                keep.push_back(x->gen_name(GenId{d, i}));
    Fibre out;
    out.object = subcomplex(x, keep, x->name() + "@" + vertex);
    out.inclusion = subcomplex_inclusion(out.object, x);
    return out;
}

Join join(const SSetPtr& a, const SSetPtr& b) {
    Join out;
    out.left = a;
    out.right = b;
    std::set<std::string> used;
    for (int d = 0; d <= a->dimension(); ++d)
        for (int i = 0; i < a->gen_count(d); ++i)
            used.insert(a->gen_name(GenId{d, i}));
    for (int d = 0; d <= b->dimension(); ++d)
        for (int i = 0; i < b->gen_count(d); ++i) {
            const std::string& n = b->gen_name(GenId{d, i});
            out.right_names[n] = fresh_primed(n, used);
            used.insert(out.right_names[n]);
        }
    for (int da = 0; da <= a->dimension(); ++da)
        for (int ia = 0; ia < a->gen_count(da); ++ia)
            for (int db = 0; db <= b->dimension(); ++db)
                for (int ib = 0; ib < b->gen_count(db); ++ib) {
                    std::string base = "(" + a->gen_name(GenId{da, ia}) + "*" +
                                       b->gen_name(GenId{db, ib}) + ")";
                    std::string n = fresh_tilde(base, used);
                    used.insert(n);
                    out.pair_names[{a->gen_name(GenId{da, ia}),
                                    b->gen_name(GenId{db, ib})}] = n;
                }

    int top = std::max({a->dimension(), b->dimension(),
                        a->dimension() + b->dimension() + 1});
    std::vector<std::vector<GenSpec>> gens(std::max(top + 1, 0));
    for (int d = 0; d <= a->dimension(); ++d)
        for (int i = 0; i < a->gen_count(d); ++i) {
            GenSpec g{a->gen_name(GenId{d, i}), {}};
            for (int k = 0; k <= d && d > 0; ++k)
                g.faces.push_back(face_ref(*a, a->gen_face(GenId{d, i}, k)));
            gens[d].push_back(std::move(g));
        }
    for (int d = 0; d <= b->dimension(); ++d)
        for (int i = 0; i < b->gen_count(d); ++i) {
            GenSpec g{out.right_names.at(b->gen_name(GenId{d, i})), {}};
            for (int k = 0; k <= d && d > 0; ++k) {
                const Simplex& f = b->gen_face(GenId{d, i}, k);
                g.faces.push_back(
                    FaceRef{f.word, out.right_names.at(b->gen_name(f.gen))});
            }
            gens[d].push_back(std::move(g));
        }
    // Pair generators: faces follow d_k(u*v) = (d_k u)*v for k <= dim u
    // (dropping to v alone when u is a vertex) and u*(d_{k-i-1} v) above.
    for (int da = 0; da <= a->dimension(); ++da)
        for (int ia = 0; ia < a->gen_count(da); ++ia)
            for (int db = 0; db <= b->dimension(); ++db)
                for (int ib = 0; ib < b->gen_count(db); ++ib) {
                    GenId ga{da, ia}, gb{db, ib};
                    int d = da + db + 1;
                    GenSpec g{out.pair_names.at({a->gen_name(ga), b->gen_name(gb)}),
                              {}};
                    for (int k = 0; k <= d; ++k) {
                        if (k <= da) {
                            if (da == 0) {
                                g.faces.push_back(
                                    FaceRef{{}, out.right_names.at(b->gen_name(gb))});
                                continue;
                            }
                            const Simplex& fa = a->gen_face(ga, k);
                            MonotoneMap epi = delta::join(
                                delta::epi_from_word(fa.word, fa.gen.dim),
                                delta::identity(db));
                            g.faces.push_back(
                                FaceRef{delta::degeneracy_word(epi),
                                        out.pair_names.at({a->gen_name(fa.gen),
                                                           b->gen_name(gb)})});
                        } else {
                            if (db == 0) {
                                g.faces.push_back(FaceRef{{}, a->gen_name(ga)});
                                continue;
                            }
                            const Simplex& fb = b->gen_face(gb, k - da - 1);
                            MonotoneMap epi = delta::join(
                                delta::identity(da),
                                delta::epi_from_word(fb.word, fb.gen.dim));
                            g.faces.push_back(
                                FaceRef{delta::degeneracy_word(epi),
                                        out.pair_names.at({a->gen_name(ga),
                                                           b->gen_name(fb.gen)})});
                        }
                    }
                    gens[da + db + 1].push_back(std::move(g));
                }

    Provenance prov;
    prov.kind = Provenance::Kind::join;
    prov.detail = a->name() + "*" + b->name();
    // The join of complete nerves is the complete nerve of the categorical
    // join, so it keeps the stronger provenance (and below, the structure
    // map is the nerve of the functor collapsing the two sides into [1]).
    auto nerve_like = [](const SSetPtr& x) {
        return x->dimension() < 0 ||
               x->provenance().kind == Provenance::Kind::complete_nerve;
    };
    bool nerve_join = nerve_like(a) && nerve_like(b);
    if (nerve_join) prov.kind = Provenance::Kind::complete_nerve;
    out.object = FiniteSimplicialSet::build("(" + a->name() + "*" + b->name() + ")",
                                            std::move(gens), prov);

    std::map<std::string, std::string> ident;
    for (int d = 0; d <= a->dimension(); ++d)
        for (int i = 0; i < a->gen_count(d); ++i) {
            const std::string& n = a->gen_name(GenId{d, i});
            ident[n] = n;
        }
    out.incl_left = a->dimension() < 0 ? make_map(a, out.object, {})
                                       : rename_inclusion(a, out.object, ident);
    out.incl_right = b->dimension() < 0
                         ? make_map(b, out.object, {})
                         : rename_inclusion(b, out.object, out.right_names);

    // Structure map to Delta[1]: left part over 0, right part over 1.
    SSetPtr seg = std_simplex(1);
    GenId v0 = *seg->find_gen("0");
    GenId v1 = *seg->find_gen("1");
    GenId edge = *seg->find_gen("0.1");
    std::vector<std::vector<Simplex>> assign(out.object->dimension() + 1);
    for (int d = 0; d <= out.object->dimension(); ++d)
        for (int i = 0; i < out.object->gen_count(d); ++i) {
            const std::string& n = out.object->gen_name(GenId{d, i});
            if (a->find_gen(n) && ident.count(n)) {
                assign[d].push_back(seg->degenerate_at(v0, d));
            } else {
                bool is_right = false;
                for (const auto& [orig, tagged] : out.right_names)
                    if (tagged == n) {
                        is_right = true;
                        break;
                    }
                if (is_right) {
                    assign[d].push_back(seg->degenerate_at(v1, d));
                } else {
                    // pair generator of bidegree (i, j): word of the epi
                    // sending 0..i to 0 and the rest to 1
                    int da = -1;
                    for (const auto& [key, tagged] : out.pair_names)
                        if (tagged == n) {
                            da = a->find_gen(key.first)->dim;
                            break;
                        }
                    if (da < 0) throw SSetError("join: unclassified generator " + n);
                    std::vector<int> values(d + 1, 1);
                    for (int t = 0; t <= da; ++t) values[t] = 0;
                    MonotoneMap epi = delta::make_map(d, 1, values);
                    assign[d].push_back(
                        Simplex{d, delta::degeneracy_word(epi), edge});
                }
            }
        }
    out.structure = make_map(out.object, seg, std::move(assign), nerve_join);
    return out;
}

Simplex Join::left_simplex(const Simplex& a) const {
    return Simplex{a.dim, a.word, *object->find_gen(left->gen_name(a.gen))};
}

Simplex Join::right_simplex(const Simplex& b) const {
    return Simplex{b.dim, b.word,
                   *object->find_gen(right_names.at(right->gen_name(b.gen)))};
}

Simplex Join::pair(const Simplex& a, const Simplex& b) const {
    MonotoneMap epi = delta::join(delta::epi_from_word(a.word, a.gen.dim),
                                  delta::epi_from_word(b.word, b.gen.dim));
    GenId g = *object->find_gen(
        pair_names.at({left->gen_name(a.gen), right->gen_name(b.gen)}));
    return Simplex{a.dim + b.dim + 1, delta::degeneracy_word(epi), g};
}

Join::Split Join::split(const Simplex& s) const {
    const std::string& n = object->gen_name(s.gen);
    if (auto g = left->find_gen(n)) {
        // A left generator's name always coincides with its name in the join.
        return Split{Simplex{s.dim, s.word, *g}, std::nullopt};
    }
    for (const auto& [orig, tagged] : right_names)
        if (tagged == n)
            return Split{std::nullopt,
                         Simplex{s.dim, s.word, *right->find_gen(orig)}};
    for (const auto& [key, tagged] : pair_names)
        if (tagged == n) {
            GenId ga = *left->find_gen(key.first);
            GenId gb = *right->find_gen(key.second);
            MonotoneMap epi = delta::epi_from_word(s.word, s.gen.dim);
            std::vector<int> va, vb;
            for (int v : epi.values)
                (v <= ga.dim ? va : vb).push_back(v <= ga.dim ? v : v - ga.dim - 1);
            MonotoneMap ea = delta::make_map((int)va.size() - 1, ga.dim, va);
            MonotoneMap eb = delta::make_map((int)vb.size() - 1, gb.dim, vb);
            return Split{Simplex{ea.source_rank, delta::degeneracy_word(ea), ga},
                         Simplex{eb.source_rank, delta::degeneracy_word(eb), gb}};
        }
    throw SSetError("join split: unclassified generator " + n);
}

SimplicialMap join_map(const Join& src, const Join& dst, const SimplicialMap& f,
                       const SimplicialMap& g) {
    if (!f.source()->same_as(*src.left) || !g.source()->same_as(*src.right) ||
        !f.target()->same_as(*dst.left) || !g.target()->same_as(*dst.right))
        throw SSetError("join_map: factor mismatch");
    std::vector<std::vector<Simplex>> assign(src.object->dimension() + 1);
    for (int d = 0; d <= src.object->dimension(); ++d)
        for (int i = 0; i < src.object->gen_count(d); ++i) {
            Join::Split sp = src.split(Simplex{d, {}, GenId{d, i}});
            if (sp.a && sp.b)
                assign[d].push_back(dst.pair(f.apply(*sp.a), g.apply(*sp.b)));
            else if (sp.a)
                assign[d].push_back(dst.left_simplex(f.apply(*sp.a)));
            else
                assign[d].push_back(dst.right_simplex(g.apply(*sp.b)));
        }
    return make_map(src.object, dst.object, std::move(assign));
}

LeibnizJoin leibniz_join(const SimplicialMap& f, const SimplicialMap& g) {
    LeibnizJoin out;
    out.ms = join(f.source(), g.source());
    out.ns = join(f.target(), g.source());
    out.mt = join(f.source(), g.target());
    out.nt = join(f.target(), g.target());
    SimplicialMap fs =
        join_map(out.ms, out.ns, f, identity_map(g.source()));
    SimplicialMap mg =
        join_map(out.ms, out.mt, identity_map(f.source()), g);
    out.corner_domain = pushout(
        fs, mg, out.ns.object->name() + "+_" + out.mt.object->name());
    SimplicialMap u = join_map(out.ns, out.nt, identity_map(f.target()), g);
    SimplicialMap v = join_map(out.mt, out.nt, f, identity_map(g.target()));
    out.corner = out.corner_domain.mediating(u, v);
    return out;
}

CellPresentation cell_presentation_mono(const SimplicialMap& i) {
    if (!map_props(i).mono)
        throw SSetError("cell_presentation_mono: map is not a monomorphism");
    const SSetPtr& b = i.target();
    CellPresentation out;
    out.base = i.source();

    SSetPtr stage = i.source();
    SimplicialMap incl = i;
    // Monomorphisms send generators to generators; track the image names.
    std::map<std::string, std::string> rev;
    auto rebuild_rev = [&]() {
        rev.clear();
        for (int d = 0; d <= stage->dimension(); ++d)
            for (int idx = 0; idx < stage->gen_count(d); ++idx) {
                const Simplex& img = incl.gen_image(GenId{d, idx});
                if (img.degenerate())
                    throw SSetError("cell_presentation_mono: degenerate image");
                rev[b->gen_name(img.gen)] = stage->gen_name(GenId{d, idx});
            }
    };
    rebuild_rev();

    for (int d = 0; d <= b->dimension(); ++d) {
        SSetPtr bdry = std_boundary(d);
        SSetPtr cell = std_simplex(d);
        for (int idx = 0; idx < b->gen_count(d); ++idx) {
            GenId g{d, idx};
            if (rev.count(b->gen_name(g))) continue;
            std::vector<std::vector<Simplex>> assign(bdry->dimension() + 1);
            for (int e = 0; e <= bdry->dimension(); ++e)
                for (int j = 0; j < bdry->gen_count(e); ++j) {
                    std::vector<int> verts = vertex_list(bdry->gen_name(GenId{e, j}));
                    Simplex in_b = b->act(b->nondeg(g),
                                          delta::subset_inclusion(verts, d));
                    auto pre = stage->find_gen(rev.at(b->gen_name(in_b.gen)));
                    assign[e].push_back(Simplex{e, in_b.word, *pre});
                }
            SimplicialMap attach = make_map(bdry, stage, std::move(assign));
            Pushout po =
                pushout(attach, boundary_inclusion(d),
                        stage->name() + "+" + b->gen_name(g));
            SimplicialMap incl_after =
                po.mediating(incl, simplex_classifier(b, b->nondeg(g)));
            out.steps.push_back(CellPresentation::Step{
                d, b->gen_name(g), attach, po.object, incl_after});
            stage = po.object;
            incl = incl_after;
            rebuild_rev();
        }
    }
    if (!is_iso(incl))
        throw SSetError("cell_presentation_mono: replay did not exhaust target");
    out.final_iso = incl;
    return out;
}

}  // namespace cylkit
