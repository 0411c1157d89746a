#include "cylkit/category.hpp"

#include <algorithm>

namespace cylkit {

std::shared_ptr<const FiniteCategory> FiniteCategory::build(
    std::string name, std::vector<std::string> objects, std::vector<MorSpec> morphisms,
    std::map<std::pair<std::string, std::string>, std::string> composition,
    std::map<std::string, std::string> identities) {
    auto c = std::shared_ptr<FiniteCategory>(new FiniteCategory());
    c->name_ = std::move(name);
    c->objects_ = std::move(objects);
    std::sort(c->objects_.begin(), c->objects_.end());
    if (std::adjacent_find(c->objects_.begin(), c->objects_.end()) != c->objects_.end())
        throw CategoryError(c->name_ + ": duplicate object");
    c->mors_ = std::move(morphisms);
    std::sort(c->mors_.begin(), c->mors_.end(),
              [](const MorSpec& a, const MorSpec& b) { return a.id < b.id; });
    c->comp_ = std::move(composition);
    c->ident_ = std::move(identities);

    auto has_obj = [&](const std::string& o) {
        return std::binary_search(c->objects_.begin(), c->objects_.end(), o);
    };
    for (size_t i = 0; i < c->mors_.size(); ++i) {
        const auto& m = c->mors_[i];
        if (!c->mor_index_.emplace(m.id, i).second)
            throw CategoryError(c->name_ + ": duplicate morphism id '" + m.id + "'");
        if (!has_obj(m.src) || !has_obj(m.dst))
            throw CategoryError(c->name_ + ": morphism '" + m.id + "' has unknown endpoint");
        if (has_obj(m.id))
            throw CategoryError(c->name_ + ": morphism id '" + m.id + "' collides with an object");
        if (m.id.find('.') != std::string::npos)
            throw CategoryError(c->name_ + ": morphism id '" + m.id +
                                "' may not contain '.' (reserved for nerve chains)");
    }
    for (const auto& o : c->objects_)
        if (o.find('.') != std::string::npos)
            throw CategoryError(c->name_ + ": object name '" + o + "' may not contain '.'");
    for (const auto& o : c->objects_) {
        auto it = c->ident_.find(o);
        if (it == c->ident_.end())
            throw CategoryError(c->name_ + ": missing identity for '" + o + "'");
        const MorSpec& m = c->mor(it->second);
        if (m.src != o || m.dst != o)
            throw CategoryError(c->name_ + ": identity of '" + o + "' has wrong endpoints");
    }
    // Composition: totality on composable pairs, endpoints, identity laws,
    // associativity.  All exhaustive.
    for (const auto& g : c->mors_) {
        for (const auto& f : c->mors_) {
            if (f.dst != g.src) {
                if (c->comp_.count({g.id, f.id}))
                    throw CategoryError(c->name_ + ": composite of non-composable pair (" +
                                        g.id + "," + f.id + ")");
                continue;
            }
            auto it = c->comp_.find({g.id, f.id});
            if (it == c->comp_.end())
                throw CategoryError(c->name_ + ": missing composite (" + g.id + "," + f.id + ")");
            const MorSpec& gf = c->mor(it->second);
            if (gf.src != f.src || gf.dst != g.dst)
                throw CategoryError(c->name_ + ": composite (" + g.id + "," + f.id +
                                    ") has wrong endpoints");
        }
    }
    for (const auto& f : c->mors_) {
        if (c->compose(c->identity_of(f.dst), f.id) != f.id ||
            c->compose(f.id, c->identity_of(f.src)) != f.id)
            throw CategoryError(c->name_ + ": identity law fails at '" + f.id + "'");
    }
    for (const auto& h : c->mors_)
        for (const auto& g : c->mors_) {
            if (g.dst != h.src) continue;
            for (const auto& f : c->mors_) {
                if (f.dst != g.src) continue;
                if (c->compose(h.id, c->compose(g.id, f.id)) !=
                    c->compose(c->compose(h.id, g.id), f.id))
                    throw CategoryError(c->name_ + ": associativity fails at (" + h.id + "," +
                                        g.id + "," + f.id + ")");
            }
        }
    return c;
}

const std::string& FiniteCategory::identity_of(const std::string& obj) const {
    auto it = ident_.find(obj);
    if (it == ident_.end()) throw CategoryError(name_ + ": unknown object '" + obj + "'");
    return it->second;
}

bool FiniteCategory::is_identity(const std::string& mor) const {
    const MorSpec& m = this->mor(mor);
    return ident_.at(m.src) == mor;
}

const MorSpec& FiniteCategory::mor(const std::string& id) const {
    auto it = mor_index_.find(id);
    if (it == mor_index_.end())
        throw CategoryError(name_ + ": unknown morphism '" + id + "'");
    return mors_[it->second];
}

const std::string& FiniteCategory::compose(const std::string& g, const std::string& f) const {
    auto it = comp_.find({g, f});
    if (it == comp_.end())
        throw CategoryError(name_ + ": pair (" + g + "," + f + ") not composable");
    return it->second;
}

std::vector<std::string> FiniteCategory::hom(const std::string& x, const std::string& y) const {
    std::vector<std::string> out;
    for (const auto& m : mors_)
        if (m.src == x && m.dst == y) out.push_back(m.id);
    return out;
}

bool FiniteCategory::is_iso(const std::string& mor) const {
    const MorSpec& m = this->mor(mor);
    for (const auto& inv : hom(m.dst, m.src))
        if (compose(inv, mor) == identity_of(m.src) && compose(mor, inv) == identity_of(m.dst))
            return true;
    return false;
}

CategoryPtr FiniteCategory::opposite() const {
    std::vector<MorSpec> mors;
    for (const auto& m : mors_) mors.push_back(MorSpec{m.id, m.dst, m.src});
    std::map<std::pair<std::string, std::string>, std::string> comp;
    for (const auto& [gf, c] : comp_) comp[{gf.second, gf.first}] = c;
    return build(name_ + ".op", objects_, std::move(mors), std::move(comp), ident_);
}

FiniteFunctor make_functor(CategoryPtr source, CategoryPtr target,
                           std::map<std::string, std::string> on_objects,
                           std::map<std::string, std::string> on_morphisms) {
    FiniteFunctor f{std::move(source), std::move(target), std::move(on_objects),
                    std::move(on_morphisms)};
    for (const auto& o : f.source->objects()) {
        auto it = f.on_objects.find(o);
        if (it == f.on_objects.end())
            throw CategoryError("functor: no image for object '" + o + "'");
        // Throws if unknown in the target.
        f.target->identity_of(it->second);
    }
    for (const auto& m : f.source->morphisms()) {
        auto it = f.on_morphisms.find(m.id);
        if (it == f.on_morphisms.end())
            throw CategoryError("functor: no image for morphism '" + m.id + "'");
        const MorSpec& fm = f.target->mor(it->second);
        if (fm.src != f.on_objects.at(m.src) || fm.dst != f.on_objects.at(m.dst))
            throw CategoryError("functor: image of '" + m.id + "' has wrong endpoints");
    }
    for (const auto& o : f.source->objects())
        if (f.on_morphisms.at(f.source->identity_of(o)) !=
            f.target->identity_of(f.on_objects.at(o)))
            throw CategoryError("functor: identity of '" + o + "' not preserved");
    for (const auto& g : f.source->morphisms())
        for (const auto& h : f.source->morphisms()) {
            if (h.src != g.dst) continue;
            if (f.on_morphisms.at(f.source->compose(h.id, g.id)) !=
                f.target->compose(f.on_morphisms.at(h.id), f.on_morphisms.at(g.id)))
                throw CategoryError("functor: composition not preserved at (" + h.id + "," +
                                    g.id + ")");
        }
    return f;
}

Profunctor make_profunctor(
    CategoryPtr source, CategoryPtr target,
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> values,
    std::map<std::pair<std::string, std::string>, std::string> left_action,
    std::map<std::pair<std::string, std::string>, std::string> right_action) {
    Profunctor m{std::move(source), std::move(target), std::move(values),
                 std::move(left_action), std::move(right_action)};
    auto value_set = [&](const std::string& a, const std::string& b) -> const std::vector<std::string>& {
        auto it = m.values.find({a, b});
        if (it == m.values.end())
            throw CategoryError("profunctor: missing value set at (" + a + "," + b + ")");
        return it->second;
    };
    auto contains = [](const std::vector<std::string>& v, const std::string& x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (const auto& a : m.source->objects())
        for (const auto& b : m.target->objects()) {
            auto& vs = value_set(a, b);
            for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j)
                    if (vs[i] == vs[j])
                        throw CategoryError("profunctor: duplicate element '" + vs[i] + "'");
        }
    // Left action along f: a' -> a maps M(a,b) -> M(a',b).
    for (const auto& f : m.source->morphisms())
        for (const auto& b : m.target->objects())
            for (const auto& el : value_set(f.dst, b)) {
                auto it = m.left_action.find({f.id, el});
                if (it == m.left_action.end())
                    throw CategoryError("profunctor: missing left action (" + f.id + "," + el + ")");
                if (!contains(value_set(f.src, b), it->second))
                    throw CategoryError("profunctor: left action lands outside M(" + f.src +
                                        "," + b + ")");
            }
    for (const auto& g : m.target->morphisms())
        for (const auto& a : m.source->objects())
            for (const auto& el : value_set(a, g.src)) {
                auto it = m.right_action.find({g.id, el});
                if (it == m.right_action.end())
                    throw CategoryError("profunctor: missing right action (" + g.id + "," + el + ")");
                if (!contains(value_set(a, g.dst), it->second))
                    throw CategoryError("profunctor: right action lands outside M(" + a + "," +
                                        g.dst + ")");
            }
    auto lact = [&](const std::string& f, const std::string& el) {
        return m.left_action.at({f, el});
    };
    auto ract = [&](const std::string& g, const std::string& el) {
        return m.right_action.at({g, el});
    };
    // Identities, functoriality, commutation.
    for (const auto& a : m.source->objects())
        for (const auto& b : m.target->objects())
            for (const auto& el : value_set(a, b)) {
                if (lact(m.source->identity_of(a), el) != el)
                    throw CategoryError("profunctor: left identity fails at '" + el + "'");
                if (ract(m.target->identity_of(b), el) != el)
                    throw CategoryError("profunctor: right identity fails at '" + el + "'");
            }
    for (const auto& f2 : m.source->morphisms())
        for (const auto& f1 : m.source->morphisms()) {
            if (f2.dst != f1.src) continue;  // f1 o f2 defined
            for (const auto& b : m.target->objects())
                for (const auto& el : value_set(f1.dst, b))
                    if (lact(f2.id, lact(f1.id, el)) != lact(m.source->compose(f1.id, f2.id), el))
                        throw CategoryError("profunctor: left action not functorial at (" +
                                            f1.id + "," + f2.id + ")");
        }
    for (const auto& g2 : m.target->morphisms())
        for (const auto& g1 : m.target->morphisms()) {
            if (g2.src != g1.dst) continue;  // g2 o g1 defined
            for (const auto& a : m.source->objects())
                for (const auto& el : value_set(a, g1.src))
                    if (ract(g2.id, ract(g1.id, el)) != ract(m.target->compose(g2.id, g1.id), el))
                        throw CategoryError("profunctor: right action not functorial at (" +
                                            g1.id + "," + g2.id + ")");
        }
    for (const auto& f : m.source->morphisms())
        for (const auto& g : m.target->morphisms())
            for (const auto& el : value_set(f.dst, g.src))
                if (ract(g.id, lact(f.id, el)) != lact(f.id, ract(g.id, el)))
                    throw CategoryError("profunctor: actions do not commute at (" + f.id + "," +
                                        g.id + "," + el + ")");
    return m;
}

CategoryPtr collage_category(const Profunctor& m) {
    const auto& a = *m.source;
    const auto& b = *m.target;
    std::vector<std::string> objects = a.objects();
    for (const auto& o : b.objects()) objects.push_back(o);
    std::vector<MorSpec> mors = a.morphisms();
    for (const auto& g : b.morphisms()) mors.push_back(g);
    for (const auto& [ab, els] : m.values)
        for (const auto& el : els) mors.push_back(MorSpec{el, ab.first, ab.second});

    std::map<std::pair<std::string, std::string>, std::string> comp;
    auto side_a = [&](const std::string& mor) {
        for (const auto& s : a.morphisms())
            if (s.id == mor) return true;
        return false;
    };
    auto side_b = [&](const std::string& mor) {
        for (const auto& s : b.morphisms())
            if (s.id == mor) return true;
        return false;
    };
    for (const auto& g : mors)
        for (const auto& f : mors) {
            if (f.dst != g.src) continue;
            bool fa = side_a(f.id), fb = side_b(f.id);
            bool ga = side_a(g.id), gb = side_b(g.id);
            if (fa && ga) comp[{g.id, f.id}] = a.compose(g.id, f.id);
            else if (fb && gb) comp[{g.id, f.id}] = b.compose(g.id, f.id);
            else if (fa && !ga && !gb) comp[{g.id, f.id}] = m.left_action.at({f.id, g.id});
            else if (!fa && !fb && gb) comp[{g.id, f.id}] = m.right_action.at({g.id, f.id});
            else
                throw CategoryError("collage: impossible composable pair (" + g.id + "," +
                                    f.id + ")");
        }
    std::map<std::string, std::string> ident;
    for (const auto& o : a.objects()) ident[o] = a.identity_of(o);
    for (const auto& o : b.objects()) ident[o] = b.identity_of(o);
    return FiniteCategory::build("collage(" + a.name() + "," + b.name() + ")",
                                 std::move(objects), std::move(mors), std::move(comp),
                                 std::move(ident));
}

Profunctor terminal_profunctor(CategoryPtr a, CategoryPtr b) {
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> values;
    std::map<std::pair<std::string, std::string>, std::string> lact, ract;
    auto unit = [](const std::string& x, const std::string& y) {
        return "u(" + x + "," + y + ")";
    };
    for (const auto& x : a->objects())
        for (const auto& y : b->objects()) values[{x, y}] = {unit(x, y)};
    for (const auto& f : a->morphisms())
        for (const auto& y : b->objects())
            lact[{f.id, unit(f.dst, y)}] = unit(f.src, y);
    for (const auto& g : b->morphisms())
        for (const auto& x : a->objects())
            ract[{g.id, unit(x, g.src)}] = unit(x, g.dst);
    return make_profunctor(std::move(a), std::move(b), std::move(values), std::move(lact),
                           std::move(ract));
}

namespace {

struct Chain {
    // Composable identity-free morphisms, first-applied first.
    std::vector<std::string> mors;
    std::string src;  // source object (needed for the empty chain)

    std::string name() const {
        if (mors.empty()) return src;
        std::string s = mors[0];
        for (size_t i = 1; i < mors.size(); ++i) s += "." + mors[i];
        return s;
    }
};

}  // namespace

SSetPtr nerve(const CategoryPtr& c, int truncation) {
    if (truncation < 0) throw CategoryError("nerve: negative truncation");
    // Identity-free chains per length; chains one beyond the truncation are
    // probed to decide completeness.
    std::vector<std::vector<Chain>> chains(truncation + 2);
    for (const auto& o : c->objects()) chains[0].push_back(Chain{{}, o});
    for (int k = 1; k <= truncation + 1; ++k) {
        for (const auto& base : chains[k - 1])
            for (const auto& m : c->morphisms()) {
                if (c->is_identity(m.id)) continue;
                const std::string& tip =
                    base.mors.empty() ? base.src : c->mor(base.mors.back()).dst;
                if (m.src != tip) continue;
                Chain ext = base;
                ext.mors.push_back(m.id);
                chains[k].push_back(std::move(ext));
            }
        if (chains[k].empty()) break;
    }
    bool complete = (int)chains[truncation + 1].size() == 0;

    std::vector<std::vector<GenSpec>> gens(truncation + 1);
    for (int k = 0; k <= truncation; ++k) {
        for (const auto& ch : chains[k]) {
            GenSpec gs;
            gs.name = ch.name();
            if (k > 0) {
                for (int i = 0; i <= k; ++i) {
                    // Face i drops vertex i of the chain.
                    if (i == 0) {
                        Chain rest{std::vector<std::string>(ch.mors.begin() + 1, ch.mors.end()),
                                   c->mor(ch.mors[0]).dst};
                        gs.faces.push_back(FaceRef{{}, rest.name()});
                    } else if (i == k) {
                        Chain rest{std::vector<std::string>(ch.mors.begin(), ch.mors.end() - 1),
                                   ch.src};
                        gs.faces.push_back(FaceRef{{}, rest.name()});
                    } else {
                        std::string comp = c->compose(ch.mors[i], ch.mors[i - 1]);
                        Chain rest{{}, ch.src};
                        for (int t = 0; t < i - 1; ++t) rest.mors.push_back(ch.mors[t]);
                        rest.mors.push_back(comp);
                        for (int t = i + 1; t < k; ++t) rest.mors.push_back(ch.mors[t]);
                        if (c->is_identity(comp)) {
                            // The composite collapses: the face is the
                            // degeneracy s_{i-1} of the chain without it.
                            Chain shorter{{}, ch.src};
                            for (int t = 0; t < i - 1; ++t) shorter.mors.push_back(ch.mors[t]);
                            for (int t = i + 1; t < k; ++t) shorter.mors.push_back(ch.mors[t]);
                            gs.faces.push_back(FaceRef{{i - 1}, shorter.name()});
                        } else {
                            gs.faces.push_back(FaceRef{{}, rest.name()});
                        }
                    }
                }
            }
            gens[k].push_back(std::move(gs));
        }
    }
    Provenance prov;
    prov.kind = complete ? Provenance::Kind::complete_nerve : Provenance::Kind::truncated_nerve;
    prov.truncation = truncation;
    prov.detail = c->name();
    return FiniteSimplicialSet::build("N(" + c->name() + ")@" + std::to_string(truncation),
                                      std::move(gens), std::move(prov));
}

SimplicialMap nerve_map(const FiniteFunctor& f, int truncation) {
    auto ns = nerve(f.source, truncation);
    auto nt = nerve(f.target, truncation);
    const auto& c = *f.source;
    const auto& d = *f.target;
    std::vector<std::vector<Simplex>> assign(ns->dimension() + 1);
    for (int k = 0; k <= ns->dimension(); ++k) {
        assign[k].resize(ns->gen_count(k));
        for (int i = 0; i < ns->gen_count(k); ++i) {
            const std::string& nm = ns->gen_name(GenId{k, i});
            if (k == 0) {
                auto tg = nt->find_gen(f.on_objects.at(nm));
                assign[k][i] = Simplex{0, {}, *tg};
                continue;
            }
            // Split the chain name, map each morphism, drop identities and
            // record their positions as degeneracies.
            std::vector<std::string> parts;
            size_t pos = 0;
            while (pos <= nm.size()) {
                size_t dot = nm.find('.', pos);
                if (dot == std::string::npos) {
                    parts.push_back(nm.substr(pos));
                    break;
                }
                parts.push_back(nm.substr(pos, dot - pos));
                pos = dot + 1;
            }
            std::vector<std::string> image;
            std::vector<int> word;  // identity slots, collected descending
            for (int t = (int)parts.size() - 1; t >= 0; --t) {
                const std::string& fm = f.on_morphisms.at(parts[t]);
                if (d.is_identity(fm)) word.push_back(t);
            }
            for (const auto& part : parts) {
                const std::string& fm = f.on_morphisms.at(part);
                if (!d.is_identity(fm)) image.push_back(fm);
            }
            Chain img_chain{image, f.on_objects.at(c.mor(parts[0]).src)};
            auto tg = nt->find_gen(img_chain.name());
            if (!tg)
                throw CategoryError("nerve_map: image chain '" + img_chain.name() +
                                    "' missing (truncation too small?)");
            assign[k][i] = Simplex{k, word, *tg};
        }
    }
    return make_map(ns, nt, std::move(assign), /*nerve_map=*/true);
}

}  // namespace cylkit
