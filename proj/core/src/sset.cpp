#include "cylkit/sset.hpp"

#include <algorithm>

namespace cylkit {

using delta::MonotoneMap;

namespace {

// Word validity: strictly decreasing, applicable over the generator's
// dimension (s_{w[t]} applied at ascending ranks starting from gen dim).
void check_word(const std::vector<int>& word, int gen_dim, const std::string& where) {
    int prev = 1 << 30;
    for (int j : word) {
        if (j >= prev) throw SSetError(where + ": degeneracy word not strictly decreasing");
        prev = j;
    }
    if (!word.empty()) {
        // Largest index is word[0]; it is applied last, at rank gen_dim + |w| - 1.
        if (word[0] > gen_dim + (int)word.size() - 1 || word.back() < 0)
            throw SSetError(where + ": degeneracy word index out of range");
    }
}

}  // namespace

SSetPtr FiniteSimplicialSet::build(std::string name,
                                   std::vector<std::vector<GenSpec>> gens,
                                   Provenance prov) {
    auto obj = std::shared_ptr<FiniteSimplicialSet>(new FiniteSimplicialSet());
    obj->name_ = std::move(name);
    obj->prov_ = std::move(prov);

    // Trim trailing empty dimensions so dimension() is honest.
    while (!gens.empty() && gens.back().empty()) gens.pop_back();

    // Sort per-dimension by name; record the index.
    obj->gen_names_.resize(gens.size());
    obj->faces_.resize(gens.size());
    for (int d = 0; d < (int)gens.size(); ++d) {
        std::sort(gens[d].begin(), gens[d].end(),
                  [](const GenSpec& a, const GenSpec& b) { return a.name < b.name; });
        for (int i = 0; i < (int)gens[d].size(); ++i) {
            const auto& g = gens[d][i];
            if (g.name.empty()) throw SSetError(obj->name_ + ": empty generator name");
            if (!obj->index_.emplace(g.name, GenId{d, i}).second)
                throw SSetError(obj->name_ + ": duplicate generator id '" + g.name + "'");
            obj->gen_names_[d].push_back(g.name);
        }
    }

    // Resolve faces.
    for (int d = 1; d < (int)gens.size(); ++d) {
        obj->faces_[d].resize(gens[d].size());
        for (int i = 0; i < (int)gens[d].size(); ++i) {
            const auto& g = gens[d][i];
            if ((int)g.faces.size() != d + 1)
                throw SSetError(obj->name_ + ": generator '" + g.name + "' needs " +
                                std::to_string(d + 1) + " faces, has " +
                                std::to_string(g.faces.size()));
            for (int k = 0; k <= d; ++k) {
                const auto& fr = g.faces[k];
                auto it = obj->index_.find(fr.target);
                if (it == obj->index_.end())
                    throw SSetError(obj->name_ + ": face " + std::to_string(k) +
                                    " of '" + g.name + "' targets unknown id '" +
                                    fr.target + "'");
                GenId tgt = it->second;
                check_word(fr.word, tgt.dim, obj->name_ + ": face " + std::to_string(k) +
                                                 " of '" + g.name + "'");
                if (tgt.dim + (int)fr.word.size() != d - 1)
                    throw SSetError(obj->name_ + ": face " + std::to_string(k) + " of '" +
                                    g.name + "' has dimension " +
                                    std::to_string(tgt.dim + (int)fr.word.size()) +
                                    ", expected " + std::to_string(d - 1));
                obj->faces_[d][i].push_back(Simplex{d - 1, fr.word, tgt});
            }
        }
    }

    // Simplicial identities: for every generator of dimension >= 2 and
    // i < j, d_i d_j = d_{j-1} d_i, evaluated through the action.
    for (int d = 2; d < (int)gens.size(); ++d) {
        for (int idx = 0; idx < (int)obj->gen_names_[d].size(); ++idx) {
            Simplex s{d, {}, GenId{d, idx}};
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    Simplex a = obj->act(obj->act(s, delta::face(d, j)), delta::face(d - 1, i));
                    Simplex b = obj->act(obj->act(s, delta::face(d, i)), delta::face(d - 1, j - 1));
                    if (!(a == b))
                        throw SSetError(obj->name_ + ": simplicial identity fails on '" +
                                        obj->gen_names_[d][idx] + "' at (i,j)=(" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
    }
    return obj;
}

int FiniteSimplicialSet::total_gen_count() const {
    int n = 0;
    for (const auto& v : gen_names_) n += (int)v.size();
    return n;
}

std::optional<GenId> FiniteSimplicialSet::find_gen(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Simplex FiniteSimplicialSet::act(const Simplex& s, const MonotoneMap& op) const {
    if (op.target_rank != s.dim)
        throw SSetError(name_ + ": act rank mismatch (op target " +
                        std::to_string(op.target_rank) + ", simplex dim " +
                        std::to_string(s.dim) + ")");
    // s = sigma_w . g; s . op = (sigma_w o op) . g, then factor and push the
    // mono part through the stored face table.
    MonotoneMap f = op;
    if (!s.word.empty())
        f = delta::compose(delta::epi_from_word(s.word, s.gen.dim), op);
    auto [epi, mono] = delta::epi_mono_factor(f);

    // Apply the mono to the generator by repeated top face lookups.
    Simplex cur{s.gen.dim, {}, s.gen};
    MonotoneMap mu = mono;
    while (!delta::is_identity(mu)) {
        if (cur.word.empty()) {
            // Nondegenerate: strip the largest missed value via the face table.
            auto w = delta::face_word(mu);
            int j = w.back();
            const Simplex& f_j = faces_[cur.gen.dim][cur.gen.idx][j];
            // mu = d_j o nu; compute nu by dropping j from the target.
            std::vector<int> nv(mu.values.size());
            for (size_t t = 0; t < mu.values.size(); ++t)
                nv[t] = mu.values[t] < j ? mu.values[t] : mu.values[t] - 1;
            mu = MonotoneMap{mu.source_rank, mu.target_rank - 1, std::move(nv)};
            cur = f_j;
        } else {
            // Degenerate intermediate: fold its word into the map and refactor.
            MonotoneMap full = delta::compose(delta::epi_from_word(cur.word, cur.gen.dim), mu);
            auto fac = delta::epi_mono_factor(full);
            // Compose the outer epi into the pending epi part.
            MonotoneMap inner_epi = fac.epi;
            mu = fac.mono;
            cur = Simplex{cur.gen.dim, {}, cur.gen};
            // inner_epi: [mu.source_rank] ->> [...]; absorb into epi by
            // composing: total = mono' o inner_epi already factored, so push
            // inner_epi out to the caller-level epi.
            MonotoneMap total = delta::compose(inner_epi, epi);
            // Recompute the overall factorization with the new epi.
            epi = total;
        }
    }
    // Fold any degeneracy the last face lookup left on cur into the epi.
    if (!cur.word.empty()) {
        epi = delta::compose(delta::epi_from_word(cur.word, cur.gen.dim), epi);
        cur = Simplex{cur.gen.dim, {}, cur.gen};
    }
    if (delta::is_identity(epi)) return cur;
    auto word = delta::degeneracy_word(epi);
    return Simplex{epi.source_rank, std::move(word), cur.gen};
}

std::vector<Simplex> FiniteSimplicialSet::simplices_at(int n) const {
    std::vector<Simplex> out;
    for (int k = std::min(n, dimension()); k >= 0; --k) {
        auto epis = delta::all_epis(n, k);
        std::vector<std::vector<int>> words;
        words.reserve(epis.size());
        for (auto& e : epis) words.push_back(delta::degeneracy_word(e));
        std::sort(words.begin(), words.end());
        for (int idx = 0; idx < (int)gen_names_[k].size(); ++idx)
            for (const auto& w : words)
                out.push_back(Simplex{n, w, GenId{k, idx}});
    }
    // Canonical order: gen dim descending, gen idx ascending, word ascending.
    std::sort(out.begin(), out.end(), simplex_less);
    return out;
}

Simplex FiniteSimplicialSet::degenerate_at(GenId vertex, int n) const {
    if (vertex.dim != 0) throw SSetError("degenerate_at: not a vertex");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
    return Simplex{n, std::move(w), vertex};
}

bool FiniteSimplicialSet::simplex_less(const Simplex& a, const Simplex& b) {
    if (a.gen.dim != b.gen.dim) return a.gen.dim > b.gen.dim;
    if (a.gen.idx != b.gen.idx) return a.gen.idx < b.gen.idx;
    return a.word < b.word;
}

bool FiniteSimplicialSet::same_as(const FiniteSimplicialSet& other) const {
    return gen_names_ == other.gen_names_ && faces_ == other.faces_;
}

std::string FiniteSimplicialSet::simplex_repr(const Simplex& s) const {
    std::string r;
    for (int j : s.word) r += "s" + std::to_string(j) + ".";
    return r + gen_name(s.gen);
}

SSetPtr opposite(const SSetPtr& x) {
    auto rev_simplex = [&](const Simplex& s) {
        if (s.word.empty()) return s;
        MonotoneMap e = delta::opposite(delta::epi_from_word(s.word, s.gen.dim));
        return Simplex{s.dim, delta::degeneracy_word(e), s.gen};
    };
    std::vector<std::vector<GenSpec>> gens(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d) {
        for (int i = 0; i < x->gen_count(d); ++i) {
            GenSpec gs;
            gs.name = x->gen_name(GenId{d, i});
            for (int k = 0; k <= d && d > 0; ++k) {
                Simplex f = rev_simplex(x->gen_face(GenId{d, i}, d - k));
                gs.faces.push_back(FaceRef{f.word, x->gen_name(f.gen)});
            }
            gens[d].push_back(std::move(gs));
        }
    }
    Provenance prov = x->provenance();
    return FiniteSimplicialSet::build(x->name() + ".op", std::move(gens), prov);
}

Simplex SimplicialMap::apply(const Simplex& s) const {
    const Simplex& img = assign_[s.gen.dim][s.gen.idx];
    if (s.word.empty()) return img;
    return target_->act(img, delta::epi_from_word(s.word, s.gen.dim));
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
    if (!source_ || !other.source_) return source_ == other.source_ && target_ == other.target_;
    return source_->same_as(*other.source_) && target_->same_as(*other.target_) &&
           assign_ == other.assign_;
}

SimplicialMap make_map(SSetPtr source, SSetPtr target,
                       std::vector<std::vector<Simplex>> assignment, bool nerve_map) {
    if (!source || !target) throw SSetError("make_map: null endpoint");
    if ((int)assignment.size() < source->dimension() + 1)
        throw SSetError("make_map: assignment missing dimensions");
    SimplicialMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.assign_ = std::move(assignment);
    f.nerve_map_ = nerve_map;
    const auto& src = *f.source_;
    const auto& tgt = *f.target_;
    for (int d = 0; d <= src.dimension(); ++d) {
        if ((int)f.assign_[d].size() != src.gen_count(d))
            throw SSetError("make_map: assignment count mismatch at dimension " +
                            std::to_string(d));
        for (int i = 0; i < src.gen_count(d); ++i) {
            const Simplex& img = f.assign_[d][i];
            if (img.dim != d)
                throw SSetError("make_map: image of '" + src.gen_name(GenId{d, i}) +
                                "' has dimension " + std::to_string(img.dim) +
                                ", expected " + std::to_string(d));
            if (img.gen.dim > tgt.dimension() || img.gen.idx >= tgt.gen_count(img.gen.dim))
                throw SSetError("make_map: image of '" + src.gen_name(GenId{d, i}) +
                                "' references a missing target generator");
            for (int k = 0; k <= d && d > 0; ++k) {
                Simplex lhs = f.apply(src.gen_face(GenId{d, i}, k));
                Simplex rhs = tgt.act(img, delta::face(d, k));
                if (!(lhs == rhs))
                    throw SSetError("make_map: face " + std::to_string(k) +
                                    " of '" + src.gen_name(GenId{d, i}) +
                                    "' is not preserved");
            }
        }
    }
    return f;
}

SimplicialMap make_map_by_names(
    SSetPtr source, SSetPtr target,
    const std::map<std::string, std::pair<std::vector<int>, std::string>>& images,
    bool nerve_map) {
    std::vector<std::vector<Simplex>> assign(source->dimension() + 1);
    for (int d = 0; d <= source->dimension(); ++d) {
        assign[d].resize(source->gen_count(d));
        for (int i = 0; i < source->gen_count(d); ++i) {
            const std::string& nm = source->gen_name(GenId{d, i});
            auto it = images.find(nm);
            if (it == images.end())
                throw SSetError("make_map_by_names: no image for '" + nm + "'");
            auto tg = target->find_gen(it->second.second);
            if (!tg)
                throw SSetError("make_map_by_names: unknown target id '" +
                                it->second.second + "'");
            assign[d][i] = Simplex{d, it->second.first, *tg};
        }
    }
    return make_map(std::move(source), std::move(target), std::move(assign), nerve_map);
}

SimplicialMap identity_map(const SSetPtr& x) {
    std::vector<std::vector<Simplex>> assign(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d)
        for (int i = 0; i < x->gen_count(d); ++i)
            assign[d].push_back(Simplex{d, {}, GenId{d, i}});
    return make_map(x, x, std::move(assign));
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
    if (!inner.target()->same_as(*outer.source()))
        throw SSetError("compose: middle objects disagree");
    std::vector<std::vector<Simplex>> assign(inner.source()->dimension() + 1);
    for (int d = 0; d <= inner.source()->dimension(); ++d)
        for (int i = 0; i < inner.source()->gen_count(d); ++i)
            assign[d].push_back(outer.apply(inner.gen_image(GenId{d, i})));
    return make_map(inner.source(), outer.target(), std::move(assign),
                    outer.is_nerve_map() && inner.is_nerve_map());
}

SimplicialMap opposite_map(const SimplicialMap& f) {
    auto src = opposite(f.source());
    auto tgt = opposite(f.target());
    std::vector<std::vector<Simplex>> assign(src->dimension() + 1);
    for (int d = 0; d <= src->dimension(); ++d)
        for (int i = 0; i < src->gen_count(d); ++i) {
            Simplex img = f.gen_image(GenId{d, i});
            if (!img.word.empty()) {
                auto e = delta::opposite(delta::epi_from_word(img.word, img.gen.dim));
                img.word = delta::degeneracy_word(e);
            }
            assign[d].push_back(img);
        }
    return make_map(src, tgt, std::move(assign), f.is_nerve_map());
}

bool is_identity(const SimplicialMap& f) {
    if (!f.source()->same_as(*f.target())) return false;
    for (int d = 0; d <= f.source()->dimension(); ++d)
        for (int i = 0; i < f.source()->gen_count(d); ++i)
            if (!(f.gen_image(GenId{d, i}) == Simplex{d, {}, GenId{d, i}})) return false;
    return true;
}

MapProps map_props(const SimplicialMap& f) {
    MapProps p;
    p.mono = p.epi = true;
    int top = std::max(f.source()->dimension(), f.target()->dimension()) + 1;
    for (int n = 0; n <= top; ++n) {
        auto src = f.source()->simplices_at(n);
        auto tgt = f.target()->simplices_at(n);
        std::vector<Simplex> images;
        images.reserve(src.size());
        for (const auto& s : src) images.push_back(f.apply(s));
        auto sorted = images;
        std::sort(sorted.begin(), sorted.end(), FiniteSimplicialSet::simplex_less);
        bool inj = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        bool surj = true;
        for (const auto& t : tgt)
            if (!std::binary_search(sorted.begin(), sorted.end(), t,
                                    FiniteSimplicialSet::simplex_less)) {
                surj = false;
                break;
            }
        if (!inj) p.mono = false;
        if (!surj) p.epi = false;
        if (n == 0) p.bijective_on_0 = inj && surj;
    }
    return p;
}

bool is_iso(const SimplicialMap& f) {
    auto p = map_props(f);
    return p.mono && p.epi;
}

}  // namespace cylkit
