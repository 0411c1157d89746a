#include "cylkit/standard.hpp"

#include <algorithm>
#include <set>

namespace cylkit {

std::string subset_name(const std::vector<int>& verts) {
    std::string s;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(verts[i]);
    }
    return s;
}

std::vector<int> vertex_list(const std::string& gen_name) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= gen_name.size()) {
        size_t dot = gen_name.find('.', pos);
        std::string tok = dot == std::string::npos ? gen_name.substr(pos)
                                                   : gen_name.substr(pos, dot - pos);
        out.push_back(std::stoi(tok));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return out;
}

namespace {

// Builds the subcomplex of Delta[n] spanned by the given vertex subsets
// (assumed face-closed).
SSetPtr subsets_complex(const std::string& name, int n,
                        const std::vector<std::vector<int>>& subsets, Provenance prov = {}) {
    std::vector<std::vector<GenSpec>> gens(n + 1);
    for (const auto& s : subsets) {
        GenSpec gs;
        gs.name = subset_name(s);
        int d = (int)s.size() - 1;
        if (d > 0)
            for (int i = 0; i <= d; ++i) {
                std::vector<int> f = s;
                f.erase(f.begin() + i);
                gs.faces.push_back(FaceRef{{}, subset_name(f)});
            }
        gens[d].push_back(std::move(gs));
    }
    return FiniteSimplicialSet::build(name, std::move(gens), std::move(prov));
}

std::vector<std::vector<int>> all_subsets(int n, bool proper) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        if (proper && mask == (1 << (n + 1)) - 1) continue;
        std::vector<int> s;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

SSetPtr std_simplex(int n) {
    if (n < 0) throw SSetError("std_simplex: negative dimension");
    Provenance prov;
    prov.kind = Provenance::Kind::complete_nerve;
    prov.truncation = n;
    prov.detail = "linear poset";
    return subsets_complex("Delta[" + std::to_string(n) + "]", n, all_subsets(n, false),
                           std::move(prov));
}

SSetPtr std_boundary(int n) {
    if (n < 0) throw SSetError("std_boundary: negative dimension");
    return subsets_complex("dDelta[" + std::to_string(n) + "]", std::max(n - 1, 0),
                           all_subsets(n, true));
}

SSetPtr std_horn(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw SSetError("std_horn: bad indices");
    std::vector<std::vector<int>> subsets;
    for (auto& s : all_subsets(n, true)) {
        // Keep S unless S = [n] \ {k}.
        if ((int)s.size() == n) {
            bool is_missing_face = true;
            for (int v : s)
                if (v == k) is_missing_face = false;
            if (is_missing_face) continue;
        }
        subsets.push_back(std::move(s));
    }
    return subsets_complex("Horn[" + std::to_string(n) + "," + std::to_string(k) + "]",
                           n - 1, subsets);
}

SSetPtr std_spine(int n) {
    if (n < 0) throw SSetError("std_spine: negative dimension");
    std::vector<std::vector<int>> subsets;
    for (int i = 0; i <= n; ++i) subsets.push_back({i});
    for (int i = 0; i < n; ++i) subsets.push_back({i, i + 1});
    return subsets_complex("Spine[" + std::to_string(n) + "]", std::max(n, 0) == 0 ? 0 : 1,
                           subsets);
}

CategoryPtr indiscrete2() {
    std::map<std::pair<std::string, std::string>, std::string> comp;
    comp[{"01", "10"}] = "e1";
    comp[{"10", "01"}] = "e0";
    comp[{"01", "e0"}] = "01";
    comp[{"e1", "01"}] = "01";
    comp[{"10", "e1"}] = "10";
    comp[{"e0", "10"}] = "10";
    comp[{"e0", "e0"}] = "e0";
    comp[{"e1", "e1"}] = "e1";
    return FiniteCategory::build(
        "Ind2", {"0", "1"},
        {{"e0", "0", "0"}, {"e1", "1", "1"}, {"01", "0", "1"}, {"10", "1", "0"}},
        std::move(comp), {{"0", "e0"}, {"1", "e1"}});
}

CategoryPtr linear_poset(int n) {
    std::vector<std::string> objects;
    std::vector<MorSpec> mors;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> ident;
    auto mid = [](int i, int j) { return "m" + std::to_string(i) + "_" + std::to_string(j); };
    for (int i = 0; i <= n; ++i) {
        objects.push_back(std::to_string(i));
        ident[std::to_string(i)] = mid(i, i);
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            mors.push_back(MorSpec{mid(i, j), std::to_string(i), std::to_string(j)});
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) comp[{mid(j, k), mid(i, j)}] = mid(i, k);
    return FiniteCategory::build("poset" + std::to_string(n + 1), std::move(objects),
                                 std::move(mors), std::move(comp), std::move(ident));
}

CategoryPtr discrete_category(int n) {
    std::vector<std::string> objects;
    std::vector<MorSpec> mors;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    std::map<std::string, std::string> ident;
    for (int i = 0; i < n; ++i) {
        std::string o = std::to_string(i);
        objects.push_back(o);
        mors.push_back(MorSpec{"e" + o, o, o});
        comp[{"e" + o, "e" + o}] = "e" + o;
        ident[o] = "e" + o;
    }
    return FiniteCategory::build("disc" + std::to_string(n), std::move(objects),
                                 std::move(mors), std::move(comp), std::move(ident));
}

SSetPtr std_j(int truncation) { return nerve(indiscrete2(), truncation); }

SSetPtr std_empty() { return FiniteSimplicialSet::build("Empty", {}); }

SimplicialMap simplex_classifier(const SSetPtr& x, const Simplex& s) {
    auto dn = std_simplex(s.dim);
    std::vector<std::vector<Simplex>> assign(dn->dimension() + 1);
    for (int d = 0; d <= dn->dimension(); ++d)
        for (int i = 0; i < dn->gen_count(d); ++i) {
            auto verts = vertex_list(dn->gen_name(GenId{d, i}));
            assign[d].push_back(x->act(s, delta::subset_inclusion(verts, s.dim)));
        }
    return make_map(dn, x, std::move(assign));
}

namespace {
SimplicialMap name_inclusion(const SSetPtr& sub, const SSetPtr& whole) {
    std::vector<std::vector<Simplex>> assign(sub->dimension() + 1);
    for (int d = 0; d <= sub->dimension(); ++d)
        for (int i = 0; i < sub->gen_count(d); ++i) {
            auto g = whole->find_gen(sub->gen_name(GenId{d, i}));
            if (!g)
                throw SSetError("inclusion: generator '" + sub->gen_name(GenId{d, i}) +
                                "' missing from " + whole->name());
            assign[d].push_back(Simplex{d, {}, *g});
        }
    return make_map(sub, whole, std::move(assign));
}
}  // namespace

SimplicialMap boundary_inclusion(int n) { return name_inclusion(std_boundary(n), std_simplex(n)); }
SimplicialMap horn_inclusion(int n, int k) { return name_inclusion(std_horn(n, k), std_simplex(n)); }
SimplicialMap spine_inclusion(int n) { return name_inclusion(std_spine(n), std_simplex(n)); }

SimplicialMap subcomplex_inclusion(const SSetPtr& sub, const SSetPtr& whole) {
    return name_inclusion(sub, whole);
}

SSetPtr subcomplex(const SSetPtr& x, const std::vector<std::string>& gens,
                   const std::string& name) {
    std::set<std::string> keep(gens.begin(), gens.end());
    std::vector<std::vector<GenSpec>> out(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d)
        for (int i = 0; i < x->gen_count(d); ++i) {
            const std::string& nm = x->gen_name(GenId{d, i});
            if (!keep.count(nm)) continue;
            GenSpec gs;
            gs.name = nm;
            for (int k = 0; k <= d && d > 0; ++k) {
                const Simplex& f = x->gen_face(GenId{d, i}, k);
                const std::string& tn = x->gen_name(f.gen);
                if (!keep.count(tn))
                    throw SSetError("subcomplex: '" + nm + "' has face outside the subset ('" +
                                    tn + "')");
                gs.faces.push_back(FaceRef{f.word, tn});
            }
            out[d].push_back(std::move(gs));
        }
    return FiniteSimplicialSet::build(name, std::move(out));
}

}  // namespace cylkit
