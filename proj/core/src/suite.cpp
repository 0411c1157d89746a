// The acceptance battery.  Each criterion is a self-contained check with an
// independent oracle where one exists (binomial counts, brute-force
// enumerations, replayed certificates); corpus draws come from a per-criterion
// seed stream so filtered runs reproduce full runs.
#include "cylkit/suite.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cylkit/category.hpp"
#include "cylkit/classify.hpp"
#include "cylkit/corpus.hpp"
#include "cylkit/cylinder.hpp"
#include "cylkit/lifting.hpp"
#include "cylkit/limits.hpp"
#include "cylkit/rng.hpp"
#include "cylkit/standard.hpp"

namespace cylkit {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

std::vector<int> parse_dotted(const std::string& name) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < name.size()) {
        std::size_t dot = name.find('.', pos);
        if (dot == std::string::npos) dot = name.size();
        out.push_back(std::stoi(name.substr(pos, dot - pos)));
        pos = dot + 1;
    }
    return out;
}

std::string dotted(const std::vector<int>& verts) {
    std::string out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) out += ".";
        out += std::to_string(verts[i]);
    }
    return out;
}

// --- 1: joins of simplices are simplices, by the canonical isomorphism ----

Outcome join_laws(const RunConfig&, SplitMix64&) {
    int verified = 0;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            Join jn = join(std_simplex(m), std_simplex(n));
            SSetPtr target = std_simplex(m + 1 + n);
            std::map<std::string, std::pair<std::vector<int>, std::string>> images;
            for (int d = 0; d <= jn.object->dimension(); ++d)
                for (int i = 0; i < jn.object->gen_count(d); ++i) {
                    Join::Split sp = jn.split(jn.object->nondeg(GenId{d, i}));
                    std::vector<int> verts;
                    if (sp.a)
                        verts = parse_dotted(jn.left->gen_name(sp.a->gen));
                    if (sp.b)
                        for (int v : parse_dotted(jn.right->gen_name(sp.b->gen)))
                            verts.push_back(v + m + 1);
                    images[jn.object->gen_name(GenId{d, i})] = {{}, dotted(verts)};
                }
            SimplicialMap f = make_map_by_names(jn.object, target, images);
            if (!is_iso(f)) return {false, "join(" + std::to_string(m) + "," +
                                               std::to_string(n) + ") not isomorphic"};
            ++verified;
        }
    return {true, std::to_string(verified) +
                      " canonical isomorphisms join(D[m],D[n]) = D[m+1+n], m,n <= 3"};
}

// --- 2: level counts against binomials and brute-force enumeration --------

Outcome level_counts(const RunConfig&, SplitMix64&) {
    int verified = 0;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            std::uint64_t lhs = std_simplex(m)->simplices_at(n).size();
            std::uint64_t brute = delta::all_maps(n, m).size();
            std::uint64_t choose = binomial(m + n + 1, m);
            if (lhs != brute || lhs != choose)
                return {false, "level count mismatch at m=" + std::to_string(m) +
                                   " n=" + std::to_string(n)};
            ++verified;
        }
    return {true, std::to_string(verified) +
                      " level counts equal C(m+n+1,m) and the monotone-map enumeration"};
}

// --- 3: Eilenberg-Zilber discipline on seeded samples ----------------------

Outcome ez_discipline(const RunConfig&, SplitMix64& rng) {
    std::vector<SSetPtr> pool = {
        std_simplex(0), std_simplex(1),  std_simplex(2),  std_simplex(3),
        std_simplex(4), std_horn(2, 1),  std_horn(3, 1),  std_horn(3, 2),
        std_boundary(2), std_boundary(3), std_spine(3),
        join(std_simplex(1), std_simplex(1)).object,
        nerve(linear_poset(2), 3), std_j(2)};
    auto random_op = [&](int src, int dst) {
        std::vector<int> vals(src + 1);
        for (int& v : vals) v = static_cast<int>(rng.below(dst + 1));
        std::sort(vals.begin(), vals.end());
        return delta::make_map(src, dst, vals);
    };
    const int samples = 1000;
    for (int it = 0; it < samples; ++it) {
        const SSetPtr& x = pool[rng.below(pool.size())];
        int lev = static_cast<int>(rng.below(x->dimension() + 3));
        std::vector<Simplex> simps = x->simplices_at(lev);
        Simplex s = simps[rng.below(simps.size())];
        int p = static_cast<int>(rng.below(lev + 3));
        delta::MonotoneMap theta = random_op(p, lev);
        Simplex r = x->act(s, theta);
        if (r.dim != p) return {false, "action changed dimension wrongly"};
        for (std::size_t i = 1; i < r.word.size(); ++i)
            if (r.word[i - 1] <= r.word[i])
                return {false, "normal-form word not strictly decreasing"};
        if (!(x->act(s, delta::identity(lev)) == s))
            return {false, "identity operator moved a simplex"};
        int q = static_cast<int>(rng.below(p + 3));
        delta::MonotoneMap eta = random_op(q, p);
        if (!(x->act(r, eta) == x->act(s, delta::compose(theta, eta))))
            return {false, "presheaf action not functorial"};
    }
    return {true, std::to_string(samples) +
                      " samples: normal forms unique, action functorial"};
}

// --- 4: quasi-category detection -------------------------------------------

Outcome qcat_detection(const RunConfig& config, SplitMix64& rng) {
    for (int i = 0; i < 10; ++i) {
        CategoryPtr c = random_poset(rng, 4, "C" + std::to_string(i));
        SSetPtr n = nerve(c, static_cast<int>(c->objects().size()));
        Verdict v = is_quasicategory(n, config);
        if (v.status != Status::yes_certified)
            return {false, n->name() + ": expected YES_CERTIFIED, got " +
                               to_string(v.status)};
    }
    RlpResult horn = has_rlp(terminal_map(std_horn(2, 1)), FamilySpec::inner(), config);
    if (horn.verdict.status != Status::no || !horn.counterexample)
        return {false, "Lambda^1[2] was not refuted with a counterexample"};
    return {true, "10 seeded poset nerves YES_CERTIFIED; Lambda^1[2] NO with horn "
                  "square from " +
                      horn.counterexample->left.source()->name()};
}

// --- 5: spine inclusions certified inner anodyne ----------------------------

Outcome spine_anodyne(const RunConfig& config, SplitMix64&) {
    std::string detail;
    for (int n = 2; n <= 4; ++n) {
        SimplicialMap u = spine_inclusion(n);
        AnodyneCertification cert = certify_inner_anodyne(u, config);
        if (cert.verdict.status != Status::yes_certified)
            return {false, "I[" + std::to_string(n) + "] -> D[" + std::to_string(n) +
                               "]: " + to_string(cert.verdict.status)};
        if (!cert.certificate || !cert.factorization ||
            !check_retract_certificate(*cert.certificate, u, cert.factorization->left_part) ||
            !audit_factorization(*cert.factorization))
            return {false, "I[" + std::to_string(n) + "] certificate failed to replay"};
        detail += (n > 2 ? ", " : "") + std::string("I[") + std::to_string(n) + "] in " +
                  std::to_string(cert.factorization->stages.size()) + " stages";
    }
    return {true, "certified with replayed certificates: " + detail};
}

// --- 6: absolute weak categorical equivalence pipeline ----------------------

Outcome absolute_wce(const RunConfig& config, SplitMix64&) {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k < n; ++k) {
            AwceResult r = is_absolute_wce(horn_inclusion(n, k), config);
            if (!r.verdict.yes())
                return {false, "horn(" + std::to_string(n) + "," + std::to_string(k) +
                                   "): " + to_string(r.verdict.status)};
        }
    AwceResult bd = is_absolute_wce(boundary_inclusion(1), config);
    if (bd.verdict.status != Status::no || !bd.refutation)
        return {false, "dD[1] -> D[1] was not refuted with an inner fibration"};
    return {true, "3 inner horns YES; dD[1] -> D[1] NO, refuted against " +
                      bd.refutation->fibration};
}

// --- 7: right cancellation over seeded anodyne pairs ------------------------

Outcome right_cancellation(const RunConfig& config, SplitMix64& rng) {
    for (int i = 0; i < 20; ++i) {
        AnodynePair pr = random_anodyne_pair(rng);
        CancellationReport rep = right_cancellation_check(pr.u, pr.v, config);
        if (rep.contradiction) return {false, "pair " + std::to_string(i) + ": contradiction"};
        if (rep.u_cert.verdict.status != Status::yes_certified ||
            rep.vu_cert.verdict.status != Status::yes_certified)
            return {false, "pair " + std::to_string(i) + ": premises not certified"};
        if (rep.v_cert.verdict.status != Status::yes_certified)
            return {false, "pair " + std::to_string(i) + ": v not certified (" +
                               to_string(rep.v_cert.verdict.status) + ")"};
    }
    return {true, "20 seeded pairs: u and vu certified imply v certified, "
                  "no contradictions"};
}

// --- 8: cylinder fibrancy conditions agree ----------------------------------

Outcome cylinder_tfae(const RunConfig& config, SplitMix64&) {
    std::vector<std::pair<SSetPtr, SSetPtr>> pairs = {
        {std_simplex(1), std_simplex(0)},
        {std_horn(2, 1), std_simplex(1)},
        {std_spine(2), std_spine(2)},
    };
    std::string detail;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Cylinder start = initial_cylinder(pairs[i].first, pairs[i].second);
        CanonicalJoin cm = canonical_morphism(start);
        CellComplexFactorization fact =
            soa_factor(cm.to_join, FamilySpec::inner(), config);
        if (!fact.status.yes())
            return {false, "factorization " + std::to_string(i) + ": " +
                               to_string(fact.status.status)};
        Reflection refl = reflect_cylinder(fact.right_part, cm.jn);
        TfaeReport rep = verify_tfae(refl.cyl, config);
        if (!rep.agreement)
            return {false, "cylinder " + std::to_string(i) + ": conditions disagree"};
        detail += (i ? "; " : "") + std::to_string(i) + ":" +
                  to_string(rep.ambifibrant.status);
    }
    return {true, "3 factored cylinders, conditions agree (" + detail + ")"};
}

// --- 9: inner-to-trivial three-way agreement --------------------------------

Outcome inner_to_trivial(const RunConfig& config, SplitMix64& rng) {
    for (int i = 0; i < 10; ++i) {
        CategoryPtr c = random_poset(rng, 4, "P" + std::to_string(i));
        CategoryPtr d = random_poset(rng, 4, "Q" + std::to_string(i));
        FiniteFunctor f = random_poset_functor(rng, c, d);
        int t = static_cast<int>(std::max(c->objects().size(), d->objects().size()));
        Inn2TrivReport rep = check_inn2triv(nerve_map(f, t), config);
        if (!rep.agreement)
            return {false, "seeded nerve map " + std::to_string(i) + ": routes disagree"};
    }
    Inn2TrivReport bd = check_inn2triv(boundary_inclusion(1), config);
    if (bd.whole.status != Status::no || bd.edges_all.status != Status::no ||
        bd.homs_all.status != Status::no)
        return {false, "dD[1] -> D[1]: expected NO on all three routes"};
    return {true, "10 seeded nerve maps agree; dD[1] -> D[1] NO on all three routes"};
}

// --- 10: adjunction enumerations --------------------------------------------

Outcome adjunctions(const RunConfig&, SplitMix64& rng) {
    SSetPtr pt = std_simplex(0);
    SSetPtr d1 = std_simplex(1);
    Simplex deg01{2, {0}, d1->find_gen("0.1").value()};
    std::vector<Cylinder> xs;
    xs.push_back(terminal_cylinder(pt, pt));
    xs.push_back(terminal_cylinder(d1, pt));
    xs.push_back(terminal_cylinder(pt, d1));
    xs.push_back(initial_cylinder(d1, d1));
    xs.push_back(make_cylinder(simplex_classifier(d1, deg01)));

    auto maps_into = [&](const SSetPtr& target) {
        std::vector<SimplicialMap> out;
        out.push_back(initial_map(target));
        for (const SSetPtr& m : {pt, d1}) {
            MapSearchSpec spec;
            spec.source = m;
            spec.target = target;
            for (SimplicialMap& f : enumerate_maps(spec).maps) out.push_back(std::move(f));
        }
        return out;
    };
    int division_checked = 0;
    for (const Cylinder& x : xs) {
        int budget = 10 - x.total->total_gen_count();
        for (const SimplicialMap& m : maps_into(x.a()))
            for (const SimplicialMap& s : maps_into(x.b())) {
                if (m.source()->total_gen_count() + s.source()->total_gen_count() > budget)
                    continue;
                if (!verify_division_adjunction(m, s, x))
                    return {false, "division adjunction failed over " + x.total->name()};
                ++division_checked;
            }
    }

    auto corners_into = [&](const SSetPtr& a) {
        std::vector<std::pair<SimplicialMap, SimplicialMap>> out;
        for (int v = 0; v < a->gen_count(0) && v < 2; ++v) {
            SimplicialMap vert = constant_map(pt, a, a->gen_name(GenId{0, v}));
            out.emplace_back(initial_map(pt), vert);
            if (v == 0) out.emplace_back(identity_map(pt), vert);
        }
        {
            MapSearchSpec spec;
            spec.source = d1;
            spec.target = a;
            auto res = enumerate_maps(spec);
            if (!res.maps.empty())
                out.emplace_back(boundary_inclusion(1), res.maps.front());
        }
        if (a->same_as(*d1))
            out.emplace_back(constant_map(pt, d1, "0"), identity_map(d1));
        return out;
    };
    int leibniz_checked = 0;
    for (const Cylinder& x : xs)
        for (const auto& [f, n] : corners_into(x.a()))
            for (const auto& [g, t] : corners_into(x.b())) {
                int total = f.source()->total_gen_count() + n.source()->total_gen_count() +
                            g.source()->total_gen_count() + t.source()->total_gen_count() +
                            x.total->total_gen_count();
                if (total > 10) continue;
                LeibnizLiftReport rep = verify_leibniz_lift_equivalence(f, n, g, t, x);
                if (!rep.agreement)
                    return {false, "leibniz four-way disagreement over " + x.total->name()};
                ++leibniz_checked;
            }

    for (int i = 0; i < 10; ++i) {
        Cylinder x = random_cylinder(rng);
        Cylinder y = from_presheaf(to_presheaf(x));
        if (!find_cylinder_isomorphism(x, y))
            return {false, "presheaf round-trip broke cylinder " + x.total->name()};
    }

    std::vector<std::pair<SSetPtr, SSetPtr>> ends = {
        {pt, pt}, {d1, pt}, {pt, d1}, {d1, d1}, {std_spine(2), pt}};
    for (const auto& [a, b] : ends) {
        CylinderPresheaf tp = to_presheaf(terminal_cylinder(a, b));
        if (tp.counts.empty()) return {false, "terminal presheaf has no cells"};
        for (const auto& [key, cnt] : tp.counts)
            if (cnt != 1) return {false, "terminal presheaf cell not a singleton"};
        CylinderPresheaf ip = to_presheaf(initial_cylinder(a, b));
        if (ip.counts.empty()) return {false, "initial presheaf has no cells"};
        for (const auto& [key, cnt] : ip.counts)
            if (cnt != 0) return {false, "initial presheaf cell not empty"};
    }
    return {true, std::to_string(division_checked) + " division adjunctions, " +
                      std::to_string(leibniz_checked) +
                      " leibniz squares, 10 round-trips, 5 constant correspondences"};
}

// --- 11: duality -------------------------------------------------------------

Outcome duality(const RunConfig& config, SplitMix64& rng) {
    std::vector<std::pair<std::string, SimplicialMap>> maps;
    maps.emplace_back("dD[1]", boundary_inclusion(1));
    maps.emplace_back("horn(2,1)", horn_inclusion(2, 1));
    maps.emplace_back("horn(3,1)", horn_inclusion(3, 1));
    maps.emplace_back("spine(2)", spine_inclusion(2));
    maps.emplace_back("J_2 -> pt", terminal_map(std_j(2)));
    maps.emplace_back("N(poset3) -> pt", terminal_map(nerve(linear_poset(2), 3)));
    for (int i = 0; i < 3; ++i) {
        CategoryPtr c = random_poset(rng, 3, "Dc" + std::to_string(i));
        CategoryPtr d = random_poset(rng, 3, "Dd" + std::to_string(i));
        FiniteFunctor f = random_poset_functor(rng, c, d);
        int t = static_cast<int>(std::max(c->objects().size(), d->objects().size()));
        maps.emplace_back("nerve functor " + std::to_string(i), nerve_map(f, t));
    }
    for (int i = 0; i < 2; ++i)
        maps.emplace_back("cyl structure " + std::to_string(i),
                          random_cylinder(rng).structure);
    for (const auto& [name, p] : maps) {
        Verdict vl = classify_fibration(p, FibKind::left, config);
        Verdict vr = classify_fibration(opposite_map(p), FibKind::right, config);
        if (vl.status != vr.status)
            return {false, name + ": left " + to_string(vl.status) + " vs opposite right " +
                               to_string(vr.status)};
    }
    for (int i = 0; i < 5; ++i) {
        Cylinder x = random_cylinder(rng);
        Cylinder dd = dual_cylinder(dual_cylinder(x));
        if (!dd.total->same_as(*x.total) || !(dd.structure == x.structure) ||
            !(dd.incl_a == x.incl_a) || !(dd.incl_b == x.incl_b))
            return {false, "double dual differs on " + x.total->name()};
    }
    return {true, std::to_string(maps.size()) +
                      " maps: left status equals opposite right status; "
                      "double dual is the identity on 5 cylinders"};
}

// --- 12: collage nerves are ambifibrant --------------------------------------

Outcome collage_ambifibrancy(const RunConfig& config, SplitMix64& rng) {
    for (int i = 0; i < 5; ++i) {
        CategoryPtr a = random_poset(rng, 3, "Ca" + std::to_string(i));
        CategoryPtr b = random_poset(rng, 3, "Cb" + std::to_string(i));
        Profunctor m = random_thin_profunctor(rng, a, b);
        int t = static_cast<int>(a->objects().size() + b->objects().size()) - 1;
        Cylinder cn = collage_nerve(m, t);
        Verdict amb = is_ambifibrant(cn, config);
        if (!amb.yes())
            return {false, "collage " + std::to_string(i) + ": " + to_string(amb.status)};
        HomotopyCategory hx = homotopy_category(cn.total, config);
        HomotopyCategory hy = homotopy_category(cn.structure.target(), config);
        if (!is_discrete_isofibration(ho_functor(cn.structure, hx, hy)))
            return {false, "collage " + std::to_string(i) +
                               ": structure functor not a discrete isofibration"};
    }
    return {true, "5 seeded collage nerves ambifibrant with discrete isofibrant "
                  "homotopy projections"};
}

// --- 13: change of base -------------------------------------------------------

Outcome change_of_base(const RunConfig&, SplitMix64& rng) {
    auto pick = [&](SplitMix64& r) -> SSetPtr {
        switch (r.below(4)) {
            case 0: return std_simplex(0);
            case 1: return std_simplex(1);
            case 2: return std_boundary(1);
            default: return std_spine(2);
        }
    };
    for (int i = 0; i < 5; ++i) {
        SSetPtr a = pick(rng), b = pick(rng), a2 = pick(rng), b2 = pick(rng);
        SimplicialMap u = *random_map(rng, a, a2);
        SimplicialMap v = *random_map(rng, b, b2);
        if (!find_cylinder_isomorphism(pushforward(u, v, initial_cylinder(a, b)).cyl,
                                       initial_cylinder(a2, b2)))
            return {false, "instance " + std::to_string(i) +
                               ": pushforward broke the initial cylinder"};
        if (!find_cylinder_isomorphism(pullback_cyl(u, v, terminal_cylinder(a2, b2)).cyl,
                                       terminal_cylinder(a, b)))
            return {false, "instance " + std::to_string(i) +
                               ": pullback broke the terminal cylinder"};
        Cylinder x = rng.coin() ? initial_cylinder(a, b) : terminal_cylinder(a, b);
        Cylinder y = rng.coin() ? initial_cylinder(a2, b2) : terminal_cylinder(a2, b2);
        if (!verify_pushforward_triangles(u, v, x, y))
            return {false, "instance " + std::to_string(i) + ": triangle identities failed"};
    }
    return {true, "5 seeded instances: initial/terminal preserved, triangle "
                  "identities hold"};
}

// --- 14: the truncated interval groupoid -------------------------------------

Outcome interval_groupoid(const RunConfig& config, SplitMix64&) {
    int t = config.truncation;
    SSetPtr j = std_j(t);
    SimplicialMap incl = constant_map(std_simplex(0), j, "0");
    RunConfig bounded = config;
    bounded.max_dim = t;
    Verdict inner = classify_fibration(incl, FibKind::inner, bounded);
    if (inner.status != Status::yes_bounded)
        return {false, "vertex into J_" + std::to_string(t) + ": inner " +
                           to_string(inner.status)};
    Verdict iso = is_isofibration(incl, bounded);
    if (iso.status != Status::no)
        return {false, "vertex into J_" + std::to_string(t) + ": isofibration " +
                           to_string(iso.status)};
    return {true, "vertex into J_" + std::to_string(t) +
                      ": inner YES_BOUNDED, isofibration NO"};
}

}  // namespace

std::vector<std::string> acceptance_tags() {
    return {"join-laws",          "level-counts",     "ez-discipline",
            "qcat-detection",     "spine-anodyne",    "absolute-wce",
            "right-cancellation", "cylinder-tfae",    "inner-to-trivial",
            "adjunctions",        "duality",          "collage-ambifibrancy",
            "change-of-base",     "interval-groupoid"};
}

SuiteReport run_acceptance_suite(const RunConfig& config, const std::string& only_tag) {
    using Fn = Outcome (*)(const RunConfig&, SplitMix64&);
    const std::vector<std::pair<std::string, Fn>> battery = {
        {"join-laws", join_laws},
        {"level-counts", level_counts},
        {"ez-discipline", ez_discipline},
        {"qcat-detection", qcat_detection},
        {"spine-anodyne", spine_anodyne},
        {"absolute-wce", absolute_wce},
        {"right-cancellation", right_cancellation},
        {"cylinder-tfae", cylinder_tfae},
        {"inner-to-trivial", inner_to_trivial},
        {"adjunctions", adjunctions},
        {"duality", duality},
        {"collage-ambifibrancy", collage_ambifibrancy},
        {"change-of-base", change_of_base},
        {"interval-groupoid", interval_groupoid},
    };
    SuiteReport report;
    report.config = config;
    report.all_pass = true;
    int index = 0;
    for (const auto& [tag, fn] : battery) {
        ++index;
        if (!only_tag.empty() && only_tag != tag) continue;
        SplitMix64 rng(config.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index));
        CriterionResult r;
        r.index = index;
        r.tag = tag;
        try {
            Outcome out = fn(config, rng);
            r.pass = out.pass;
            r.detail = out.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report.all_pass = report.all_pass && r.pass;
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace cylkit
