// Serializers and loaders for the v1 JSON formats.  Loading always goes
// through the validating constructors (build, make_map, make_profunctor,
// validate_cylinder), so a malformed file cannot produce an inconsistent
// in-memory object.
#include "cylkit/json_io.hpp"

#include <fstream>
#include <utility>

#include "cylkit/standard.hpp"

namespace cylkit {

namespace {

void require_format(const Json& j, const std::string& tag) {
    if (!j.is_object() || !j.contains("format") || j.at("format") != tag)
        throw JsonError("expected a \"" + tag + "\" document");
}

std::vector<int> word_from(const Json& j) {
    std::vector<int> w;
    for (const auto& v : j) w.push_back(v.get<int>());
    return w;
}

Json assignment_to_json(const SimplicialMap& f) {
    Json arr = Json::array();
    const SSetPtr& src = f.source();
    const SSetPtr& dst = f.target();
    for (int d = 0; d <= src->dimension(); ++d)
        for (int i = 0; i < src->gen_count(d); ++i) {
            const Simplex& img = f.gen_image(GenId{d, i});
            Json entry;
            entry["of"] = src->gen_name(GenId{d, i});
            entry["word"] = img.word;
            entry["target"] = dst->gen_name(img.gen);
            arr.push_back(std::move(entry));
        }
    return arr;
}

SimplicialMap assignment_from_json(const Json& arr, SSetPtr source, SSetPtr target,
                                   bool nerve_map) {
    std::map<std::string, std::pair<std::vector<int>, std::string>> images;
    for (const auto& entry : arr) {
        std::string of = entry.at("of").get<std::string>();
        if (images.count(of)) throw JsonError("duplicate assignment for generator " + of);
        images[of] = {word_from(entry.at("word")), entry.at("target").get<std::string>()};
    }
    return make_map_by_names(std::move(source), std::move(target), images, nerve_map);
}

}  // namespace

Json sset_to_json(const SSetPtr& x) {
    Json j;
    j["format"] = "sset/v1";
    j["name"] = x->name();
    Json gens = Json::array();
    for (int d = 0; d <= x->dimension(); ++d) {
        Json level = Json::array();
        for (int i = 0; i < x->gen_count(d); ++i) level.push_back(x->gen_name(GenId{d, i}));
        gens.push_back(std::move(level));
    }
    j["generators"] = std::move(gens);
    Json faces = Json::object();
    for (int d = 1; d <= x->dimension(); ++d)
        for (int i = 0; i < x->gen_count(d); ++i) {
            Json lst = Json::array();
            for (int k = 0; k <= d; ++k) {
                const Simplex& f = x->gen_face(GenId{d, i}, k);
                Json entry;
                entry["word"] = f.word;
                entry["target"] = x->gen_name(f.gen);
                lst.push_back(std::move(entry));
            }
            faces[x->gen_name(GenId{d, i})] = std::move(lst);
        }
    j["faces"] = std::move(faces);
    return j;
}

SSetPtr sset_from_json(const Json& j) try {
    require_format(j, "sset/v1");
    std::vector<std::vector<GenSpec>> gens;
    const Json& levels = j.at("generators");
    const Json& faces = j.at("faces");
    for (std::size_t d = 0; d < levels.size(); ++d) {
        std::vector<GenSpec> level;
        for (const auto& nm : levels[d]) {
            GenSpec g;
            g.name = nm.get<std::string>();
            if (d > 0) {
                const Json& lst = faces.at(g.name);
                if (lst.size() != d + 1)
                    throw JsonError("generator " + g.name + " needs " +
                                    std::to_string(d + 1) + " faces");
                for (const auto& entry : lst)
                    g.faces.push_back(
                        FaceRef{word_from(entry.at("word")), entry.at("target").get<std::string>()});
            }
            level.push_back(std::move(g));
        }
        gens.push_back(std::move(level));
    }
    return FiniteSimplicialSet::build(j.at("name").get<std::string>(), std::move(gens));
} catch (const Json::exception& e) {
    throw JsonError(std::string("sset/v1: ") + e.what());
}

Json map_to_json(const SimplicialMap& f) {
    Json j;
    j["format"] = "map/v1";
    j["source"] = sset_to_json(f.source());
    j["target"] = sset_to_json(f.target());
    if (f.is_nerve_map()) j["nerve_map"] = true;
    j["assignment"] = assignment_to_json(f);
    return j;
}

SimplicialMap map_from_json(const Json& j) try {
    require_format(j, "map/v1");
    SSetPtr src = sset_from_json(j.at("source"));
    SSetPtr dst = sset_from_json(j.at("target"));
    bool nerve = j.value("nerve_map", false);
    return assignment_from_json(j.at("assignment"), std::move(src), std::move(dst), nerve);
} catch (const Json::exception& e) {
    throw JsonError(std::string("map/v1: ") + e.what());
}

Json cylinder_to_json(const Cylinder& x) {
    Json j;
    j["format"] = "cyl/v1";
    j["total"] = sset_to_json(x.total);
    j["a"] = sset_to_json(x.a());
    j["b"] = sset_to_json(x.b());
    j["structure"] = assignment_to_json(x.structure);
    j["incl_a"] = assignment_to_json(x.incl_a);
    j["incl_b"] = assignment_to_json(x.incl_b);
    return j;
}

Cylinder cylinder_from_json(const Json& j) try {
    require_format(j, "cyl/v1");
    SSetPtr total = sset_from_json(j.at("total"));
    SSetPtr a = sset_from_json(j.at("a"));
    SSetPtr b = sset_from_json(j.at("b"));
    SSetPtr d1 = std_simplex(1);
    SimplicialMap structure = assignment_from_json(j.at("structure"), total, d1, false);
    SimplicialMap incl_a = assignment_from_json(j.at("incl_a"), a, total, false);
    SimplicialMap incl_b = assignment_from_json(j.at("incl_b"), b, total, false);
    return make_cylinder(structure, incl_a, incl_b);
} catch (const Json::exception& e) {
    throw JsonError(std::string("cyl/v1: ") + e.what());
}

Json category_to_json(const CategoryPtr& c) {
    Json j;
    j["format"] = "cat/v1";
    j["name"] = c->name();
    j["objects"] = c->objects();
    Json mors = Json::array();
    std::map<std::pair<std::string, std::string>, std::string> comp;
    for (const MorSpec& m : c->morphisms()) {
        Json entry;
        entry["id"] = m.id;
        entry["src"] = m.src;
        entry["dst"] = m.dst;
        mors.push_back(std::move(entry));
        for (const MorSpec& f : c->morphisms())
            if (f.dst == m.src) comp[{m.id, f.id}] = c->compose(m.id, f.id);
    }
    j["morphisms"] = std::move(mors);
    Json comps = Json::array();
    for (const auto& [pair, to] : comp) {
        Json entry;
        entry["g"] = pair.first;
        entry["f"] = pair.second;
        entry["to"] = to;
        comps.push_back(std::move(entry));
    }
    j["composition"] = std::move(comps);
    Json ident = Json::object();
    for (const std::string& o : c->objects()) ident[o] = c->identity_of(o);
    j["identities"] = std::move(ident);
    return j;
}

CategoryPtr category_from_json(const Json& j) try {
    require_format(j, "cat/v1");
    std::vector<std::string> objects;
    for (const auto& o : j.at("objects")) objects.push_back(o.get<std::string>());
    std::vector<MorSpec> mors;
    for (const auto& m : j.at("morphisms"))
        mors.push_back(MorSpec{m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                               m.at("dst").get<std::string>()});
    std::map<std::pair<std::string, std::string>, std::string> comp;
    for (const auto& entry : j.at("composition"))
        comp[{entry.at("g").get<std::string>(), entry.at("f").get<std::string>()}] =
            entry.at("to").get<std::string>();
    std::map<std::string, std::string> ident;
    for (const auto& [obj, id] : j.at("identities").items()) ident[obj] = id.get<std::string>();
    return FiniteCategory::build(j.at("name").get<std::string>(), std::move(objects),
                                 std::move(mors), std::move(comp), std::move(ident));
} catch (const Json::exception& e) {
    throw JsonError(std::string("cat/v1: ") + e.what());
}

Json profunctor_to_json(const Profunctor& m) {
    Json j;
    j["format"] = "prof/v1";
    j["source"] = category_to_json(m.source);
    j["target"] = category_to_json(m.target);
    Json values = Json::array();
    for (const auto& [pair, elems] : m.values) {
        Json entry;
        entry["a"] = pair.first;
        entry["b"] = pair.second;
        entry["elements"] = elems;
        values.push_back(std::move(entry));
    }
    j["values"] = std::move(values);
    auto action_json = [](const std::map<std::pair<std::string, std::string>, std::string>& act) {
        Json arr = Json::array();
        for (const auto& [key, to] : act) {
            Json entry;
            entry["mor"] = key.first;
            entry["elem"] = key.second;
            entry["to"] = to;
            arr.push_back(std::move(entry));
        }
        return arr;
    };
    j["left_action"] = action_json(m.left_action);
    j["right_action"] = action_json(m.right_action);
    return j;
}

Profunctor profunctor_from_json(const Json& j) {
    require_format(j, "prof/v1");
    CategoryPtr src = category_from_json(j.at("source"));
    CategoryPtr dst = category_from_json(j.at("target"));
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> values;
    for (const auto& entry : j.at("values")) {
        std::vector<std::string> elems;
        for (const auto& e : entry.at("elements")) elems.push_back(e.get<std::string>());
        values[{entry.at("a").get<std::string>(), entry.at("b").get<std::string>()}] =
            std::move(elems);
    }
    auto action_from = [](const Json& arr) {
        std::map<std::pair<std::string, std::string>, std::string> act;
        for (const auto& entry : arr)
            act[{entry.at("mor").get<std::string>(), entry.at("elem").get<std::string>()}] =
                entry.at("to").get<std::string>();
        return act;
    };
    return make_profunctor(std::move(src), std::move(dst), std::move(values),
                           action_from(j.at("left_action")), action_from(j.at("right_action")));
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.cutoff) j["cutoff"] = *v.cutoff;
    j["detail"] = v.detail;
    j["nodes"] = v.nodes;
    j["squares"] = v.squares;
    return j;
}

Json config_to_json(const RunConfig& c) {
    Json j;
    j["max_dim"] = c.max_dim;
    j["stage_budget"] = c.stage_budget;
    j["truncation"] = c.truncation;
    j["seed"] = c.seed;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw JsonError(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

}  // namespace cylkit
