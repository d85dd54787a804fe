#include "skewcat/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace skewcat {

namespace {

using json = nlohmann::ordered_json;

void only_keys(const json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
               const char* where) {
    if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
    std::set<std::string> allowed;
    for (auto k : required) {
        if (!j.contains(k)) throw ParseError(std::string(where) + ": missing key \"" + k + "\"");
        allowed.insert(k);
    }
    for (auto k : optional) allowed.insert(k);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ParseError(std::string(where) + ": unknown key \"" + it.key() + "\"");
}

std::string str(const json& j, const char* where) {
    if (!j.is_string()) throw ParseError(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

const json& arr(const json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
    return j;
}

std::vector<std::string> str_list(const json& j, const char* where) {
    std::vector<std::string> out;
    for (auto& e : arr(j, where)) out.push_back(str(e, where));
    return out;
}

template <size_t K>
std::array<std::string, K> str_tuple(const json& j, const char* where) {
    if (!j.is_array() || j.size() != K)
        throw ParseError(std::string(where) + ": expected an array of " + std::to_string(K) + " strings");
    std::array<std::string, K> out;
    for (size_t i = 0; i < K; ++i) out[i] = str(j[i], where);
    return out;
}

CategoryData category_from(const json& j) {
    only_keys(j, {"objects", "morphisms", "identities", "compose"}, {}, "category");
    CategoryData d;
    d.objects = str_list(j["objects"], "objects");
    for (auto& m : arr(j["morphisms"], "morphisms")) {
        only_keys(m, {"id", "src", "tgt"}, {}, "morphism");
        d.morphisms.push_back({str(m["id"], "id"), str(m["src"], "src"), str(m["tgt"], "tgt")});
    }
    const json& ids = j["identities"];
    if (!ids.is_object()) throw ParseError("identities: expected an object");
    for (auto it = ids.begin(); it != ids.end(); ++it) d.identities[it.key()] = str(it.value(), "identities");
    for (auto& c : arr(j["compose"], "compose")) {
        only_keys(c, {"g", "f", "gf"}, {}, "compose");
        d.compose.push_back({str(c["g"], "g"), str(c["f"], "f"), str(c["gf"], "gf")});
    }
    return d;
}

SkewMonoidalData skew_from(const json& j) {
    only_keys(j, {"category", "tensor", "unit", "alpha", "lambda", "rho"}, {}, "skew monoidal");
    SkewMonoidalData d;
    d.category = category_from(j["category"]);
    only_keys(j["tensor"], {"objects", "morphisms"}, {}, "tensor");
    for (auto& e : arr(j["tensor"]["objects"], "tensor.objects")) d.tensor_objects.push_back(str_tuple<3>(e, "tensor.objects"));
    for (auto& e : arr(j["tensor"]["morphisms"], "tensor.morphisms"))
        d.tensor_morphisms.push_back(str_tuple<3>(e, "tensor.morphisms"));
    d.unit = str(j["unit"], "unit");
    for (auto& e : arr(j["alpha"], "alpha")) d.alpha.push_back(str_tuple<4>(e, "alpha"));
    for (auto& e : arr(j["lambda"], "lambda")) d.lambda.push_back(str_tuple<2>(e, "lambda"));
    for (auto& e : arr(j["rho"], "rho")) d.rho.push_back(str_tuple<2>(e, "rho"));
    return d;
}

int object_id(const TMulticategory& m, const json& j) {
    auto name = str(j, "object");
    int a = m.find_object(name);
    if (a < 0) throw StructuralError("unknown object " + name);
    return a;
}

int map_id(const TMulticategory& m, const json& j) {
    auto name = str(j, "map");
    int f = m.find_map(name);
    if (f < 0) throw StructuralError("unknown multimap " + name);
    return f;
}

std::vector<int> object_ids(const TMulticategory& m, const json& j) {
    std::vector<int> out;
    for (auto& e : arr(j, "inputs")) out.push_back(object_id(m, e));
    return out;
}

// lambda of component(n) for R and L, -1 for operads without it.
int lambda_mor(const CatOperad& op, int n) {
    if (n < 1 || op.name() == "N") return -1;
    return op.component(n).find_morphism("lambda");
}

MulticatPtr multicat_from(const json& j) {
    only_keys(j, {"operad", "max_arity", "objects", "homs", "identities"}, {"action", "subst"}, "multicategory");
    auto op = operad_by_name(str(j["operad"], "operad"));
    if (!op) throw ParseError("operad: expected \"N\", \"R\" or \"L\"");
    if (!j["max_arity"].is_number_integer()) throw ParseError("max_arity: expected an integer");
    int max_arity = j["max_arity"].get<int>();
    auto m = std::make_shared<TMulticategory>(op, str_list(j["objects"], "objects"), max_arity);

    for (auto& h : arr(j["homs"], "homs")) {
        only_keys(h, {"inputs", "output", "maps"}, {"x"}, "hom");
        auto inputs = object_ids(*m, h["inputs"]);
        int n = static_cast<int>(inputs.size());
        if (n > max_arity) throw StructuralError("hom of arity " + std::to_string(n) + " above max_arity");
        int x = 0;
        if (h.contains("x")) {
            auto xn = str(h["x"], "x");
            x = op->object(n, xn);
            if (x < 0) throw StructuralError("no object " + xn + " in operad component " + std::to_string(n));
        } else if (op->component(n).num_objects() != 1) {
            throw ParseError("hom: \"x\" is required for this operad");
        }
        int hi = m->hom_index(x, inputs, object_id(*m, h["output"]));
        for (auto& name : str_list(h["maps"], "maps")) m->add_map(hi, name);
    }

    const json& ids = j["identities"];
    if (!ids.is_object()) throw ParseError("identities: expected an object");
    for (auto it = ids.begin(); it != ids.end(); ++it) {
        int a = m->find_object(it.key());
        if (a < 0) throw StructuralError("identity for unknown object " + it.key());
        m->set_identity(a, map_id(*m, it.value()));
    }

    if (j.contains("action")) {
        for (auto& e : arr(j["action"], "action")) {
            only_keys(e, {"n", "inputs", "output", "map_t", "map_l"}, {}, "action");
            auto inputs = object_ids(*m, e["inputs"]);
            int n = static_cast<int>(inputs.size());
            if (!e["n"].is_number_integer() || e["n"].get<int>() != n) throw ParseError("action: n does not match inputs");
            int out = object_id(*m, e["output"]);
            int lam = lambda_mor(*op, n);
            if (lam < 0) throw StructuralError("operad " + op->name() + " has no action in arity " + std::to_string(n));
            int ft = map_id(*m, e["map_t"]), fl = map_id(*m, e["map_l"]);
            int ht = m->hom_index(op->object(n, "t"), inputs, out), hl = m->hom_index(op->object(n, "l"), inputs, out);
            if (m->map_hom(ft) != ht || m->map_hom(fl) != hl)
                throw StructuralError("action entry " + m->map_name(ft) + " -> " + m->map_name(fl) + " has the wrong homs");
            if (op->name() == "R")
                m->set_action(lam, ft, fl);
            else
                m->set_action(lam, fl, ft);
        }
    }

    if (j.contains("subst")) {
        for (auto& e : arr(j["subst"], "subst")) {
            only_keys(e, {"outer", "inners", "result"}, {}, "subst");
            int g = map_id(*m, e["outer"]);
            std::vector<int> fs;
            for (auto& f : arr(e["inners"], "inners")) fs.push_back(map_id(*m, f));
            m->set_subst(g, fs, map_id(*m, e["result"]));
        }
    }
    return m;
}

json category_json(const FinCategory& c) {
    auto d = c.to_data();
    json j;
    j["objects"] = d.objects;
    j["morphisms"] = json::array();
    for (auto& m : d.morphisms) j["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
    j["identities"] = json::object();
    for (auto& o : d.objects) j["identities"][o] = d.identities.at(o);
    j["compose"] = json::array();
    for (auto& c2 : d.compose) j["compose"].push_back({{"g", c2.g}, {"f", c2.f}, {"gf", c2.gf}});
    return j;
}

json names(const TMulticategory& m, std::span<const int> objs) {
    json a = json::array();
    for (int o : objs) a.push_back(m.object_name(o));
    return a;
}

}  // namespace

const char* schema_name(SchemaKind k) {
    switch (k) {
        case SchemaKind::Category: return "category";
        case SchemaKind::SkewMonoidal: return "skew_monoidal";
        case SchemaKind::Multicat: return "multicategory";
    }
    return "";
}

ParsedInput parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level: expected an object");
    ParsedInput p;
    try {
        if (j.contains("operad")) {
            p.kind = SchemaKind::Multicat;
            p.multicat = multicat_from(j);
        } else if (j.contains("category")) {
            p.kind = SchemaKind::SkewMonoidal;
            p.skew = std::make_shared<SkewMonoidalCategory>(SkewMonoidalCategory::from_data(skew_from(j)));
            p.category = p.skew->base;
        } else if (j.contains("morphisms")) {
            p.kind = SchemaKind::Category;
            p.category = std::make_shared<FinCategory>(FinCategory::from_data(category_from(j)));
        } else {
            throw ParseError("top level: not a category, skew monoidal category or multicategory");
        }
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    return p;
}

CategoryData category_data_from_json(const std::string& text) {
    try {
        return category_from(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string category_to_json(const FinCategory& c) { return category_json(c).dump(2); }

std::string skew_to_json(const SkewMonoidalCategory& c) {
    auto d = c.to_data();
    json j;
    j["category"] = category_json(*c.base);
    j["tensor"]["objects"] = d.tensor_objects;
    j["tensor"]["morphisms"] = d.tensor_morphisms;
    j["unit"] = d.unit;
    j["alpha"] = d.alpha;
    j["lambda"] = d.lambda;
    j["rho"] = d.rho;
    return j.dump(2);
}

std::string multicat_to_json(const TMulticategory& m) {
    const CatOperad& op = m.operad();
    json j;
    j["operad"] = op.name();
    j["max_arity"] = m.max_arity();
    j["objects"] = m.objects();
    j["homs"] = json::array();
    for (int h = 0; h < m.hom_count(); ++h) {
        if (m.maps_in(h).empty()) continue;
        auto k = m.hom_key(h);
        json e;
        e["x"] = op.component(k.arity()).object_name(k.x);
        e["inputs"] = names(m, k.inputs);
        e["output"] = m.object_name(k.output);
        e["maps"] = json::array();
        for (int f : m.maps_in(h)) e["maps"].push_back(m.map_name(f));
        j["homs"].push_back(std::move(e));
    }
    j["identities"] = json::object();
    for (int a = 0; a < m.num_objects(); ++a)
        if (m.identity(a) >= 0) j["identities"][m.object_name(a)] = m.map_name(m.identity(a));
    // Maps in hom order, so the output does not depend on how map ids were assigned.
    std::vector<int> order, rank(m.map_count());
    for (int h = 0; h < m.hom_count(); ++h)
        for (int f : m.maps_in(h)) {
            rank[f] = static_cast<int>(order.size());
            order.push_back(f);
        }
    j["action"] = json::array();
    for (int f : order) {
        int n = m.map_arity(f);
        int lam = lambda_mor(op, n);
        if (lam < 0 || op.component(n).src(lam) != m.hom_x(m.map_hom(f))) continue;
        int r = m.act(lam, f);
        if (r < 0) continue;
        auto k = m.hom_key(m.map_hom(f));
        bool r_side = op.name() == "R";
        j["action"].push_back({{"n", n},
                               {"inputs", names(m, k.inputs)},
                               {"output", m.object_name(k.output)},
                               {"map_t", m.map_name(r_side ? f : r)},
                               {"map_l", m.map_name(r_side ? r : f)}});
    }
    j["subst"] = json::array();
    std::vector<std::vector<int>> entries;
    m.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        int r = m.subst(g, fs);
        if (r < 0) return;
        std::vector<int> e{rank[g]};
        for (int f : fs) e.push_back(rank[f]);
        e.push_back(r);
        entries.push_back(std::move(e));
    });
    std::sort(entries.begin(), entries.end());
    for (auto& e : entries) {
        json inners = json::array();
        for (size_t i = 1; i + 1 < e.size(); ++i) inners.push_back(m.map_name(order[e[i]]));
        j["subst"].push_back(
            {{"outer", m.map_name(order[e[0]])}, {"inners", std::move(inners)}, {"result", m.map_name(e.back())}});
    }
    return j.dump(2);
}

std::string colax_to_json(const NormalColaxAlgebra& a) {
    const auto& C = *a.base;
    const auto& op = *a.operad;
    json j;
    j["operad"] = op.name();
    j["max_arity"] = a.max_arity;
    j["base"] = category_json(C);
    auto obj_names = [&](const std::vector<int>& v) {
        json out = json::array();
        for (int o : v) out.push_back(C.object_name(o));
        return out;
    };
    auto mor_names = [&](const std::vector<int>& v) {
        json out = json::array();
        for (int f : v) out.push_back(f < 0 ? json(nullptr) : json(C.morphism_name(f)));
        return out;
    };
    j["m"] = json::array();
    for (int n = 0; n < static_cast<int>(a.m.size()); ++n)
        for (int x = 0; x < static_cast<int>(a.m[n].size()); ++x)
            j["m"].push_back({{"n", n},
                              {"x", op.component(n).object_name(x)},
                              {"objects", obj_names(a.m[n][x].obj)},
                              {"morphisms", mor_names(a.m[n][x].mor)}});
    j["m_sigma"] = json::array();
    for (int n = 0; n < static_cast<int>(a.m_sigma.size()); ++n)
        for (int s = 0; s < static_cast<int>(a.m_sigma[n].size()); ++s)
            if (!a.m_sigma[n][s].empty())
                j["m_sigma"].push_back(
                    {{"n", n}, {"sigma", op.component(n).morphism_name(s)}, {"components", mor_names(a.m_sigma[n][s])}});
    j["gamma"] = json::array();
    for (auto& [key, comps] : a.gamma) {
        int n = key[0];
        json ks = json::array(), xs = json::array();
        for (int i = 0; i < n; ++i) {
            ks.push_back(key[2 + i]);
            xs.push_back(op.component(key[2 + i]).object_name(key[2 + n + i]));
        }
        j["gamma"].push_back({{"x", op.component(n).object_name(key[1])},
                              {"ks", std::move(ks)},
                              {"xs", std::move(xs)},
                              {"components", mor_names(comps)}});
    }
    return j.dump(2);
}

std::string report_to_json(SchemaKind kind, const Report& r, int checked_up_to_arity) {
    json j;
    j["schema"] = schema_name(kind);
    j["ok"] = r.empty();
    j["violations"] = json::array();
    for (auto& v : r) j["violations"].push_back({{"law", v.law}, {"detail", v.detail}});
    if (checked_up_to_arity >= 0) j["checked_up_to_arity"] = checked_up_to_arity;
    return j.dump(2);
}

}  // namespace skewcat
