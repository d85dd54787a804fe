#include "skewcat/skewcat.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "json.hpp"
#include "skewcat/correspondence.hpp"
#include "skewcat/json_io.hpp"

using namespace skewcat;
using json = nlohmann::ordered_json;

struct skewcat_structure {
    ParsedInput p;
};

namespace {

thread_local std::string g_error;

constexpr int kMaxArityCap = 6;

skewcat_status fail(skewcat_status s, std::string msg) {
    g_error = std::move(msg);
    return s;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
skewcat_status guard(F&& f) {
    g_error.clear();
    try {
        return f();
    } catch (const ParseError& e) {
        return fail(SKEWCAT_INPUT_ERROR, e.what());
    } catch (const StructuralError& e) {
        return fail(SKEWCAT_INPUT_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SKEWCAT_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(SKEWCAT_INTERNAL_ERROR, e.what());
    }
}

skewcat_structure* wrap_skew(SkewPtr s) {
    auto* h = new skewcat_structure;
    h->p.kind = SchemaKind::SkewMonoidal;
    h->p.category = s->base;
    h->p.skew = std::move(s);
    return h;
}

skewcat_structure* wrap_multicat(MulticatPtr m) {
    auto* h = new skewcat_structure;
    h->p.kind = SchemaKind::Multicat;
    h->p.multicat = std::move(m);
    return h;
}

Report check_of(const ParsedInput& p) {
    switch (p.kind) {
        case SchemaKind::Category: return check_category(*p.category);
        case SchemaKind::SkewMonoidal: return check_skew_monoidal(*p.skew);
        case SchemaKind::Multicat: return check_tmulticat(*p.multicat);
    }
    return {};
}

std::string report_of(const ParsedInput& p, const Report& r) {
    return report_to_json(p.kind, r, p.kind == SchemaKind::Multicat ? p.multicat->max_arity() : -1);
}

bool arity_ok(int k) { return k >= 1 && k <= kMaxArityCap; }

// Multicategory-side entry points need a valid multicategory over R.
skewcat_status require_skew_multicat(const ParsedInput& p) {
    if (p.kind != SchemaKind::Multicat) return fail(SKEWCAT_INPUT_ERROR, "expected a multicategory");
    if (p.multicat->operad().name() != "R") return fail(SKEWCAT_INPUT_ERROR, "expected a multicategory over R");
    return SKEWCAT_OK;
}

// Nothing when the multicategory is left representable; otherwise the failure document.
std::optional<std::string> representability_failure(const MulticatPtr& s) {
    auto weak = weak_representability(s);
    json j;
    j["converted"] = false;
    if (!weak.holds) {
        j["reason"] = "no universal multimap for " + weak.failure;
        j["missing_classifier"] = weak.failure;
    } else if (!is_left_representable(s)) {
        j["reason"] = "weakly but not left representable";
    } else if (s->max_arity() < 3) {
        j["reason"] = "truncated below arity 3";
    } else {
        return std::nullopt;
    }
    j["analysis"] = json::parse(analyze_json(s));
    return j.dump(2);
}

json names_map(const std::vector<int>& m, auto src_name, auto tgt_name) {
    json j = json::object();
    for (size_t i = 0; i < m.size(); ++i) j[src_name(static_cast<int>(i))] = m[i] < 0 ? json(nullptr) : json(tgt_name(m[i]));
    return j;
}

json lax_json(const LaxMonoidalFunctor& f) {
    const auto& S = *f.source->base;
    const auto& T = *f.target->base;
    auto on = [&](int a) { return S.object_name(a); };
    auto om = [&](int g) { return S.morphism_name(g); };
    auto tn = [&](int a) { return T.object_name(a); };
    auto tm = [&](int g) { return T.morphism_name(g); };
    json j;
    j["objects"] = names_map(f.obj_map, on, tn);
    j["morphisms"] = names_map(f.mor_map, om, tm);
    j["f2"] = json::array();
    const int N = S.num_objects();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) j["f2"].push_back({on(a), on(b), tm(f.f2[a * N + b])});
    j["f0"] = tm(f.f0);
    return j;
}

json morphism_json(const MulticatMorphism& f) {
    const auto& S = *f.source;
    const auto& T = *f.target;
    json j;
    j["objects"] = names_map(f.obj_map, [&](int a) { return S.object_name(a); }, [&](int a) { return T.object_name(a); });
    j["maps"] = names_map(f.map_map, [&](int m) { return S.map_name(m); }, [&](int m) { return T.map_name(m); });
    return j;
}

}  // namespace

extern "C" {

const char* skewcat_version(void) { return "1.0.0"; }

const char* skewcat_last_error(void) { return g_error.c_str(); }

void skewcat_string_free(char* s) { std::free(s); }

skewcat_status skewcat_parse(const char* text, skewcat_structure** out) {
    if (!text || !out) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    *out = nullptr;
    return guard([&] {
        auto* h = new skewcat_structure;
        try {
            h->p = parse_input(text);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return SKEWCAT_OK;
    });
}

void skewcat_free(skewcat_structure* h) { delete h; }

skewcat_kind skewcat_kind_of(const skewcat_structure* h) {
    switch (h->p.kind) {
        case SchemaKind::Category: return SKEWCAT_CATEGORY;
        case SchemaKind::SkewMonoidal: return SKEWCAT_SKEW_MONOIDAL;
        case SchemaKind::Multicat: return SKEWCAT_MULTICATEGORY;
    }
    return SKEWCAT_CATEGORY;
}

int skewcat_max_arity(const skewcat_structure* h) {
    return h && h->p.kind == SchemaKind::Multicat ? h->p.multicat->max_arity() : -1;
}

skewcat_status skewcat_to_json(const skewcat_structure* h, char** out) {
    if (!h || !out) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    return guard([&] {
        switch (h->p.kind) {
            case SchemaKind::Category: *out = dup(category_to_json(*h->p.category)); break;
            case SchemaKind::SkewMonoidal: *out = dup(skew_to_json(*h->p.skew)); break;
            case SchemaKind::Multicat: *out = dup(multicat_to_json(*h->p.multicat)); break;
        }
        return SKEWCAT_OK;
    });
}

skewcat_status skewcat_check(const skewcat_structure* h, char** report) {
    if (!h || !report) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    return guard([&] {
        auto r = check_of(h->p);
        *report = dup(report_of(h->p, r));
        return r.empty() ? SKEWCAT_OK : fail(SKEWCAT_FAILED, "law violations");
    });
}

skewcat_status skewcat_analyze(const skewcat_structure* h, int max_arity, char** report) {
    if (!h || !report) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    if (!arity_ok(max_arity)) return fail(SKEWCAT_BAD_ARGUMENT, "max_arity out of range");
    return guard([&] {
        *report = nullptr;
        MulticatPtr s;
        if (h->p.kind == SchemaKind::SkewMonoidal) {
            auto r = check_of(h->p);
            if (!r.empty()) {
                *report = dup(report_of(h->p, r));
                return fail(SKEWCAT_FAILED, "input fails its axioms");
            }
            s = monoidal_to_multicat(*h->p.skew, max_arity);
        } else {
            if (auto st = require_skew_multicat(h->p); st != SKEWCAT_OK) return st;
            auto r = check_of(h->p);
            if (!r.empty()) {
                *report = dup(report_of(h->p, r));
                return fail(SKEWCAT_FAILED, "input fails its axioms");
            }
            s = h->p.multicat;
        }
        *report = dup(analyze_json(s));
        return SKEWCAT_OK;
    });
}

skewcat_status skewcat_convert(const skewcat_structure* h, skewcat_kind to, int max_arity, skewcat_structure** out,
                               char** failure) {
    if (!h || !out || !failure) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    if (!arity_ok(max_arity)) return fail(SKEWCAT_BAD_ARGUMENT, "max_arity out of range");
    *out = nullptr;
    *failure = nullptr;
    return guard([&] {
        auto r = check_of(h->p);
        if (to == SKEWCAT_MULTICATEGORY) {
            if (h->p.kind != SchemaKind::SkewMonoidal)
                return fail(SKEWCAT_INPUT_ERROR, "conversion to a multicategory needs a skew monoidal category");
            if (!r.empty()) {
                *failure = dup(report_of(h->p, r));
                return fail(SKEWCAT_FAILED, "input fails its axioms");
            }
            *out = wrap_multicat(monoidal_to_multicat(*h->p.skew, max_arity));
            return SKEWCAT_OK;
        }
        if (to != SKEWCAT_SKEW_MONOIDAL) return fail(SKEWCAT_BAD_ARGUMENT, "unsupported target");
        if (auto st = require_skew_multicat(h->p); st != SKEWCAT_OK) return st;
        if (!r.empty()) {
            *failure = dup(report_of(h->p, r));
            return fail(SKEWCAT_FAILED, "input fails its axioms");
        }
        if (auto why = representability_failure(h->p.multicat)) {
            *failure = dup(*why);
            return fail(SKEWCAT_FAILED, "not left representable");
        }
        *out = wrap_skew(std::make_shared<SkewMonoidalCategory>(multicat_to_monoidal(h->p.multicat)));
        return SKEWCAT_OK;
    });
}

skewcat_status skewcat_roundtrip(const skewcat_structure* h, int max_arity, char** verdict) {
    if (!h || !verdict) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    if (!arity_ok(max_arity) || max_arity < 3) return fail(SKEWCAT_BAD_ARGUMENT, "max_arity must be between 3 and 6");
    *verdict = nullptr;
    return guard([&] {
        if (h->p.kind == SchemaKind::Category)
            return fail(SKEWCAT_INPUT_ERROR, "roundtrip needs a skew monoidal category or a multicategory");
        if (h->p.kind == SchemaKind::Multicat)
            if (auto st = require_skew_multicat(h->p); st != SKEWCAT_OK) return st;
        auto r = check_of(h->p);
        if (!r.empty()) {
            *verdict = dup(report_of(h->p, r));
            return fail(SKEWCAT_FAILED, "input fails its axioms");
        }
        json j;
        j["schema"] = schema_name(h->p.kind);
        bool iso = false;
        if (h->p.kind == SchemaKind::SkewMonoidal) {
            j["checked_up_to_arity"] = max_arity;
            auto rt = roundtrip_monoidal(h->p.skew, max_arity);
            iso = rt.iso.has_value();
            j["isomorphic"] = iso;
            if (iso) {
                j["forward"] = lax_json(rt.iso->first);
                j["backward"] = lax_json(rt.iso->second);
            }
        } else {
            j["checked_up_to_arity"] = h->p.multicat->max_arity();
            if (auto why = representability_failure(h->p.multicat)) {
                *verdict = dup(*why);
                return fail(SKEWCAT_FAILED, "not left representable");
            }
            auto rt = roundtrip_multicat(h->p.multicat);
            iso = rt.iso.has_value();
            j["isomorphic"] = iso;
            if (iso) {
                j["forward"] = morphism_json(rt.iso->first);
                j["backward"] = morphism_json(rt.iso->second);
            }
        }
        *verdict = dup(j.dump(2));
        return iso ? SKEWCAT_OK : fail(SKEWCAT_FAILED, "no isomorphism after the round trip");
    });
}

skewcat_status skewcat_classify(const skewcat_structure* h, int max_arity, char** report) {
    if (!h || !report) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    if (!arity_ok(max_arity) || max_arity < 3) return fail(SKEWCAT_BAD_ARGUMENT, "max_arity must be between 3 and 6");
    *report = nullptr;
    return guard([&] {
        if (h->p.kind == SchemaKind::Category)
            return fail(SKEWCAT_INPUT_ERROR, "classify needs a skew monoidal category or a multicategory");
        if (h->p.kind == SchemaKind::Multicat)
            if (auto st = require_skew_multicat(h->p); st != SKEWCAT_OK) return st;
        auto r = check_of(h->p);
        if (!r.empty()) {
            *report = dup(report_of(h->p, r));
            return fail(SKEWCAT_FAILED, "input fails its axioms");
        }
        Classification c;
        if (h->p.kind == SchemaKind::SkewMonoidal) {
            c = classify(*h->p.skew, max_arity);
        } else {
            if (auto why = representability_failure(h->p.multicat)) {
                *report = dup(*why);
                return fail(SKEWCAT_FAILED, "not left representable");
            }
            c = classify(h->p.multicat);
        }
        *report = dup(classification_json(c));
        return c.agree() ? SKEWCAT_OK : fail(SKEWCAT_FAILED, "the two sides disagree");
    });
}

skewcat_status skewcat_search(const skewcat_structure* category, int threads, skewcat_structure*** out,
                              size_t* count) {
    if (!category || !out || !count) return fail(SKEWCAT_BAD_ARGUMENT, "null argument");
    *out = nullptr;
    *count = 0;
    return guard([&] {
        if (category->p.kind != SchemaKind::Category) return fail(SKEWCAT_INPUT_ERROR, "search needs a category");
        auto r = check_category(*category->p.category);
        if (!r.empty()) return fail(SKEWCAT_FAILED, "the category fails its axioms");
        auto found = search_skew_monoidal(category->p.category, threads);
        auto** arr = static_cast<skewcat_structure**>(std::calloc(found.size() + 1, sizeof(skewcat_structure*)));
        if (!arr) throw std::bad_alloc();
        for (size_t i = 0; i < found.size(); ++i)
            arr[i] = wrap_skew(std::make_shared<SkewMonoidalCategory>(std::move(found[i])));
        *out = arr;
        *count = found.size();
        return SKEWCAT_OK;
    });
}

void skewcat_free_array(skewcat_structure** arr, size_t count) {
    if (!arr) return;
    for (size_t i = 0; i < count; ++i) delete arr[i];
    std::free(arr);
}

}  // extern "C"
