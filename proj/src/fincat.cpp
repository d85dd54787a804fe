#include "skewcat/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skewcat {

int ipow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int tuple_code(std::span<const int> t, int base) {
    int c = 0;
    for (int v : t) c = c * base + v;
    return c;
}

void tuple_decode(int code, int base, std::span<int> out) {
    for (size_t i = out.size(); i-- > 0;) {
        out[i] = code % base;
        code /= base;
    }
}

std::string join_names(const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) s += ",";
        s += names[i];
    }
    return s;
}

namespace {

int find_sorted(const std::vector<std::string>& v, std::string_view name) {
    auto it = std::lower_bound(v.begin(), v.end(), name, [](const std::string& a, std::string_view b) { return a < b; });
    if (it == v.end() || *it != name) return -1;
    return static_cast<int>(it - v.begin());
}

}  // namespace

int FinCategory::find_object(std::string_view name) const { return find_sorted(obj_, name); }
int FinCategory::find_morphism(std::string_view name) const { return find_sorted(mor_, name); }

void FinCategory::index_homs() {
    const size_t n = obj_.size();
    hom_.assign(n * n, {});
    hom_pos_.assign(mor_.size(), 0);
    for (size_t f = 0; f < mor_.size(); ++f) {
        auto& h = hom_[static_cast<size_t>(src_[f]) * n + tgt_[f]];
        hom_pos_[f] = static_cast<int>(h.size());
        h.push_back(static_cast<int>(f));
    }
}

bool FinCategory::is_thin() const {
    for (const auto& h : hom_)
        if (h.size() > 1) return false;
    return true;
}

FinCategory FinCategory::from_data(const CategoryData& data) {
    FinCategory c;
    c.obj_ = data.objects;
    std::sort(c.obj_.begin(), c.obj_.end());
    if (std::adjacent_find(c.obj_.begin(), c.obj_.end()) != c.obj_.end())
        throw StructuralError("duplicate object id");

    std::vector<MorphismDecl> mors = data.morphisms;
    std::sort(mors.begin(), mors.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < mors.size(); ++i)
        if (mors[i].id == mors[i + 1].id) throw StructuralError("duplicate morphism id '" + mors[i].id + "'");
    for (const auto& m : mors) {
        c.mor_.push_back(m.id);
        int s = c.find_object(m.src), t = c.find_object(m.tgt);
        if (s < 0 || t < 0) throw StructuralError("morphism '" + m.id + "' has an endpoint that is not an object");
        c.src_.push_back(s);
        c.tgt_.push_back(t);
    }

    c.id_.assign(c.obj_.size(), -1);
    for (const auto& [o, m] : data.identities) {
        int a = c.find_object(o);
        if (a < 0) throw StructuralError("identity given for unknown object '" + o + "'");
        int f = c.find_morphism(m);
        if (f < 0) throw StructuralError("identity of '" + o + "' is unknown morphism '" + m + "'");
        c.id_[a] = f;
    }
    for (size_t a = 0; a < c.obj_.size(); ++a)
        if (c.id_[a] < 0) throw StructuralError("object '" + c.obj_[a] + "' has no identity");

    const size_t m = c.mor_.size();
    c.comp_.assign(m * m, -1);
    for (const auto& e : data.compose) {
        int g = c.find_morphism(e.g), f = c.find_morphism(e.f), gf = c.find_morphism(e.gf);
        if (g < 0 || f < 0 || gf < 0)
            throw StructuralError("compose entry (" + e.g + "," + e.f + ") refers to an unknown morphism");
        int& slot = c.comp_[g * m + f];
        if (slot >= 0) throw StructuralError("duplicate compose entry (" + e.g + "," + e.f + ")");
        slot = gf;
    }
    c.index_homs();
    return c;
}

CategoryData FinCategory::to_data() const {
    CategoryData d;
    d.objects = obj_;
    for (size_t f = 0; f < mor_.size(); ++f) d.morphisms.push_back({mor_[f], obj_[src_[f]], obj_[tgt_[f]]});
    for (size_t a = 0; a < obj_.size(); ++a) d.identities[obj_[a]] = mor_[id_[a]];
    const size_t m = mor_.size();
    for (size_t g = 0; g < m; ++g)
        for (size_t f = 0; f < m; ++f)
            if (comp_[g * m + f] >= 0) d.compose.push_back({mor_[g], mor_[f], mor_[comp_[g * m + f]]});
    return d;
}

Report check_category(const FinCategory& c) {
    Report r;
    const int n = c.num_objects(), m = c.num_morphisms();
    auto nm = [&](int f) { return c.morphism_name(f); };
    for (int a = 0; a < n; ++a) {
        int i = c.id(a);
        if (c.src(i) != a || c.tgt(i) != a)
            r.push_back({"identity-type", "identity " + nm(i) + " of " + c.object_name(a) + " is not an endomorphism of it"});
    }
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int gf = c.compose(g, f);
            bool composable = c.src(g) == c.tgt(f);
            if (composable && gf < 0) r.push_back({"composition-missing", "g=" + nm(g) + " f=" + nm(f)});
            if (!composable && gf >= 0) r.push_back({"composition-extra", "g=" + nm(g) + " f=" + nm(f)});
            if (composable && gf >= 0 && (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g)))
                r.push_back({"composition-type", "g=" + nm(g) + " f=" + nm(f) + " gf=" + nm(gf)});
        }
    for (int f = 0; f < m; ++f) {
        int l = c.compose(c.id(c.tgt(f)), f);
        if (l >= 0 && l != f) r.push_back({"left-identity", "f=" + nm(f)});
        int rr = c.compose(f, c.id(c.src(f)));
        if (rr >= 0 && rr != f) r.push_back({"right-identity", "f=" + nm(f)});
    }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (c.src(h) != c.tgt(g)) continue;
            int hg = c.compose(h, g);
            for (int f = 0; f < m; ++f) {
                if (c.src(g) != c.tgt(f)) continue;
                int gf = c.compose(g, f);
                if (hg < 0 || gf < 0) continue;
                int a = c.compose(h, gf), b = c.compose(hg, f);
                if (a < 0 || b < 0) continue;
                if (a != b)
                    r.push_back({"associativity", "h=" + nm(h) + " g=" + nm(g) + " f=" + nm(f) + ": h(gf)=" + nm(a) +
                                                      " (hg)f=" + nm(b)});
            }
        }
    return r;
}

Functor make_functor(CategoryPtr source, CategoryPtr target, const std::map<std::string, std::string>& objects,
                     const std::map<std::string, std::string>& morphisms) {
    Functor F{source, target, std::vector<int>(source->num_objects(), -1), std::vector<int>(source->num_morphisms(), -1)};
    for (const auto& [a, b] : objects) {
        int x = source->find_object(a), y = target->find_object(b);
        if (x < 0 || y < 0) throw StructuralError("functor object map " + a + " -> " + b + " has unknown ids");
        F.obj_map[x] = y;
    }
    for (const auto& [f, g] : morphisms) {
        int x = source->find_morphism(f), y = target->find_morphism(g);
        if (x < 0 || y < 0) throw StructuralError("functor morphism map " + f + " -> " + g + " has unknown ids");
        F.mor_map[x] = y;
    }
    for (int v : F.obj_map)
        if (v < 0) throw StructuralError("functor object map is not total");
    for (int v : F.mor_map)
        if (v < 0) throw StructuralError("functor morphism map is not total");
    return F;
}

Functor identity_functor(CategoryPtr c) {
    Functor F{c, c, {}, {}};
    F.obj_map.resize(c->num_objects());
    F.mor_map.resize(c->num_morphisms());
    std::iota(F.obj_map.begin(), F.obj_map.end(), 0);
    std::iota(F.mor_map.begin(), F.mor_map.end(), 0);
    return F;
}

Report check_functor(const Functor& F) {
    Report r;
    const FinCategory& C = *F.source;
    const FinCategory& D = *F.target;
    for (int f = 0; f < C.num_morphisms(); ++f) {
        int g = F.mor_map[f];
        if (D.src(g) != F.obj_map[C.src(f)] || D.tgt(g) != F.obj_map[C.tgt(f)])
            r.push_back({"functor-type", "F(" + C.morphism_name(f) + ")=" + D.morphism_name(g)});
    }
    for (int a = 0; a < C.num_objects(); ++a)
        if (F.mor_map[C.id(a)] != D.id(F.obj_map[a]))
            r.push_back({"functor-identity", "object " + C.object_name(a)});
    for (int g = 0; g < C.num_morphisms(); ++g)
        for (int f = 0; f < C.num_morphisms(); ++f) {
            int gf = C.compose(g, f);
            if (gf < 0) continue;
            int lhs = F.mor_map[gf];
            int rhs = D.compose(F.mor_map[g], F.mor_map[f]);
            if (lhs != rhs)
                r.push_back({"functor-composition", "g=" + C.morphism_name(g) + " f=" + C.morphism_name(f)});
        }
    return r;
}

Report check_nat_trans(const NatTrans& t) {
    Report r;
    const Functor& F = *t.source;
    const Functor& G = *t.target;
    const FinCategory& C = *F.source;
    const FinCategory& D = *F.target;
    for (int a = 0; a < C.num_objects(); ++a) {
        int c = t.components[a];
        if (D.src(c) != F.obj_map[a] || D.tgt(c) != G.obj_map[a])
            r.push_back({"component-type", "object " + C.object_name(a)});
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        int lhs = D.compose(t.components[C.tgt(f)], F.mor_map[f]);
        int rhs = D.compose(G.mor_map[f], t.components[C.src(f)]);
        if (lhs < 0 || rhs < 0 || lhs != rhs) r.push_back({"naturality", "morphism " + C.morphism_name(f)});
    }
    return r;
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
    CategoryData out;
    auto on = [&](int a, int b) { return "(" + c.object_name(a) + "," + d.object_name(b) + ")"; };
    auto mn = [&](int f, int g) { return "(" + c.morphism_name(f) + "," + d.morphism_name(g) + ")"; };
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < d.num_objects(); ++b) {
            out.objects.push_back(on(a, b));
            out.identities[on(a, b)] = mn(c.id(a), d.id(b));
        }
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < d.num_morphisms(); ++g)
            out.morphisms.push_back({mn(f, g), on(c.src(f), d.src(g)), on(c.tgt(f), d.tgt(g))});
    for (int f1 = 0; f1 < c.num_morphisms(); ++f1)
        for (int f0 = 0; f0 < c.num_morphisms(); ++f0) {
            int f = c.compose(f1, f0);
            if (f < 0) continue;
            for (int g1 = 0; g1 < d.num_morphisms(); ++g1)
                for (int g0 = 0; g0 < d.num_morphisms(); ++g0) {
                    int g = d.compose(g1, g0);
                    if (g < 0) continue;
                    out.compose.push_back({mn(f1, g1), mn(f0, g0), mn(f, g)});
                }
        }
    return FinCategory::from_data(out);
}

FinCategory opposite_category(const FinCategory& c) {
    FinCategory o = c;
    std::swap(o.src_, o.tgt_);
    const size_t m = c.mor_.size();
    for (size_t g = 0; g < m; ++g)
        for (size_t f = 0; f < m; ++f) o.comp_[g * m + f] = c.comp_[f * m + g];
    o.index_homs();
    return o;
}

bool is_epimorphism(const FinCategory& c, int f) {
    const int b = c.tgt(f);
    for (int d = 0; d < c.num_objects(); ++d) {
        const auto& h = c.hom(b, d);
        for (size_t i = 0; i < h.size(); ++i)
            for (size_t j = i + 1; j < h.size(); ++j)
                if (c.compose(h[i], f) == c.compose(h[j], f)) return false;
    }
    return true;
}

int inverse_of(const FinCategory& c, int f) {
    for (int g : c.hom(c.tgt(f), c.src(f)))
        if (c.compose(g, f) == c.id(c.src(f)) && c.compose(f, g) == c.id(c.tgt(f))) return g;
    return -1;
}

}  // namespace skewcat
