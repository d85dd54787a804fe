#include <algorithm>
#include <numeric>

#include "skewcat/tmulticat.hpp"

namespace skewcat {

namespace {

int image_hom(const TMulticategory& a, const TMulticategory& b, const std::vector<int>& obj, int h) {
    HomKey k = a.hom_key(h);
    for (int& x : k.inputs) x = obj[x];
    return b.hom_index(k.x, k.inputs, obj[k.output]);
}

}  // namespace

Report check_morphism(const MulticatMorphism& F) {
    Report rep;
    const TMulticategory& A = *F.source;
    const TMulticategory& B = *F.target;
    if (A.operad().name() != B.operad().name() || A.max_arity() != B.max_arity()) {
        rep.push_back({"morphism-operad", "source and target differ in operad or truncation"});
        return rep;
    }
    if (static_cast<int>(F.obj_map.size()) != A.num_objects() || static_cast<int>(F.map_map.size()) != A.map_count()) {
        rep.push_back({"morphism-shape", "object or multimap assignment has the wrong size"});
        return rep;
    }
    for (int a : F.obj_map)
        if (a < 0 || a >= B.num_objects()) {
            rep.push_back({"morphism-shape", "object image out of range"});
            return rep;
        }
    bool typed = true;
    for (int f = 0; f < A.map_count(); ++f) {
        int g = F.map_map[f];
        if (g < 0 || g >= B.map_count() || B.map_hom(g) != image_hom(A, B, F.obj_map, A.map_hom(f))) {
            rep.push_back({"morphism-type", A.map_name(f)});
            typed = false;
        }
    }
    if (!typed) return rep;
    for (int a = 0; a < A.num_objects(); ++a)
        if (F.map_map[A.identity(a)] != B.identity(F.obj_map[a]))
            rep.push_back({"morphism-identity", A.object_name(a)});
    if (B.thin()) return rep;
    auto tr = [&](int f) { return f < 0 ? -1 : F.map_map[f]; };
    for (int f = 0; f < A.map_count(); ++f) {
        const FinCategory& c = A.operad().component(A.map_arity(f));
        for (int s = 0; s < c.num_morphisms(); ++s) {
            if (c.src(s) != A.hom_x(A.map_hom(f)) || c.is_identity(s)) continue;
            if (tr(A.act(s, f)) != B.act(s, F.map_map[f]))
                rep.push_back({"morphism-action", c.morphism_name(s) + " on " + A.map_name(f)});
        }
    }
    A.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        std::vector<int> fb(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) fb[i] = F.map_map[fs[i]];
        if (tr(A.subst(g, fs)) != B.subst(F.map_map[g], fb)) {
            std::vector<std::string> n;
            for (int f : fs) n.push_back(A.map_name(f));
            rep.push_back({"morphism-subst", A.map_name(g) + "(" + join_names(n) + ")"});
        }
    });
    return rep;
}

Report check_2cell(const Multicat2Cell& phi) {
    Report rep;
    const auto& F = phi.F;
    const auto& G = phi.G;
    if (F.source != G.source || F.target != G.target) {
        rep.push_back({"2cell-shape", "morphisms are not parallel"});
        return rep;
    }
    const TMulticategory& A = *F.source;
    const TMulticategory& B = *F.target;
    const int e = B.operad().unit();
    if (static_cast<int>(phi.components.size()) != A.num_objects()) {
        rep.push_back({"2cell-shape", "wrong number of components"});
        return rep;
    }
    for (int a = 0; a < A.num_objects(); ++a) {
        const int fa[] = {F.obj_map[a]};
        int c = phi.components[a];
        if (c < 0 || c >= B.map_count() || B.map_hom(c) != B.hom_index(e, fa, G.obj_map[a])) {
            rep.push_back({"2cell-type", A.object_name(a)});
            return rep;
        }
    }
    for (int m = 0; m < A.map_count(); ++m) {
        HomKey k = A.hom_key(A.map_hom(m));
        const int fm[] = {F.map_map[m]};
        int left = B.subst(phi.components[k.output], fm);
        std::vector<int> ps;
        for (int a : k.inputs) ps.push_back(phi.components[a]);
        int right = B.subst(G.map_map[m], ps);
        if (left != right) rep.push_back({"2cell-naturality", A.map_name(m)});
    }
    return rep;
}

MulticatMorphism identity_morphism(const MulticatPtr& m) {
    MulticatMorphism f{m, m, std::vector<int>(m->num_objects()), std::vector<int>(m->map_count())};
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.map_map.begin(), f.map_map.end(), 0);
    return f;
}

namespace {

struct Constraint {
    std::vector<int> lhs;  // outer, inners (subst) or sigma-encoded (action)
    int sigma = -1;        // >= 0 for an action constraint on lhs[0]
    int result;
};

class IsoSearch {
public:
    IsoSearch(const TMulticategory& a, const TMulticategory& b, const std::vector<int>& obj)
        : A(a), B(b), obj(obj), check(!b.thin()) {}

    bool run(std::vector<int>& out) {
        // maps in order: identities first, then by arity and hom
        std::vector<int> order(A.map_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            int ax = A.map_arity(x), ay = A.map_arity(y);
            if (ax != ay) return ax < ay;
            return A.map_hom(x) < A.map_hom(y);
        });
        assign.assign(A.map_count(), -1);
        used.assign(B.map_count(), false);
        for (int a = 0; a < A.num_objects(); ++a) {
            assign[A.identity(a)] = B.identity(obj[a]);
            used[B.identity(obj[a])] = true;
        }
        for (int f : order)
            if (assign[f] < 0) free_maps.push_back(f);
        pos.assign(A.map_count(), -1);
        for (size_t i = 0; i < free_maps.size(); ++i) pos[free_maps[i]] = static_cast<int>(i);
        buckets.assign(free_maps.size() + 1, {});
        if (check) collect();
        for (auto& c : buckets[0])
            if (!holds(c)) return false;
        if (!rec(0)) return false;
        out = assign;
        return true;
    }

private:
    const TMulticategory& A;
    const TMulticategory& B;
    const std::vector<int>& obj;
    bool check;
    std::vector<int> assign, free_maps, pos;
    std::vector<bool> used;
    std::vector<std::vector<Constraint>> buckets;

    int stage(int f) const { return pos[f] < 0 ? 0 : pos[f] + 1; }

    void add(Constraint c) {
        int s = stage(c.result);
        for (int f : c.lhs) s = std::max(s, stage(f));
        buckets[s].push_back(std::move(c));
    }

    void collect() {
        for (int f = 0; f < A.map_count(); ++f) {
            const FinCategory& c = A.operad().component(A.map_arity(f));
            for (int s = 0; s < c.num_morphisms(); ++s) {
                if (c.src(s) != A.hom_x(A.map_hom(f)) || c.is_identity(s)) continue;
                int r = A.act(s, f);
                if (r >= 0) add({{f}, s, r});
            }
        }
        A.for_each_subst_tuple([&](int g, std::span<const int> fs) {
            int r = A.subst(g, fs);
            if (r < 0) return;
            std::vector<int> l{g};
            l.insert(l.end(), fs.begin(), fs.end());
            add({std::move(l), -1, r});
        });
    }

    bool holds(const Constraint& c) const {
        if (c.sigma >= 0) return B.act(c.sigma, assign[c.lhs[0]]) == assign[c.result];
        std::vector<int> fb(c.lhs.size() - 1);
        for (size_t i = 1; i < c.lhs.size(); ++i) fb[i - 1] = assign[c.lhs[i]];
        return B.subst(assign[c.lhs[0]], fb) == assign[c.result];
    }

    bool rec(size_t i) {
        if (i == free_maps.size()) return true;
        int f = free_maps[i];
        int h = image_hom(A, B, obj, A.map_hom(f));
        for (int g : B.maps_in(h)) {
            if (used[g]) continue;
            assign[f] = g;
            used[g] = true;
            bool ok = true;
            for (auto& c : buckets[i + 1])
                if (!holds(c)) {
                    ok = false;
                    break;
                }
            if (ok && rec(i + 1)) return true;
            used[g] = false;
            assign[f] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::pair<MulticatMorphism, MulticatMorphism>> iso_search(const MulticatPtr& a, const MulticatPtr& b) {
    if (a->operad().name() != b->operad().name() || a->max_arity() != b->max_arity() ||
        a->num_objects() != b->num_objects() || a->map_count() != b->map_count())
        return std::nullopt;
    const int N = a->num_objects();
    for (int x = 0; x < N; ++x)
        if (a->identity(x) < 0) return std::nullopt;
    for (int x = 0; x < N; ++x)
        if (b->identity(x) < 0) return std::nullopt;
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool sizes = true;
        for (int h = 0; h < a->hom_count() && sizes; ++h)
            sizes = a->maps_in(h).size() == b->maps_in(image_hom(*a, *b, perm, h)).size();
        if (!sizes) continue;
        std::vector<int> maps;
        IsoSearch s(*a, *b, perm);
        if (!s.run(maps)) continue;
        MulticatMorphism F{a, b, perm, maps};
        MulticatMorphism G{b, a, std::vector<int>(N), std::vector<int>(maps.size())};
        for (int x = 0; x < N; ++x) G.obj_map[perm[x]] = x;
        for (size_t f = 0; f < maps.size(); ++f) G.map_map[maps[f]] = static_cast<int>(f);
        return std::make_pair(std::move(F), std::move(G));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace skewcat
