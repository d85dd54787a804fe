#include "skewcat/correspondence.hpp"

#include "json.hpp"

namespace skewcat {

namespace {

constexpr int kL = 0;  // object order in R_n and L_n for n > 0
constexpr int kT = 1;

struct Tensors {
    const SkewMonoidalCategory& c;

    // ((p a_1) a_2)...; p < 0 means no prefix.
    int obj(int p, std::span<const int> a) const {
        int acc = p;
        for (int v : a) acc = acc < 0 ? v : c.t(acc, v);
        return acc;
    }
    int mor(int p, std::span<const int> f) const {
        int acc = p;
        for (int v : f) acc = acc < 0 ? v : c.tm(acc, v);
        return acc;
    }
    int ids(int p, std::span<const int> a) const {
        int acc = p;
        for (int v : a) acc = acc < 0 ? c.base->id(v) : c.tm(acc, c.base->id(v));
        return acc;
    }
    // ((X c_1) ... c_m) -> X((c_1 ... ) c_m), m >= 1
    int assoc_right(int x, std::span<const int> cs) const {
        const FinCategory& b = *c.base;
        int acc = b.id(c.t(x, cs[0]));
        int inner = cs[0];
        for (size_t k = 1; k < cs.size(); ++k) {
            acc = b.compose(c.al(x, inner, cs[k]), c.tm(acc, b.id(cs[k])));
            inner = c.t(inner, cs[k]);
        }
        return acc;
    }
};

// Gamma_{x; x_1..x_n}(a): blocks are absorbed left to right, a loose block costs one rho before reassociating.
int gamma_component(const Tensors& T, std::span<const int> ks, std::span<const int> xs, int x, std::span<const int> a) {
    const SkewMonoidalCategory& c = T.c;
    const FinCategory& b = *c.base;
    const int i = c.unit;
    const int n = static_cast<int>(ks.size());
    size_t p = 0;
    int acc, V, j = 0;
    if (x == kL) {
        V = i;
        acc = b.id(i);
    } else {
        auto a0 = a.subspan(0, ks[0]);
        V = ks[0] == 0 ? i : xs[0] == kT ? T.obj(-1, a0) : T.obj(i, a0);
        acc = b.id(V);
        p = ks[0];
        j = 1;
    }
    std::vector<int> tail;
    for (; j < n; ++j) {
        auto aj = a.subspan(p, ks[j]);
        p += ks[j];
        int ext = T.ids(acc, aj);
        if (ks[j] == 0 || xs[j] == kL) {
            tail.assign(1, i);
            tail.insert(tail.end(), aj.begin(), aj.end());
            int step = b.compose(T.assoc_right(V, tail), T.ids(c.rho[V], aj));
            acc = b.compose(step, ext);
            V = c.t(V, T.obj(i, aj));
        } else {
            acc = b.compose(T.assoc_right(V, aj), ext);
            V = c.t(V, T.obj(-1, aj));
        }
    }
    return acc;
}

template <class Fn>
void for_each_tuple(int n, int base, Fn fn) {
    std::vector<int> t(n);
    const int total = ipow(base, n);
    for (int code = 0; code < total; ++code) {
        tuple_decode(code, base, t);
        fn(code, std::span<const int>(t));
    }
}

// Element of A_e(m; out(w)) that theta carries to w.
int transpose(const TMulticategory& s, int theta, int w) {
    const int m = s.hom_output(s.map_hom(theta));
    const int in[] = {m};
    const int th[] = {theta};
    for (int u : s.maps_in(s.hom_index(s.operad().unit(), in, s.hom_output(s.map_hom(w)))))
        if (s.subst(u, th) == w) return u;
    throw StructuralError("no transpose of " + s.map_name(w) + " along " + s.map_name(theta));
}

struct Classifiers {
    UniversalMultimap nullary;
    std::vector<UniversalMultimap> binary;  // multicat object indices, a*N+b
};

Classifiers require_left_representable(const MulticatPtr& s) {
    if (!is_skew(*s)) throw StructuralError("not a skew multicategory");
    if (s->max_arity() < 3) throw StructuralError("truncation below arity 3");
    auto w = weak_representability(s);
    if (!w.holds) throw StructuralError("missing classifier " + w.failure);
    for (int k = 0; k < w.table.size(); ++k)
        if (!is_one_step_left_universal(*s, w.table.at(k).theta))
            throw StructuralError("classifier of " + w.table.describe(k) + " is not left universal");
    auto base = find_base_classifiers(s);
    if (!base) throw StructuralError("missing nullary or tight binary classifier");
    return {base->nullary, base->binary};
}

}  // namespace

NormalColaxAlgebra monoidal_to_colax(const SkewMonoidalCategory& c, int max_arity) {
    Tensors T{c};
    NormalColaxAlgebra A;
    A.operad = make_L_operad();
    A.base = c.base;
    A.max_arity = max_arity;
    const FinCategory& b = *c.base;
    const int N = b.num_objects(), M = b.num_morphisms();
    const CatOperad& op = *A.operad;
    A.m.resize(max_arity + 1);
    A.m_sigma.resize(max_arity + 1);
    for (int n = 0; n <= max_arity; ++n) {
        for (int x = 0; x < op.component(n).num_objects(); ++x) {
            const int pre = x == kL ? c.unit : -1;
            TupleFunctor F{n, std::vector<int>(ipow(N, n)), std::vector<int>(ipow(M, n))};
            for_each_tuple(n, N, [&](int code, std::span<const int> a) { F.obj[code] = T.obj(pre, a); });
            for_each_tuple(n, M, [&](int code, std::span<const int> f) {
                F.mor[code] = n == 0 ? b.id(c.unit) : T.mor(pre < 0 ? -1 : b.id(pre), f);
            });
            A.m[n].push_back(std::move(F));
        }
        const auto& comp = op.component(n);
        for (int s = 0; s < comp.num_morphisms(); ++s) {
            std::vector<int> tab(ipow(N, n));
            for_each_tuple(n, N, [&](int code, std::span<const int> a) {
                if (comp.is_identity(s)) {
                    tab[code] = b.id(A.m[n][comp.src(s)].obj[code]);
                } else {
                    // lambda_{a_1} a_2 ... a_n
                    tab[code] = T.ids(c.lambda[a[0]], a.subspan(1));
                }
            });
            A.m_sigma[n].push_back(std::move(tab));
        }
    }
    for_each_gamma_key(op, max_arity, [&](const std::vector<int>& key) {
        const int n = key[0], x = key[1];
        std::span<const int> ks(key.data() + 2, n), xs(key.data() + 2 + n, n);
        const int K = sum_of(ks);
        std::vector<int> comps(ipow(N, K));
        for_each_tuple(K, N, [&](int code, std::span<const int> a) { comps[code] = gamma_component(T, ks, xs, x, a); });
        A.gamma.emplace(key, std::move(comps));
    });
    return A;
}

MulticatPtr monoidal_to_multicat(const SkewMonoidalCategory& c, int max_arity) {
    return colax_to_multicat(monoidal_to_colax(c, max_arity));
}

SkewMonoidalCategory multicat_to_monoidal(const MulticatPtr& sp) {
    const TMulticategory& s = *sp;
    Classifiers cl = require_left_representable(sp);
    SkewMonoidalCategory c;
    c.base = std::make_shared<const FinCategory>(underlying_category(s));
    const FinCategory& b = *c.base;
    const int N = s.num_objects(), M = b.num_morphisms();
    std::vector<int> ob(N), mo(N), map_of(M), mor_of(s.map_count(), -1);
    for (int a = 0; a < N; ++a) {
        ob[a] = b.find_object(s.object_name(a));
        mo[ob[a]] = a;
    }
    for (int f = 0; f < M; ++f) {
        map_of[f] = s.find_map(b.morphism_name(f));
        mor_of[map_of[f]] = f;
    }
    auto theta = [&](int a, int bb) -> const UniversalMultimap& { return cl.binary[a * N + bb]; };
    auto tens = [&](int a, int bb) { return theta(a, bb).classifier; };
    auto sub = [&](int g, std::initializer_list<int> fs) {
        std::vector<int> v(fs);
        int r = s.subst(g, v);
        if (r < 0) throw StructuralError("substitution undefined at " + s.map_name(g));
        return r;
    };
    auto id = [&](int a) { return s.identity(a); };
    const int i = cl.nullary.classifier, th0 = cl.nullary.theta;

    c.unit = ob[i];
    c.tensor_obj.resize(N * N);
    for (int a = 0; a < N; ++a)
        for (int bb = 0; bb < N; ++bb) c.tensor_obj[ob[a] * N + ob[bb]] = ob[tens(a, bb)];
    c.tensor_mor.resize(static_cast<size_t>(M) * M);
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            const int a = mo[b.src(f)], a2 = mo[b.tgt(f)], bb = mo[b.src(g)], b2 = mo[b.tgt(g)];
            int w = sub(theta(a2, b2).theta, {map_of[f], map_of[g]});
            c.tensor_mor[f * M + g] = mor_of[transpose(s, theta(a, bb).theta, w)];
        }
    c.alpha.resize(N * N * N);
    for (int a = 0; a < N; ++a)
        for (int bb = 0; bb < N; ++bb)
            for (int x = 0; x < N; ++x) {
                int th3 = sub(theta(tens(a, bb), x).theta, {theta(a, bb).theta, id(x)});
                int w = sub(theta(a, tens(bb, x)).theta, {id(a), theta(bb, x).theta});
                c.alpha[(ob[a] * N + ob[bb]) * N + ob[x]] = mor_of[transpose(s, th3, w)];
            }
    c.lambda.resize(N);
    c.rho.resize(N);
    const int lam1 = lambda_of(s, 1);
    for (int a = 0; a < N; ++a) {
        int eta = sub(theta(i, a).theta, {th0, id(a)});
        c.lambda[ob[a]] = mor_of[transpose(s, eta, s.act(lam1, id(a)))];
        c.rho[ob[a]] = mor_of[sub(theta(a, i).theta, {id(a), th0})];
    }
    return c;
}

MonoidalRoundtrip roundtrip_monoidal(const SkewPtr& c, int max_arity) {
    MonoidalRoundtrip r;
    r.back = std::make_shared<const SkewMonoidalCategory>(multicat_to_monoidal(monoidal_to_multicat(*c, max_arity)));
    r.iso = monoidal_iso_search(c, r.back);
    return r;
}

MulticatRoundtrip roundtrip_multicat(const MulticatPtr& s) {
    MulticatRoundtrip r;
    r.back = monoidal_to_multicat(multicat_to_monoidal(s), s->max_arity());
    r.iso = iso_search(s, r.back);
    return r;
}

Report check_loose_classifier_adjunction(const MulticatPtr& sp) {
    const TMulticategory& s = *sp;
    Classifiers cl;
    SkewMonoidalCategory c;
    try {
        cl = require_left_representable(sp);
        c = multicat_to_monoidal(sp);
    } catch (const StructuralError& e) {
        return {{"adjunction-precondition", e.what()}};
    }
    Report rep;
    const FinCategory& b = *c.base;
    const int N = s.num_objects(), e = s.operad().unit();
    const int i = cl.nullary.classifier;
    const int lam1 = lambda_of(s, 1);
    auto unary = [&](int a, int bb) -> const std::vector<int>& {
        const int in[] = {a};
        return s.maps_in(s.hom_index(e, in, bb));
    };
    // unit of the adjunction, in loose(a; i⊗a)
    auto eta_of = [&](int a) {
        const int in2[] = {cl.nullary.theta, s.identity(a)};
        return s.subst(cl.binary[i * N + a].theta, in2);
    };
    // phi(u) = j(u) after eta, from C(i⊗a, b) to loose(a; b)
    auto phi = [&](int a, int u) {
        const int one[] = {eta_of(a)};
        return s.subst(s.act(lam1, u), one);
    };
    const int bi = b.find_object(s.object_name(i));
    for (int a = 0; a < N; ++a) {
        const int ia = cl.binary[i * N + a].classifier;
        for (int bb = 0; bb < N; ++bb) {
            std::vector<char> hit(s.map_count(), 0);
            const auto& dom = unary(ia, bb);
            const auto& cod = s.maps_in(loose_hom(s, std::vector<int>{a}, bb));
            bool ok = dom.size() == cod.size();
            for (int u : dom) {
                int r = phi(a, u);
                if (r < 0 || hit[r]) ok = false;
                else hit[r] = 1;
            }
            if (!ok) rep.push_back({"adjunction-bijection", s.object_name(a) + "," + s.object_name(bb)});
            // natural in b: phi(g u) = g phi(u)
            for (int b2 = 0; b2 < N; ++b2)
                for (int g : unary(bb, b2))
                    for (int u : dom) {
                        const int gu[] = {u};
                        const int gp[] = {phi(a, u)};
                        if (phi(a, s.subst(g, gu)) != s.subst(g, gp))
                            rep.push_back({"adjunction-naturality", s.map_name(g) + "," + s.map_name(u)});
                    }
        }
        // natural in a: phi(u (i⊗f)) = phi(u) j(f)
        for (int a0 = 0; a0 < N; ++a0)
            for (int f : unary(a0, a)) {
                const int fb = b.find_morphism(s.map_name(f));
                const int ifm = s.find_map(b.morphism_name(c.tm(b.id(bi), fb)));
                const int jf[] = {s.act(lam1, f)};
                for (int bb = 0; bb < N; ++bb)
                    for (int u : unary(ia, bb)) {
                        const int uf[] = {ifm};
                        if (phi(a0, s.subst(u, uf)) != s.subst(phi(a, u), jf))
                            rep.push_back({"adjunction-naturality", s.map_name(f) + "," + s.map_name(u)});
                    }
            }
        // counit: the transpose of j(1_a) is lambda_a
        int counit = -1;
        for (int u : unary(ia, a))
            if (phi(a, u) == s.act(lam1, s.identity(a))) counit = u;
        const int ba = b.find_object(s.object_name(a));
        if (counit < 0 || b.find_morphism(s.map_name(counit)) != c.lambda[ba])
            rep.push_back({"adjunction-counit", s.object_name(a)});
    }
    return rep;
}

ClassifyFlags multicat_flags(const MulticatPtr& sp) {
    const TMulticategory& s = *sp;
    ClassifyFlags f{true, true, find_closed_structure(sp).has_value()};
    const int N = s.num_objects();
    for (int n = 1; n <= s.max_arity(); ++n) {
        const int lam = lambda_of(s, n);
        for_each_tuple(n, N, [&](int, std::span<const int> a) {
            for (int bb = 0; bb < N; ++bb) {
                const auto& tight = s.maps_in(tight_hom(s, a, bb));
                const auto& loose = s.maps_in(loose_hom(s, a, bb));
                std::vector<char> hit(s.map_count(), 0);
                bool inj = true;
                for (int g : tight) {
                    int r = s.act(lam, g);
                    if (r < 0 || hit[r]) inj = false;
                    else hit[r] = 1;
                }
                f.lambda_epi = f.lambda_epi && inj;
                f.left_normal = f.left_normal && inj && tight.size() == loose.size();
            }
        });
    }
    return f;
}

ClassifyFlags monoidal_flags(const SkewMonoidalCategory& c) {
    return {is_left_normal(c), lambda_all_epi(c), is_closed_skew_monoidal(c).has_value()};
}

Classification classify(const SkewMonoidalCategory& c, int max_arity) {
    return {monoidal_flags(c), multicat_flags(monoidal_to_multicat(c, max_arity))};
}

Classification classify(const MulticatPtr& s) { return {monoidal_flags(multicat_to_monoidal(s)), multicat_flags(s)}; }

std::string classification_json(const Classification& c) {
    auto flags = [](const ClassifyFlags& f) {
        return nlohmann::ordered_json{{"left_normal", f.left_normal}, {"lambda_epi", f.lambda_epi}, {"closed", f.closed}};
    };
    nlohmann::ordered_json j{{"monoidal", flags(c.monoidal)}, {"multicat", flags(c.multicat)}, {"agree", c.agree()}};
    return j.dump(2);
}

}  // namespace skewcat
