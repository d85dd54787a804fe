#include "skewcat/skewmon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "csp.hpp"

namespace skewcat {

namespace {

int obj_id(const FinCategory& c, const std::string& n) {
    int a = c.find_object(n);
    if (a < 0) throw StructuralError("unknown object " + n);
    return a;
}

int mor_id(const FinCategory& c, const std::string& n) {
    int f = c.find_morphism(n);
    if (f < 0) throw StructuralError("unknown morphism " + n);
    return f;
}

template <class Fill>
void fill_once(std::vector<int>& table, size_t at, int value, const char* what, Fill describe) {
    if (table[at] >= 0) throw StructuralError(std::string("duplicate ") + what + " entry " + describe());
    table[at] = value;
}

void require_total(const std::vector<int>& table, const char* what) {
    for (int v : table)
        if (v < 0) throw StructuralError(std::string("missing ") + what + " entry");
}

std::string tuple_str(const FinCategory& c, std::initializer_list<int> objs) {
    std::vector<std::string> n;
    for (int a : objs) n.push_back(c.object_name(a));
    return "(" + join_names(n) + ")";
}

}  // namespace

SkewMonoidalCategory SkewMonoidalCategory::from_data(const SkewMonoidalData& d) {
    SkewMonoidalCategory s;
    s.base = std::make_shared<const FinCategory>(FinCategory::from_data(d.category));
    const FinCategory& c = *s.base;
    const int N = c.num_objects(), M = c.num_morphisms();
    s.tensor_obj.assign(static_cast<size_t>(N) * N, -1);
    s.tensor_mor.assign(static_cast<size_t>(M) * M, -1);
    s.alpha.assign(static_cast<size_t>(N) * N * N, -1);
    s.lambda.assign(N, -1);
    s.rho.assign(N, -1);
    for (auto& [a, b, ab] : d.tensor_objects)
        fill_once(s.tensor_obj, obj_id(c, a) * N + obj_id(c, b), obj_id(c, ab), "tensor object",
                  [&] { return a + "," + b; });
    for (auto& [f, g, fg] : d.tensor_morphisms)
        fill_once(s.tensor_mor, static_cast<size_t>(mor_id(c, f)) * M + mor_id(c, g), mor_id(c, fg),
                  "tensor morphism", [&] { return f + "," + g; });
    s.unit = obj_id(c, d.unit);
    for (auto& [a, b, cc, m] : d.alpha)
        fill_once(s.alpha, (obj_id(c, a) * N + obj_id(c, b)) * N + obj_id(c, cc), mor_id(c, m), "alpha",
                  [&] { return a + "," + b + "," + cc; });
    for (auto& [a, m] : d.lambda) fill_once(s.lambda, obj_id(c, a), mor_id(c, m), "lambda", [&] { return a; });
    for (auto& [a, m] : d.rho) fill_once(s.rho, obj_id(c, a), mor_id(c, m), "rho", [&] { return a; });
    require_total(s.tensor_obj, "tensor object");
    require_total(s.tensor_mor, "tensor morphism");
    require_total(s.alpha, "alpha");
    require_total(s.lambda, "lambda");
    require_total(s.rho, "rho");
    return s;
}

SkewMonoidalData SkewMonoidalCategory::to_data() const {
    const FinCategory& c = *base;
    SkewMonoidalData d;
    d.category = c.to_data();
    for (int a = 0; a < N(); ++a)
        for (int b = 0; b < N(); ++b) d.tensor_objects.push_back({c.object_name(a), c.object_name(b), c.object_name(t(a, b))});
    for (int f = 0; f < M(); ++f)
        for (int g = 0; g < M(); ++g)
            d.tensor_morphisms.push_back({c.morphism_name(f), c.morphism_name(g), c.morphism_name(tm(f, g))});
    d.unit = c.object_name(unit);
    for (int a = 0; a < N(); ++a)
        for (int b = 0; b < N(); ++b)
            for (int x = 0; x < N(); ++x)
                d.alpha.push_back({c.object_name(a), c.object_name(b), c.object_name(x), c.morphism_name(al(a, b, x))});
    for (int a = 0; a < N(); ++a) {
        d.lambda.push_back({c.object_name(a), c.morphism_name(lambda[a])});
        d.rho.push_back({c.object_name(a), c.morphism_name(rho[a])});
    }
    return d;
}

Report check_skew_monoidal(const SkewMonoidalCategory& s) {
    Report rep;
    const FinCategory& c = *s.base;
    const int N = s.N(), M = s.M();
    auto mn = [&](int f) { return c.morphism_name(f); };
    auto on = [&](int a) { return c.object_name(a); };

    // tensor functor
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            int fg = s.tm(f, g);
            if (c.src(fg) != s.t(c.src(f), c.src(g)) || c.tgt(fg) != s.t(c.tgt(f), c.tgt(g)))
                rep.push_back({"tensor-type", mn(f) + "⊗" + mn(g) + " = " + mn(fg)});
        }
    if (!rep.empty()) return rep;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (s.tm(c.id(a), c.id(b)) != c.id(s.t(a, b)))
                rep.push_back({"tensor-identity", tuple_str(c, {a, b})});
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g)
            for (int f2 = 0; f2 < M; ++f2) {
                if (c.src(f2) != c.tgt(f)) continue;
                for (int g2 = 0; g2 < M; ++g2) {
                    if (c.src(g2) != c.tgt(g)) continue;
                    if (s.tm(c.compose(f2, f), c.compose(g2, g)) != c.compose(s.tm(f2, g2), s.tm(f, g)))
                        rep.push_back({"tensor-composition", "(" + mn(f2) + "," + mn(g2) + ") after (" + mn(f) +
                                                                 "," + mn(g) + ")"});
                }
            }

    // component types
    bool typed = true;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int x = 0; x < N; ++x) {
                int m = s.al(a, b, x);
                if (c.src(m) != s.t(s.t(a, b), x) || c.tgt(m) != s.t(a, s.t(b, x))) {
                    rep.push_back({"alpha-type", tuple_str(c, {a, b, x}) + ": " + mn(m)});
                    typed = false;
                }
            }
    for (int a = 0; a < N; ++a) {
        if (c.src(s.lambda[a]) != s.t(s.unit, a) || c.tgt(s.lambda[a]) != a) {
            rep.push_back({"lambda-type", on(a) + ": " + mn(s.lambda[a])});
            typed = false;
        }
        if (c.src(s.rho[a]) != a || c.tgt(s.rho[a]) != s.t(a, s.unit)) {
            rep.push_back({"rho-type", on(a) + ": " + mn(s.rho[a])});
            typed = false;
        }
    }
    if (!typed || !rep.empty()) return rep;

    auto C = [&](int g, int f) { return c.compose(g, f); };
    auto id = [&](int a) { return c.id(a); };
    const int i = s.unit;

    // naturality
    for (int f = 0; f < M; ++f) {
        const int a = c.src(f), a2 = c.tgt(f);
        if (C(s.lambda[a2], s.tm(id(i), f)) != C(f, s.lambda[a]))
            rep.push_back({"lambda-naturality", mn(f)});
        if (C(s.rho[a2], f) != C(s.tm(f, id(i)), s.rho[a])) rep.push_back({"rho-naturality", mn(f)});
        for (int g = 0; g < M; ++g)
            for (int h = 0; h < M; ++h) {
                const int b = c.src(g), b2 = c.tgt(g), x = c.src(h), x2 = c.tgt(h);
                if (C(s.al(a2, b2, x2), s.tm(s.tm(f, g), h)) != C(s.tm(f, s.tm(g, h)), s.al(a, b, x)))
                    rep.push_back({"alpha-naturality", "(" + mn(f) + "," + mn(g) + "," + mn(h) + ")"});
            }
    }

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            for (int x = 0; x < N; ++x)
                for (int d = 0; d < N; ++d) {
                    int left = C(C(s.tm(id(a), s.al(b, x, d)), s.al(a, s.t(b, x), d)), s.tm(s.al(a, b, x), id(d)));
                    int right = C(s.al(a, b, s.t(x, d)), s.al(s.t(a, b), x, d));
                    if (left != right)
                        rep.push_back({"A1", tuple_str(c, {a, b, x, d}) + ": " + mn(left) + " vs " + mn(right)});
                }
            {
                int left = C(s.lambda[s.t(a, b)], s.al(i, a, b));
                int right = s.tm(s.lambda[a], id(b));
                if (left != right) rep.push_back({"A2", tuple_str(c, {a, b}) + ": " + mn(left) + " vs " + mn(right)});
            }
            {
                int left = C(s.al(a, b, i), s.rho[s.t(a, b)]);
                int right = s.tm(id(a), s.rho[b]);
                if (left != right) rep.push_back({"A3", tuple_str(c, {a, b}) + ": " + mn(left) + " vs " + mn(right)});
            }
            {
                int left = C(C(s.tm(id(a), s.lambda[b]), s.al(a, i, b)), s.tm(s.rho[a], id(b)));
                int right = id(s.t(a, b));
                if (left != right) rep.push_back({"A4", tuple_str(c, {a, b}) + ": " + mn(left) + " vs " + mn(right)});
            }
        }
    {
        int left = C(s.lambda[i], s.rho[i]);
        if (left != id(i)) rep.push_back({"A5", tuple_str(c, {i}) + ": " + mn(left) + " vs " + mn(id(i))});
    }
    return rep;
}

bool is_left_normal(const SkewMonoidalCategory& s) {
    for (int f : s.lambda)
        if (inverse_of(*s.base, f) < 0) return false;
    return true;
}

bool lambda_all_epi(const SkewMonoidalCategory& s) {
    for (int f : s.lambda)
        if (!is_epimorphism(*s.base, f)) return false;
    return true;
}

std::optional<SkewClosedData> is_closed_skew_monoidal(const SkewMonoidalCategory& s) {
    const FinCategory& c = *s.base;
    const int N = s.N();
    SkewClosedData out{std::vector<int>(static_cast<size_t>(N) * N, -1), std::vector<int>(static_cast<size_t>(N) * N, -1)};
    for (int b = 0; b < N; ++b)
        for (int x = 0; x < N; ++x) {
            bool found = false;
            for (int X = 0; X < N && !found; ++X)
                for (int e : c.hom(s.t(X, b), x)) {
                    bool bij = true;
                    for (int a = 0; a < N && bij; ++a) {
                        const auto& dom = c.hom(a, X);
                        const auto& cod = c.hom(s.t(a, b), x);
                        if (dom.size() != cod.size()) {
                            bij = false;
                            break;
                        }
                        std::vector<bool> hit(c.num_morphisms(), false);
                        for (int f : dom) {
                            int r = c.compose(e, s.tm(f, c.id(b)));
                            if (hit[r]) {
                                bij = false;
                                break;
                            }
                            hit[r] = true;
                        }
                    }
                    if (bij) {
                        out.hom[b * N + x] = X;
                        out.eval[b * N + x] = e;
                        found = true;
                        break;
                    }
                }
            if (!found) return std::nullopt;
        }
    return out;
}

int left_bracketed_tensor(const SkewMonoidalCategory& s, std::span<const int> objs) {
    if (objs.empty()) throw StructuralError("left bracketed tensor needs at least one object");
    int r = objs[0];
    for (size_t k = 1; k < objs.size(); ++k) r = s.t(r, objs[k]);
    return r;
}

int left_bracketed_tensor_with_unit(const SkewMonoidalCategory& s, std::span<const int> objs) {
    int r = s.unit;
    for (int a : objs) r = s.t(r, a);
    return r;
}

Report check_lax_monoidal(const LaxMonoidalFunctor& F) {
    Report rep;
    const SkewMonoidalCategory& S = *F.source;
    const SkewMonoidalCategory& T = *F.target;
    const FinCategory& c = *S.base;
    const FinCategory& d = *T.base;
    Functor fun{S.base, T.base, F.obj_map, F.mor_map};
    rep = check_functor(fun);
    if (!rep.empty()) return rep;
    const int N = S.N();
    if (static_cast<int>(F.f2.size()) != N * N || F.f0 < 0 || F.f0 >= d.num_morphisms()) {
        rep.push_back({"lax-shape", "F2 or F0 table has the wrong size"});
        return rep;
    }
    auto Fo = [&](int a) { return F.obj_map[a]; };
    auto Fm = [&](int f) { return F.mor_map[f]; };
    auto f2 = [&](int a, int b) { return F.f2[a * N + b]; };
    auto D = [&](int g, int f) { return d.compose(g, f); };
    auto on = [&](int a) { return c.object_name(a); };
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int m = f2(a, b);
            if (m < 0 || m >= d.num_morphisms() || d.src(m) != T.t(Fo(a), Fo(b)) || d.tgt(m) != Fo(S.t(a, b))) {
                rep.push_back({"lax-type", "F2 at (" + on(a) + "," + on(b) + ")"});
                return rep;
            }
        }
    if (d.src(F.f0) != T.unit || d.tgt(F.f0) != Fo(S.unit)) {
        rep.push_back({"lax-type", "F0"});
        return rep;
    }
    for (int f = 0; f < S.M(); ++f)
        for (int g = 0; g < S.M(); ++g)
            if (D(Fm(S.tm(f, g)), f2(c.src(f), c.src(g))) != D(f2(c.tgt(f), c.tgt(g)), T.tm(Fm(f), Fm(g))))
                rep.push_back({"lax-naturality", "(" + c.morphism_name(f) + "," + c.morphism_name(g) + ")"});
    const int i = S.unit;
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b)
            for (int x = 0; x < N; ++x) {
                int left = D(D(Fm(S.al(a, b, x)), f2(S.t(a, b), x)), T.tm(f2(a, b), d.id(Fo(x))));
                int right = D(D(f2(a, S.t(b, x)), T.tm(d.id(Fo(a)), f2(b, x))), T.al(Fo(a), Fo(b), Fo(x)));
                if (left != right) rep.push_back({"lax-alpha", tuple_str(c, {a, b, x})});
            }
        if (D(D(Fm(S.lambda[a]), f2(i, a)), T.tm(F.f0, d.id(Fo(a)))) != T.lambda[Fo(a)])
            rep.push_back({"lax-lambda", on(a)});
        if (D(D(f2(a, i), T.tm(d.id(Fo(a)), F.f0)), T.rho[Fo(a)]) != Fm(S.rho[a])) rep.push_back({"lax-rho", on(a)});
    }
    return rep;
}

LaxMonoidalFunctor identity_lax(const std::shared_ptr<const SkewMonoidalCategory>& c) {
    LaxMonoidalFunctor f{c, c, std::vector<int>(c->N()), std::vector<int>(c->M()), {}, c->base->id(c->unit)};
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
    for (int a = 0; a < c->N(); ++a)
        for (int b = 0; b < c->N(); ++b) f.f2.push_back(c->base->id(c->t(a, b)));
    return f;
}

namespace {

// Morphism bijections extending an object bijection that preserve identities and composition.
void for_each_category_iso(const FinCategory& c, const FinCategory& d, const std::vector<int>& obj,
                           const std::function<bool(const std::vector<int>&)>& fn) {
    detail::Csp csp;
    const int M = c.num_morphisms();
    for (int f = 0; f < M; ++f) {
        const auto& h = d.hom(obj[c.src(f)], obj[c.tgt(f)]);
        if (c.is_identity(f))
            csp.add_slot({d.id(obj[c.src(f)])});
        else
            csp.add_slot(h);
    }
    for (int f = 0; f < M; ++f)
        for (int g = f + 1; g < M; ++g)
            if (c.src(f) == c.src(g) && c.tgt(f) == c.tgt(g))
                csp.add_constraint({f, g}, [f, g](const std::vector<int>& v) { return v[f] != v[g]; });
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            if (c.src(g) != c.tgt(f)) continue;
            int gf = c.compose(g, f);
            csp.add_constraint({f, g, gf}, [&d, f, g, gf](const std::vector<int>& v) { return d.compose(v[g], v[f]) == v[gf]; });
        }
    csp.solve(fn);
}

}  // namespace

std::optional<std::pair<LaxMonoidalFunctor, LaxMonoidalFunctor>> monoidal_iso_search(
    const std::shared_ptr<const SkewMonoidalCategory>& cp, const std::shared_ptr<const SkewMonoidalCategory>& dp) {
    const SkewMonoidalCategory& S = *cp;
    const SkewMonoidalCategory& T = *dp;
    const FinCategory& c = *S.base;
    const FinCategory& d = *T.base;
    const int N = S.N();
    if (N != T.N() || S.M() != T.M()) return std::nullopt;
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::pair<LaxMonoidalFunctor, LaxMonoidalFunctor>> result;
    do {
        bool sizes = true;
        for (int a = 0; a < N && sizes; ++a)
            for (int b = 0; b < N && sizes; ++b) sizes = c.hom(a, b).size() == d.hom(perm[a], perm[b]).size();
        if (!sizes) continue;
        for_each_category_iso(c, d, perm, [&](const std::vector<int>& mors) {
            auto iso_homs = [&](int x, int y) {
                std::vector<int> r;
                for (int m : d.hom(x, y))
                    if (inverse_of(d, m) >= 0) r.push_back(m);
                return r;
            };
            detail::Csp csp;
            std::vector<int> f2slot(static_cast<size_t>(N) * N);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) f2slot[a * N + b] = csp.add_slot(iso_homs(T.t(perm[a], perm[b]), perm[S.t(a, b)]));
            int f0slot = csp.add_slot(iso_homs(T.unit, perm[S.unit]));
            auto Fm = [&](int f) { return mors[f]; };
            auto D = [&](int g, int f) { return d.compose(g, f); };
            for (int f = 0; f < S.M(); ++f)
                for (int g = 0; g < S.M(); ++g) {
                    int s1 = f2slot[c.src(f) * N + c.src(g)], s2 = f2slot[c.tgt(f) * N + c.tgt(g)];
                    int fg = S.tm(f, g), tfg = T.tm(Fm(f), Fm(g));
                    csp.add_constraint({s1, s2}, [&, s1, s2, fg, tfg](const std::vector<int>& v) {
                        return D(Fm(fg), v[s1]) == D(v[s2], tfg);
                    });
                }
            const int i = S.unit;
            for (int a = 0; a < N; ++a) {
                for (int b = 0; b < N; ++b)
                    for (int x = 0; x < N; ++x) {
                        int sab = f2slot[a * N + b], sabx = f2slot[S.t(a, b) * N + x];
                        int sa_bx = f2slot[a * N + S.t(b, x)], sbx = f2slot[b * N + x];
                        csp.add_constraint({sab, sabx, sa_bx, sbx}, [&, a, b, x, sab, sabx, sa_bx, sbx](const std::vector<int>& v) {
                            int left = D(D(Fm(S.al(a, b, x)), v[sabx]), T.tm(v[sab], d.id(perm[x])));
                            int right = D(D(v[sa_bx], T.tm(d.id(perm[a]), v[sbx])), T.al(perm[a], perm[b], perm[x]));
                            return left == right;
                        });
                    }
                int sia = f2slot[i * N + a], sai = f2slot[a * N + i];
                csp.add_constraint({sia, f0slot}, [&, a, sia, f0slot](const std::vector<int>& v) {
                    return D(D(Fm(S.lambda[a]), v[sia]), T.tm(v[f0slot], d.id(perm[a]))) == T.lambda[perm[a]];
                });
                csp.add_constraint({sai, f0slot}, [&, a, sai, f0slot](const std::vector<int>& v) {
                    return D(D(v[sai], T.tm(d.id(perm[a]), v[f0slot])), T.rho[perm[a]]) == Fm(S.rho[a]);
                });
            }
            csp.solve([&](const std::vector<int>& v) {
                LaxMonoidalFunctor F{cp, dp, perm, mors, {}, v[f0slot]};
                for (int k = 0; k < N * N; ++k) F.f2.push_back(v[f2slot[k]]);
                LaxMonoidalFunctor G{dp, cp, std::vector<int>(N), std::vector<int>(S.M()), std::vector<int>(N * N), -1};
                for (int a = 0; a < N; ++a) G.obj_map[perm[a]] = a;
                for (int f = 0; f < S.M(); ++f) G.mor_map[mors[f]] = f;
                for (int a2 = 0; a2 < N; ++a2)
                    for (int b2 = 0; b2 < N; ++b2) {
                        int fa = G.obj_map[a2], fb = G.obj_map[b2];
                        G.f2[a2 * N + b2] = G.mor_map[inverse_of(d, F.f2[fa * N + fb])];
                    }
                G.f0 = G.mor_map[inverse_of(d, F.f0)];
                result = std::make_pair(std::move(F), std::move(G));
                return false;
            });
            return !result;
        });
        if (result) return result;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace skewcat
