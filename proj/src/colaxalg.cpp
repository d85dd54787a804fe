#include "skewcat/colaxalg.hpp"

#include <functional>
#include <unordered_map>

namespace skewcat {

namespace {

OperadPtr dual_of(const OperadPtr& op) {
    static const std::map<std::string, std::string> known{{"N", "N"}, {"R", "L"}, {"L", "R"}};
    auto it = known.find(op->name());
    if (it != known.end()) return operad_by_name(it->second);
    return dual_operad(op);
}

// Arity vectors of length len, entries >= 0, sum <= budget.
void for_each_arities(int len, int budget, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == len) {
        fn(cur);
        return;
    }
    for (int k = 0; k <= budget; ++k) {
        cur.push_back(k);
        for_each_arities(len, budget - k, cur, fn);
        cur.pop_back();
    }
}

// Objects x_i of component(ks[i]).
void for_each_objects(const CatOperad& op, std::span<const int> ks, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& fn) {
    if (cur.size() == ks.size()) {
        fn(cur);
        return;
    }
    const int n = op.component(ks[cur.size()]).num_objects();
    for (int x = 0; x < n; ++x) {
        cur.push_back(x);
        for_each_objects(op, ks, cur, fn);
        cur.pop_back();
    }
}

std::vector<int> make_key(int x, std::span<const int> ks, std::span<const int> xs) {
    std::vector<int> key{static_cast<int>(ks.size()), x};
    key.insert(key.end(), ks.begin(), ks.end());
    key.insert(key.end(), xs.begin(), xs.end());
    return key;
}

std::string tuple_str(const FinCategory& c, std::span<const int> a, bool morphisms = false) {
    std::vector<std::string> names;
    for (int v : a) names.push_back(morphisms ? c.morphism_name(v) : c.object_name(v));
    return "(" + join_names(names) + ")";
}

// Decodes every tuple of length n over base, calling fn(code, tuple).
template <class Fn>
void for_each_tuple(int n, int base, Fn fn) {
    std::vector<int> t(n);
    const int total = ipow(base, n);
    for (int code = 0; code < total; ++code) {
        tuple_decode(code, base, t);
        fn(code, std::span<const int>(t));
    }
}

class Checker {
public:
    explicit Checker(const NormalColaxAlgebra& a)
        : a_(a), op_(*a.operad), c_(*a.base), N_(c_.num_objects()), M_(c_.num_morphisms()) {}

    Report run() {
        if (!shape()) return rep_;
        functors();
        sigmas();
        bool complete = true;
        for_each_gamma_key(op_, a_.max_arity, [&](const std::vector<int>& key) {
            auto it = a_.gamma.find(key);
            if (it == a_.gamma.end() || static_cast<int>(it->second.size()) != ipow(N_, keyed_arity(key))) {
                add("gamma-missing", key_str(key));
                complete = false;
            }
        });
        if (!complete) return rep_;
        for_each_gamma_key(op_, a_.max_arity, [&](const std::vector<int>& key) { gamma(key); });
        coassociativity();
        return rep_;
    }

private:
    const NormalColaxAlgebra& a_;
    const CatOperad& op_;
    const FinCategory& c_;
    const int N_, M_;
    Report rep_;
    mutable std::vector<int> sbuf_, tbuf_, key_, zs_, zks_, slot_, b_;
    std::vector<const std::vector<int>*> inner_;

    static int keyed_arity(const std::vector<int>& key) {
        int k = 0;
        for (int i = 0; i < key[0]; ++i) k += key[2 + i];
        return k;
    }
    void add(std::string law, std::string detail) { rep_.push_back({std::move(law), std::move(detail)}); }
    std::string xname(int n, int x) const { return op_.component(n).object_name(x); }
    std::string key_str(const std::vector<int>& key) const {
        const int n = key[0];
        std::vector<std::string> parts;
        for (int i = 0; i < n; ++i) parts.push_back(xname(key[2 + i], key[2 + n + i]));
        return xname(n, key[1]) + "[" + join_names(parts) + "]";
    }

    bool shape() {
        const int before = static_cast<int>(rep_.size());
        if (static_cast<int>(a_.m.size()) != a_.max_arity + 1 || static_cast<int>(a_.m_sigma.size()) != a_.max_arity + 1) {
            add("colax-shape", "wrong number of arities");
            return false;
        }
        for (int n = 0; n <= a_.max_arity; ++n) {
            const auto& comp = op_.component(n);
            if (static_cast<int>(a_.m[n].size()) != comp.num_objects()) add("colax-shape", "m at arity " + std::to_string(n));
            if (static_cast<int>(a_.m_sigma[n].size()) != comp.num_morphisms())
                add("colax-shape", "m_sigma at arity " + std::to_string(n));
            for (auto& f : a_.m[n]) {
                bool ok = f.arity == n && static_cast<int>(f.obj.size()) == ipow(N_, n) &&
                          static_cast<int>(f.mor.size()) == ipow(M_, n);
                for (int v : f.obj) ok = ok && v >= 0 && v < N_;
                for (int v : f.mor) ok = ok && v >= 0 && v < M_;
                if (!ok) add("colax-shape", "functor table at arity " + std::to_string(n));
            }
            for (auto& s : a_.m_sigma[n]) {
                bool ok = static_cast<int>(s.size()) == ipow(N_, n);
                for (int v : s) ok = ok && v >= 0 && v < M_;
                if (!ok) add("colax-shape", "m_sigma table at arity " + std::to_string(n));
            }
        }
        if (static_cast<int>(rep_.size()) != before) return false;
        const auto& unit = a_.m[1][op_.unit()];
        for (int a = 0; a < N_; ++a)
            if (unit.obj[a] != a) add("colax-unit", "m_e(" + c_.object_name(a) + ")");
        for (int f = 0; f < M_; ++f)
            if (unit.mor[f] != f) add("colax-unit", "m_e(" + c_.morphism_name(f) + ")");
        return true;
    }

    // m_x(f) with f given per slot.
    int mor(int n, int x, std::span<const int> f) const { return a_.apply_mor(n, x, f); }
    int obj(int n, int x, std::span<const int> a) const { return a_.apply_obj(n, x, a); }

    const std::vector<int>& srcs(std::span<const int> f) const {
        sbuf_.clear();
        for (int v : f) sbuf_.push_back(c_.src(v));
        return sbuf_;
    }
    const std::vector<int>& tgts(std::span<const int> f) const {
        tbuf_.clear();
        for (int v : f) tbuf_.push_back(c_.tgt(v));
        return tbuf_;
    }
    std::vector<int> ids(std::span<const int> a) const {
        std::vector<int> s;
        for (int v : a) s.push_back(c_.id(v));
        return s;
    }

    void functors() {
        for (int n = 0; n <= a_.max_arity; ++n)
            for (int x = 0; x < static_cast<int>(a_.m[n].size()); ++x) {
                const std::string name = "m_" + xname(n, x);
                for_each_tuple(n, M_, [&](int, std::span<const int> f) {
                    int r = mor(n, x, f);
                    if (c_.src(r) != obj(n, x, srcs(f)) || c_.tgt(r) != obj(n, x, tgts(f)))
                        add("m-type", name + tuple_str(c_, f, true));
                });
                for_each_tuple(n, N_, [&](int, std::span<const int> a) {
                    if (mor(n, x, ids(a)) != c_.id(obj(n, x, a))) add("m-identity", name + tuple_str(c_, a));
                });
                // composable pairs slot by slot
                std::vector<int> f(n), g(n), gf(n);
                std::function<void(int)> rec = [&](int i) {
                    if (i == n) {
                        if (n == 0) return;
                        if (mor(n, x, gf) != c_.compose(mor(n, x, g), mor(n, x, f)))
                            add("m-composition", name + tuple_str(c_, g, true) + tuple_str(c_, f, true));
                        return;
                    }
                    for (int fi = 0; fi < M_; ++fi)
                        for (int b = 0; b < N_; ++b)
                            for (int gi : c_.hom(c_.tgt(fi), b)) {
                                f[i] = fi;
                                g[i] = gi;
                                gf[i] = c_.compose(gi, fi);
                                rec(i + 1);
                            }
                };
                rec(0);
            }
    }

    void sigmas() {
        for (int n = 0; n <= a_.max_arity; ++n) {
            const auto& comp = op_.component(n);
            for (int s = 0; s < comp.num_morphisms(); ++s) {
                const int x = comp.src(s), y = comp.tgt(s);
                const auto& tab = a_.m_sigma[n][s];
                const std::string name = "m_" + comp.morphism_name(s);
                bool typed = true;
                for_each_tuple(n, N_, [&](int code, std::span<const int> a) {
                    int v = tab[code];
                    if (c_.src(v) != obj(n, x, a) || c_.tgt(v) != obj(n, y, a)) {
                        add("msigma-type", name + tuple_str(c_, a));
                        typed = false;
                    } else if (comp.is_identity(s) && !c_.is_identity(v)) {
                        add("msigma-identity", name + tuple_str(c_, a));
                    }
                });
                if (!typed) continue;
                for_each_tuple(n, M_, [&](int, std::span<const int> f) {
                    auto s0 = srcs(f), t0 = tgts(f);
                    int lhs = c_.compose(tab[tuple_code(t0, N_)], mor(n, x, f));
                    int rhs = c_.compose(mor(n, y, f), tab[tuple_code(s0, N_)]);
                    if (lhs != rhs) add("msigma-naturality", name + tuple_str(c_, f, true));
                });
                for (int s2 = 0; s2 < comp.num_morphisms(); ++s2) {
                    if (comp.src(s2) != y) continue;
                    const int s21 = comp.compose(s2, s);
                    for_each_tuple(n, N_, [&](int code, std::span<const int> a) {
                        if (a_.m_sigma[n][s21][code] != c_.compose(a_.m_sigma[n][s2][code], tab[code]))
                            add("msigma-composition", comp.morphism_name(s2) + "." + comp.morphism_name(s) + tuple_str(c_, a));
                    });
                }
            }
        }
    }

    // (m_{x_1}(a_1), ..., m_{x_n}(a_n)) into out, reusing its storage.
    void inner_objs(std::span<const int> ks, std::span<const int> xs, std::span<const int> a, std::vector<int>& out) const {
        out.clear();
        size_t p = 0;
        for (size_t i = 0; i < ks.size(); ++i) {
            out.push_back(obj(ks[i], xs[i], a.subspan(p, ks[i])));
            p += ks[i];
        }
    }
    void inner_mors(std::span<const int> ks, std::span<const int> xs, std::span<const int> f, std::vector<int>& out) const {
        out.clear();
        size_t p = 0;
        for (size_t i = 0; i < ks.size(); ++i) {
            out.push_back(mor(ks[i], xs[i], f.subspan(p, ks[i])));
            p += ks[i];
        }
    }

    void gamma(const std::vector<int>& key) {
        const int n = key[0], x = key[1];
        std::span<const int> ks(key.data() + 2, n), xs(key.data() + 2 + n, n);
        const int K = sum_of(ks);
        const int z = op_.subst_obj(x, ks, xs);
        const auto& g = a_.gamma.at(key);
        bool typed = true;
        std::vector<int> buf, s0, t0;
        for_each_tuple(K, N_, [&](int code, std::span<const int> a) {
            int v = g[code];
            inner_objs(ks, xs, a, buf);
            if (v < 0 || v >= M_ || c_.src(v) != obj(K, z, a) || c_.tgt(v) != obj(n, x, buf)) {
                add("gamma-type", key_str(key) + tuple_str(c_, a));
                typed = false;
            }
        });
        if (!typed) return;
        for_each_tuple(K, M_, [&](int, std::span<const int> f) {
            int lhs = c_.compose(g[tuple_code(tgts(f), N_)], mor(K, z, f));
            inner_mors(ks, xs, f, buf);
            int rhs = c_.compose(mor(n, x, buf), g[tuple_code(srcs(f), N_)]);
            if (lhs != rhs) add("gamma-naturality", key_str(key) + tuple_str(c_, f, true));
        });
        operad_naturality(key, g);
        if (n == 1 && x == op_.unit())
            for_each_tuple(K, N_, [&](int code, std::span<const int> a) {
                if (!c_.is_identity(g[code])) add("gamma-counit-outer", key_str(key) + tuple_str(c_, a));
            });
        bool all_unit = true;
        for (int i = 0; i < n; ++i) all_unit = all_unit && ks[i] == 1 && xs[i] == op_.unit();
        if (all_unit)
            for_each_tuple(K, N_, [&](int code, std::span<const int> a) {
                if (!c_.is_identity(g[code])) add("gamma-counit-inner", key_str(key) + tuple_str(c_, a));
            });
    }

    void operad_naturality(const std::vector<int>& key, const std::vector<int>& g) {
        const int n = key[0], x = key[1];
        std::vector<int> ks(key.begin() + 2, key.begin() + 2 + n), xs(key.begin() + 2 + n, key.end());
        const int K = sum_of(ks);
        std::vector<int> inner_ids;
        for (int i = 0; i < n; ++i) inner_ids.push_back(op_.component(ks[i]).id(xs[i]));
        const auto& outer = op_.component(n);
        for (int s = 0; s < outer.num_morphisms(); ++s) {
            if (outer.src(s) != x || outer.is_identity(s)) continue;
            const int y = outer.tgt(s);
            const int sub = op_.subst_mor(s, ks, inner_ids);
            if (sub < 0) continue;
            const auto& gyt = a_.gamma.at(make_key(y, ks, xs));
            std::vector<int> b;
            for_each_tuple(K, N_, [&](int code, std::span<const int> a) {
                inner_objs(ks, xs, a, b);
                int lhs = c_.compose(gyt[code], a_.m_sigma[K][sub][code]);
                int rhs = c_.compose(a_.m_sigma[n][s][tuple_code(b, N_)], g[code]);
                if (lhs != rhs)
                    add("gamma-operad-naturality", key_str(key) + " outer " + outer.morphism_name(s) + tuple_str(c_, a));
            });
        }
        for (int i = 0; i < n; ++i) {
            const auto& ci = op_.component(ks[i]);
            for (int s = 0; s < ci.num_morphisms(); ++s) {
                if (ci.src(s) != xs[i] || ci.is_identity(s)) continue;
                auto xs2 = xs;
                xs2[i] = ci.tgt(s);
                auto moved = inner_ids;
                moved[i] = s;
                const int sub = op_.subst_mor(outer.id(x), ks, moved);
                if (sub < 0) continue;
                const auto& g2 = a_.gamma.at(make_key(x, ks, xs2));
                std::vector<int> slot;
                for_each_tuple(K, N_, [&](int code, std::span<const int> a) {
                    slot.clear();
                    size_t p = 0;
                    for (int j = 0; j < n; ++j) {
                        auto part = a.subspan(p, ks[j]);
                        p += ks[j];
                        slot.push_back(j == i ? a_.m_sigma[ks[i]][s][tuple_code(part, N_)] : c_.id(obj(ks[j], xs[j], part)));
                    }
                    int lhs = c_.compose(g2[code], a_.m_sigma[K][sub][code]);
                    int rhs = c_.compose(mor(n, x, slot), g[code]);
                    if (lhs != rhs)
                        add("gamma-operad-naturality",
                            key_str(key) + " inner " + std::to_string(i) + " " + ci.morphism_name(s) + tuple_str(c_, a));
                });
            }
        }
    }

    // Outer-first and inner-first decompositions of x(x_1(y_1..), ..., x_n(y_n..)).
    void coassociativity() {
        for_each_gamma_key(op_, a_.max_arity, [&](const std::vector<int>& key) {
            const int n = key[0], x = key[1];
            std::vector<int> ks(key.begin() + 2, key.begin() + 2 + n), xs(key.begin() + 2 + n, key.end());
            const int K = sum_of(ks);
            if (K == 0) return;
            // inner nestings: arities ls (length K) with sum <= max_arity, and objects ys
            std::vector<int> ls;
            for_each_arities(K, a_.max_arity, ls, [&](const std::vector<int>& lsv) {
                std::vector<int> ys;
                for_each_objects(op_, lsv, ys, [&](const std::vector<int>& ysv) { square(x, ks, xs, lsv, ysv); });
            });
        });
    }

    const std::vector<int>& G(int x, std::span<const int> ks, std::span<const int> xs) const {
        key_.assign({static_cast<int>(ks.size()), x});
        key_.insert(key_.end(), ks.begin(), ks.end());
        key_.insert(key_.end(), xs.begin(), xs.end());
        return a_.gamma.at(key_);
    }

    void square(int x, const std::vector<int>& ks, const std::vector<int>& xs, const std::vector<int>& ls,
                const std::vector<int>& ys) {
        const int n = static_cast<int>(ks.size());
        const int L = sum_of(ls);
        const int zx = op_.subst_obj(x, ks, xs);
        // z_i = x_i(y_i..) with its own arities
        zs_.clear();
        zks_.clear();
        inner_.assign(n, nullptr);
        size_t p = 0;
        for (int i = 0; i < n; ++i) {
            std::span<const int> li(ls.data() + p, ks[i]), yi(ys.data() + p, ks[i]);
            p += ks[i];
            zs_.push_back(ks[i] == 0 ? xs[i] : op_.subst_obj(xs[i], li, yi));
            zks_.push_back(sum_of(li));
            if (ks[i] > 0) inner_[i] = &G(xs[i], li, yi);
        }
        const auto& gA = G(x, zks_, zs_);
        const auto& gB1 = G(zx, ls, ys);
        const auto& gB2 = G(x, ks, xs);
        for_each_tuple(L, N_, [&](int code, std::span<const int> a) {
            slot_.clear();
            size_t q = 0;
            for (int i = 0; i < n; ++i) {
                if (ks[i] == 0)
                    slot_.push_back(c_.id(obj(0, xs[i], {})));
                else
                    slot_.push_back((*inner_[i])[tuple_code(a.subspan(q, zks_[i]), N_)]);
                q += zks_[i];
            }
            int pathA = c_.compose(mor(n, x, slot_), gA[code]);
            inner_objs(ls, ys, a, b_);
            int pathB = c_.compose(gB2[tuple_code(b_, N_)], gB1[code]);
            if (pathA != pathB) {
                std::vector<std::string> in;
                size_t r = 0;
                for (int i = 0; i < n; ++i) {
                    std::vector<std::string> yn;
                    for (int j = 0; j < ks[i]; ++j, ++r) yn.push_back(xname(ls[r], ys[r]));
                    in.push_back(xname(ks[i], xs[i]) + "[" + join_names(yn) + "]");
                }
                add("gamma-coassociativity", xname(n, x) + "[" + join_names(in) + "]" + tuple_str(c_, a));
            }
        });
    }
};

}  // namespace

int NormalColaxAlgebra::apply_obj(int n, int x, std::span<const int> a) const {
    if (n == 1 && x == operad->unit()) return a[0];
    return m[n][x].obj[tuple_code(a, base->num_objects())];
}

int NormalColaxAlgebra::apply_mor(int n, int x, std::span<const int> f) const {
    if (n == 1 && x == operad->unit()) return f[0];
    return m[n][x].mor[tuple_code(f, base->num_morphisms())];
}

int NormalColaxAlgebra::gamma_at(int x, std::span<const int> ks, std::span<const int> xs, std::span<const int> a) const {
    auto it = gamma.find(make_key(x, ks, xs));
    if (it == gamma.end()) return -1;
    return it->second[tuple_code(a, base->num_objects())];
}

void for_each_gamma_key(const CatOperad& op, int max_arity, const std::function<void(const std::vector<int>&)>& fn) {
    for (int n = 1; n <= max_arity; ++n)
        for (int x = 0; x < op.component(n).num_objects(); ++x) {
            std::vector<int> ks;
            for_each_arities(n, max_arity, ks, [&](const std::vector<int>& ksv) {
                std::vector<int> xs;
                for_each_objects(op, ksv, xs, [&](const std::vector<int>& xsv) { fn(make_key(x, ksv, xsv)); });
            });
        }
}

Report check_colax_algebra(const NormalColaxAlgebra& a) {
    if (!a.operad || !a.base) return {{"colax-shape", "missing operad or base"}};
    auto base = check_category(*a.base);
    if (!base.empty()) return base;
    return Checker(a).run();
}

bool is_LBC(const NormalColaxAlgebra& a) {
    const CatOperad& op = *a.operad;
    const int t2 = op.object(2, op.unit_name());
    const int N = a.base->num_objects();
    if (t2 < 0) return false;
    for (int n = 0; n + 1 <= a.max_arity; ++n)
        for (int x = 0; x < op.component(n).num_objects(); ++x) {
            const int ks[] = {n, 1};
            const int xs[] = {x, op.unit()};
            auto it = a.gamma.find(make_key(t2, ks, xs));
            if (it == a.gamma.end()) return false;
            const int total = ipow(N, n + 1);
            for (int code = 0; code < total; ++code)
                if (!a.base->is_identity(it->second[code])) return false;
        }
    return true;
}

ClassifierTable preferred_classifiers(const MulticatPtr& m) {
    if (auto base = find_base_classifiers(m)) {
        try {
            auto ind = build_inductive_classifiers(m, *base);
            bool ok = ind.complete();
            for (int k = 0; k < ind.size() && ok; ++k) ok = ind.at(k).universal;
            if (ok) return ind;
        } catch (const StructuralError&) {
        }
    }
    return weak_representability(m).table;
}

NormalColaxAlgebra multicat_to_colax(const MulticatPtr& mp, const ClassifierTable& table) {
    const TMulticategory& M = *mp;
    if (auto miss = table.first_missing()) throw StructuralError("missing classifier " + table.describe(*miss));
    NormalColaxAlgebra A;
    A.operad = dual_of(M.operad_ptr());
    A.base = std::make_shared<const FinCategory>(underlying_category(M));
    A.max_arity = M.max_arity();
    const FinCategory& C = *A.base;
    const int N = M.num_objects(), Mc = C.num_morphisms();
    const int e = M.operad().unit();
    std::vector<int> ob(N), mo(N);  // multicat object <-> base object
    for (int a = 0; a < N; ++a) {
        ob[a] = C.find_object(M.object_name(a));
        mo[ob[a]] = a;
    }
    std::vector<int> mor_of(M.map_count(), -1), map_of(Mc, -1);
    for (int f = 0; f < Mc; ++f) {
        map_of[f] = M.find_map(C.morphism_name(f));
        mor_of[map_of[f]] = f;
    }
    std::vector<int> inv(M.map_count(), -1);
    for (int k = 0; k < table.size(); ++k) {
        const auto& u = table.at(k);
        const int th[] = {u.theta};
        for (int b = 0; b < N; ++b) {
            const int in[] = {u.classifier};
            for (int v : M.maps_in(M.hom_index(e, in, b))) inv[M.subst(v, th)] = mor_of[v];
        }
    }
    auto to_m = [&](std::span<const int> a) {
        std::vector<int> r;
        for (int v : a) r.push_back(mo[v]);
        return r;
    };
    auto theta = [&](int x, std::span<const int> a) { return table.at(x, to_m(a)); };
    const CatOperad& op = *A.operad;
    A.m.resize(A.max_arity + 1);
    A.m_sigma.resize(A.max_arity + 1);
    for (int n = 0; n <= A.max_arity; ++n) {
        for (int x = 0; x < op.component(n).num_objects(); ++x) {
            TupleFunctor F{n, std::vector<int>(ipow(N, n)), std::vector<int>(ipow(Mc, n))};
            for_each_tuple(n, N, [&](int code, std::span<const int> a) { F.obj[code] = ob[theta(x, a).classifier]; });
            for_each_tuple(n, Mc, [&](int code, std::span<const int> f) {
                std::vector<int> s, t, g;
                for (int v : f) {
                    s.push_back(C.src(v));
                    t.push_back(C.tgt(v));
                    g.push_back(map_of[v]);
                }
                if (n == 0) {
                    F.mor[code] = C.id(F.obj[0]);
                    return;
                }
                int r = M.subst(theta(x, t).theta, g);
                F.mor[code] = r < 0 ? -1 : inv[r];
            });
            A.m[n].push_back(std::move(F));
        }
        const auto& comp = M.operad().component(n);
        for (int s = 0; s < comp.num_morphisms(); ++s) {
            std::vector<int> tab(ipow(N, n));
            for_each_tuple(n, N, [&](int code, std::span<const int> a) {
                int r = M.act(s, theta(comp.src(s), a).theta);
                tab[code] = r < 0 ? -1 : inv[r];
            });
            A.m_sigma[n].push_back(std::move(tab));
        }
    }
    for_each_gamma_key(op, A.max_arity, [&](const std::vector<int>& key) {
        const int n = key[0], x = key[1];
        std::span<const int> ks(key.data() + 2, n), xs(key.data() + 2 + n, n);
        const int K = sum_of(ks);
        std::vector<int> comps(ipow(N, K));
        for_each_tuple(K, N, [&](int code, std::span<const int> a) {
            std::vector<int> inner, mids;
            size_t p = 0;
            for (int i = 0; i < n; ++i) {
                const auto& u = theta(xs[i], a.subspan(p, ks[i]));
                p += ks[i];
                inner.push_back(u.theta);
                mids.push_back(ob[u.classifier]);
            }
            int r = M.subst(theta(x, mids).theta, inner);
            comps[code] = r < 0 ? -1 : inv[r];
        });
        A.gamma.emplace(key, std::move(comps));
    });
    return A;
}

MulticatPtr colax_to_multicat(const NormalColaxAlgebra& alg) {
    struct State {
        NormalColaxAlgebra a;
        std::vector<int> first, map_mor;
        std::unordered_map<std::vector<int>, const std::vector<int>*, VecHash> gamma;
    };
    auto st = std::make_shared<State>();
    st->a = alg;
    const NormalColaxAlgebra& A = st->a;
    for (auto& [k, v] : A.gamma) st->gamma[k] = &v;
    const FinCategory& C = *A.base;
    std::vector<std::string> names;
    for (int a = 0; a < C.num_objects(); ++a) names.push_back(C.object_name(a));
    auto m = std::make_shared<TMulticategory>(dual_of(A.operad), names, A.max_arity);
    const TMulticategory* raw = m.get();
    for (int h = 0; h < m->hom_count(); ++h) {
        HomKey k = m->hom_key(h);
        st->first.push_back(m->map_count());
        for (int f : C.hom(A.apply_obj(k.arity(), k.x, k.inputs), k.output)) {
            m->add_map(h, C.morphism_name(f) + "@" + m->describe_hom(h));
            st->map_mor.push_back(f);
        }
    }
    auto map_at = [st](int h, int f) { return st->first[h] + st->a.base->hom_position(f); };
    const int e = m->operad().unit();
    for (int a = 0; a < C.num_objects(); ++a) {
        const int in[] = {a};
        m->set_identity(a, map_at(m->hom_index(e, in, a), C.id(a)));
    }
    m->set_action_rule([st, raw, map_at](int s, int f) {
        const int h = raw->map_hom(f);
        HomKey k = raw->hom_key(h);
        const auto& comp = raw->operad().component(k.arity());
        if (comp.src(s) != k.x) return -1;
        const FinCategory& C = *st->a.base;
        int ms = st->a.m_sigma[k.arity()][s][tuple_code(k.inputs, C.num_objects())];
        int r = C.compose(st->map_mor[f], ms);
        return map_at(raw->hom_index(comp.tgt(s), k.inputs, k.output), r);
    });
    m->set_subst_rule([st, raw, map_at](int g, std::span<const int> fs) {
        const int h = raw->expected_result_hom(g, fs);
        if (h < 0) return -1;
        const FinCategory& C = *st->a.base;
        const int n = static_cast<int>(fs.size());
        const int x = raw->hom_x(raw->map_hom(g));
        std::vector<int> key{n, x}, xs, a, fm;
        for (int f : fs) key.push_back(raw->map_arity(f));
        for (int f : fs) {
            const int hf = raw->map_hom(f);
            key.push_back(raw->hom_x(hf));
            for (int i = 0; i < raw->hom_arity(hf); ++i) a.push_back(raw->hom_input(hf, i));
            fm.push_back(st->map_mor[f]);
        }
        auto it = st->gamma.find(key);
        if (it == st->gamma.end()) return -1;
        int gam = (*it->second)[tuple_code(a, C.num_objects())];
        int r = C.compose(C.compose(st->map_mor[g], st->a.apply_mor(n, x, fm)), gam);
        return map_at(h, r);
    });
    return m;
}

}  // namespace skewcat
