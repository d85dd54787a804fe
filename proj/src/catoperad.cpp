#include "skewcat/catoperad.hpp"

#include <functional>
#include <sstream>

namespace skewcat {

CatOperad::CatOperad(std::string name, ComponentRule component, std::string unit_name, SubstRule subst_obj,
                     SubstRule subst_mor)
    : name_(std::move(name)),
      unit_name_(std::move(unit_name)),
      comp_(std::move(component)),
      obj_(std::move(subst_obj)),
      mor_(std::move(subst_mor)) {
    for (int n = 0; n < kEager; ++n) eager_.push_back(comp_(n));
    unit_ = eager_[1].find_object(unit_name_);
}

const FinCategory& CatOperad::component(int n) const {
    if (n >= 0 && n < kEager) return eager_[n];
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, std::make_unique<FinCategory>(comp_(n))).first;
    return *it->second;
}


int poset_subst_mor(const CatOperad& op, int f, std::span<const int> ks, std::span<const int> fs) {
    const int n = static_cast<int>(fs.size());
    const FinCategory& outer = op.component(n);
    std::vector<int> s(n), t(n);
    for (int i = 0; i < n; ++i) {
        const FinCategory& c = op.component(ks[i]);
        s[i] = c.src(fs[i]);
        t[i] = c.tgt(fs[i]);
    }
    int a = op.subst_obj(outer.src(f), ks, s);
    int b = op.subst_obj(outer.tgt(f), ks, t);
    const FinCategory& res = op.component(sum_of(ks));
    if (a < 0 || b < 0 || a >= res.num_objects() || b >= res.num_objects()) return -1;
    const auto& h = res.hom(a, b);
    return h.size() == 1 ? h[0] : -1;
}

namespace {

FinCategory terminal_component(int) {
    CategoryData d;
    d.objects = {"*"};
    d.morphisms = {{"1_*", "*", "*"}};
    d.identities = {{"*", "1_*"}};
    d.compose = {{"1_*", "1_*", "1_*"}};
    return FinCategory::from_data(d);
}

FinCategory r_component(int n) {
    CategoryData d;
    if (n == 0) {
        d.objects = {"l"};
        d.morphisms = {{"1_l", "l", "l"}};
        d.identities = {{"l", "1_l"}};
        d.compose = {{"1_l", "1_l", "1_l"}};
        return FinCategory::from_data(d);
    }
    d.objects = {"l", "t"};
    d.morphisms = {{"1_l", "l", "l"}, {"1_t", "t", "t"}, {"lambda", "t", "l"}};
    d.identities = {{"l", "1_l"}, {"t", "1_t"}};
    d.compose = {{"1_l", "1_l", "1_l"}, {"1_t", "1_t", "1_t"}, {"lambda", "1_t", "lambda"}, {"1_l", "lambda", "lambda"}};
    return FinCategory::from_data(d);
}

// In R_n for n > 0 the objects sort as l = 0, t = 1.
constexpr int kL = 0;
constexpr int kT = 1;

int r_subst_obj(const CatOperad&, int x, std::span<const int> ks, std::span<const int> xs) {
    if (sum_of(ks) == 0) return kL;
    if (xs.empty()) return kL;
    if (x == kT && ks[0] > 0 && xs[0] == kT) return kT;
    return kL;
}

int r_mutant_subst_obj(const CatOperad& op, int x, std::span<const int> ks, std::span<const int> xs) {
    if (sum_of(ks) > 0 && x == kT && xs.size() >= 2 && xs[0] == kL) return kT;
    return r_subst_obj(op, x, ks, xs);
}

std::string dual_name(const std::string& n) {
    if (n == "R") return "L";
    if (n == "L") return "R";
    if (n == "N") return "N";
    return n + "*";
}

}  // namespace

OperadPtr make_terminal_operad() {
    static OperadPtr n = std::make_shared<CatOperad>(
        "N", terminal_component, "*", [](const CatOperad&, int, std::span<const int>, std::span<const int>) { return 0; },
        [](const CatOperad&, int, std::span<const int>, std::span<const int>) { return 0; });
    return n;
}

OperadPtr make_R_operad() {
    static OperadPtr r = std::make_shared<CatOperad>("R", r_component, "t", r_subst_obj, poset_subst_mor);
    return r;
}

OperadPtr make_R_mutant_operad() {
    return std::make_shared<CatOperad>("R-mutant", r_component, "t", r_mutant_subst_obj, poset_subst_mor);
}

OperadPtr dual_operad(const OperadPtr& t) {
    auto rule = t->component_rule();
    return std::make_shared<CatOperad>(
        dual_name(t->name()), [rule](int n) { return opposite_category(rule(n)); }, t->unit_name(), t->obj_rule(),
        t->mor_rule());
}

OperadPtr make_L_operad() {
    static OperadPtr l = dual_operad(make_R_operad());
    return l;
}

OperadPtr operad_by_name(std::string_view name) {
    if (name == "N") return make_terminal_operad();
    if (name == "R") return make_R_operad();
    if (name == "L") return make_L_operad();
    return nullptr;
}

namespace {

void for_each_arity_tuple(int len, int budget, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == len) {
        fn(cur);
        return;
    }
    for (int k = 0; k <= budget; ++k) {
        cur.push_back(k);
        for_each_arity_tuple(len, budget - k, cur, fn);
        cur.pop_back();
    }
}

// Odometer over a product of index ranges.
bool next_tuple(std::vector<int>& t, const std::vector<int>& sizes) {
    for (size_t i = t.size(); i-- > 0;) {
        if (++t[i] < sizes[i]) return true;
        t[i] = 0;
    }
    return false;
}

std::string shape_string(int n, const std::vector<int>& ks) {
    std::ostringstream s;
    s << "arity " << n << " with inner arities (";
    for (size_t i = 0; i < ks.size(); ++i) s << (i ? "," : "") << ks[i];
    s << ")";
    return s.str();
}

}  // namespace

Report check_operad_axioms(const CatOperad& T, int bound) {
    Report r;
    for (int n = 0; n <= bound; ++n)
        for (auto& v : check_category(T.component(n)))
            r.push_back({"component-" + v.law, "component " + std::to_string(n) + ": " + v.detail});
    const int e = T.unit();
    if (e < 0) {
        r.push_back({"unit", "unit object missing from component 1"});
        return r;
    }

    // Functoriality and typing of substitution.
    for (int n = 0; n <= bound; ++n) {
        std::vector<int> cur;
        for_each_arity_tuple(n, bound, cur, [&](const std::vector<int>& ks) {
            const int S = sum_of(ks);
            const FinCategory& res = T.component(S);
            const FinCategory& outer = T.component(n);
            std::vector<const FinCategory*> inner(n);
            std::vector<int> osz(n + 1), msz(n + 1);
            osz[0] = outer.num_objects();
            msz[0] = outer.num_morphisms();
            for (int i = 0; i < n; ++i) {
                inner[i] = &T.component(ks[i]);
                osz[i + 1] = inner[i]->num_objects();
                msz[i + 1] = inner[i]->num_morphisms();
            }
            auto comp = [&](int i) -> const FinCategory& { return i == 0 ? outer : *inner[i - 1]; };
            std::vector<int> t(n + 1, 0), s(n + 1), g(n + 1);
            do {
                int v = T.subst_obj(t[0], ks, std::span<const int>(t).subspan(1));
                if (v < 0 || v >= res.num_objects())
                    r.push_back({"subst-object-range", shape_string(n, ks)});
            } while (next_tuple(t, osz));
            std::fill(t.begin(), t.end(), 0);
            do {
                int v = T.subst_mor(t[0], ks, std::span<const int>(t).subspan(1));
                for (int i = 0; i <= n; ++i) {
                    s[i] = comp(i).src(t[i]);
                    g[i] = comp(i).tgt(t[i]);
                }
                int a = T.subst_obj(s[0], ks, std::span<const int>(s).subspan(1));
                int b = T.subst_obj(g[0], ks, std::span<const int>(g).subspan(1));
                if (v < 0 || v >= res.num_morphisms() || res.src(v) != a || res.tgt(v) != b) {
                    r.push_back({"subst-functor-type", shape_string(n, ks)});
                    continue;
                }
                bool all_id = true;
                for (int i = 0; i <= n; ++i) all_id = all_id && comp(i).is_identity(t[i]);
                if (all_id && !res.is_identity(v)) r.push_back({"subst-functor-identity", shape_string(n, ks)});
            } while (next_tuple(t, msz));
            if (res.is_thin()) return;
            // Composition preservation, needed only when parallel arrows can differ.
            std::vector<int> u(n + 1, 0), w(n + 1), c(n + 1);
            std::fill(t.begin(), t.end(), 0);
            do {
                std::fill(u.begin(), u.end(), 0);
                do {
                    bool ok = true;
                    for (int i = 0; i <= n && ok; ++i) {
                        c[i] = comp(i).compose(u[i], t[i]);
                        ok = c[i] >= 0;
                    }
                    if (!ok) continue;
                    int lhs = T.subst_mor(c[0], ks, std::span<const int>(c).subspan(1));
                    int rhs = res.compose(T.subst_mor(u[0], ks, std::span<const int>(u).subspan(1)),
                                          T.subst_mor(t[0], ks, std::span<const int>(t).subspan(1)));
                    if (lhs != rhs) r.push_back({"subst-functor-composition", shape_string(n, ks)});
                } while (next_tuple(u, msz));
            } while (next_tuple(t, msz));
        });
    }

    // Unit laws on objects and morphisms.
    const FinCategory& one = T.component(1);
    for (int k = 0; k <= bound; ++k) {
        const FinCategory& ck = T.component(k);
        const int ks1[1] = {k};
        for (int f = 0; f < ck.num_morphisms(); ++f) {
            const int fs[1] = {f};
            if (T.subst_mor(one.id(e), ks1, fs) != f)
                r.push_back({"unit-left", "e(" + ck.morphism_name(f) + ") in component " + std::to_string(k)});
        }
        for (int x = 0; x < ck.num_objects(); ++x) {
            const int xs[1] = {x};
            if (T.subst_obj(e, ks1, xs) != x)
                r.push_back({"unit-left", "e(" + ck.object_name(x) + ") in component " + std::to_string(k)});
        }
        std::vector<int> ones(k, 1), es(k, e), eids(k, one.id(e));
        for (int x = 0; x < ck.num_objects(); ++x)
            if (T.subst_obj(x, ones, es) != x)
                r.push_back({"unit-right", ck.object_name(x) + "(e,...,e) in component " + std::to_string(k)});
        for (int f = 0; f < ck.num_morphisms(); ++f)
            if (T.subst_mor(f, ones, eids) != f)
                r.push_back({"unit-right", ck.morphism_name(f) + "(1_e,...,1_e) in component " + std::to_string(k)});
    }

    // Associativity: x(x_i(y_ij)) = (x(x_i))(y_ij) whenever every intermediate arity is within bound.
    for (int n = 0; n <= bound; ++n) {
        std::vector<int> cur;
        for_each_arity_tuple(n, bound, cur, [&](const std::vector<int>& ks) {
            const int S = sum_of(ks);
            std::vector<int> cur2;
            for_each_arity_tuple(S, bound, cur2, [&](const std::vector<int>& ms) {
                const int total = sum_of(ms);
                const bool thin = T.component(total).is_thin();
                // Slot layout: [x | x_1..x_n | y_1..y_S].
                const int slots = 1 + n + S;
                std::vector<const FinCategory*> cat(slots);
                cat[0] = &T.component(n);
                for (int i = 0; i < n; ++i) cat[1 + i] = &T.component(ks[i]);
                for (int j = 0; j < S; ++j) cat[1 + n + j] = &T.component(ms[j]);
                std::vector<int> inner_total(n);
                for (int i = 0, j = 0; i < n; ++i) {
                    int s = 0;
                    for (int q = 0; q < ks[i]; ++q) s += ms[j + q];
                    inner_total[i] = s;
                    j += ks[i];
                }
                auto run = [&](bool on_mor) {
                    std::vector<int> sizes(slots), t(slots, 0), z(n);
                    for (int q = 0; q < slots; ++q)
                        sizes[q] = on_mor ? cat[q]->num_morphisms() : cat[q]->num_objects();
                    auto sub = [&](int x, std::span<const int> a, std::span<const int> b) {
                        return on_mor ? T.subst_mor(x, a, b) : T.subst_obj(x, a, b);
                    };
                    do {
                        const int* ys = t.data() + 1 + n;
                        bool ok = true;
                        for (int i = 0, j = 0; i < n; ++i) {
                            z[i] = sub(t[1 + i], std::span<const int>(ms).subspan(j, ks[i]),
                                       std::span<const int>(ys + j, ks[i]));
                            ok = ok && z[i] >= 0;
                            j += ks[i];
                        }
                        int lhs = ok ? sub(t[0], inner_total, z) : -1;
                        int xx = sub(t[0], ks, std::span<const int>(t).subspan(1, n));
                        int rhs = xx >= 0 ? sub(xx, ms, std::span<const int>(ys, S)) : -1;
                        if (lhs < 0 || lhs != rhs) {
                            std::ostringstream d;
                            d << shape_string(n, ks) << " and leaves (";
                            for (int j = 0; j < S; ++j) d << (j ? "," : "") << ms[j];
                            d << "): x=" << (on_mor ? cat[0]->morphism_name(t[0]) : cat[0]->object_name(t[0]));
                            d << " inner=(";
                            for (int i = 0; i < n; ++i)
                                d << (i ? "," : "")
                                  << (on_mor ? cat[1 + i]->morphism_name(t[1 + i]) : cat[1 + i]->object_name(t[1 + i]));
                            d << ") leaves=(";
                            for (int j = 0; j < S; ++j)
                                d << (j ? "," : "")
                                  << (on_mor ? cat[1 + n + j]->morphism_name(ys[j])
                                             : cat[1 + n + j]->object_name(ys[j]));
                            d << ")";
                            r.push_back({"associativity", d.str()});
                        }
                    } while (next_tuple(t, sizes));
                };
                run(false);
                if (!thin) run(true);
            });
        });
    }
    return r;
}

}  // namespace skewcat
