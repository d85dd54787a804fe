#include "skewcat/representability.hpp"

#include "json.hpp"

namespace skewcat {

namespace {

// The "tight" object of component(n): the one named like the unit.
int tight_object(const TMulticategory& s, int n) { return s.operad().object(n, s.operad().unit_name()); }

int nullary_object(const TMulticategory& s) { return s.operad().component(0).num_objects() == 1 ? 0 : -1; }

// Is u -> subst(u, [theta, 1_tail...]) a bijection from A_t(m, tail; c) onto A_x'(inputs, tail; c) for all c?
bool bijective_with_tail(const TMulticategory& s, int theta, std::span<const int> tail) {
    const int h = s.map_hom(theta);
    const int n = s.hom_arity(h);
    const int k = static_cast<int>(tail.size());
    const int m = s.hom_output(h);
    const CatOperad& op = s.operad();
    const int outer = tight_object(s, k + 1);
    std::vector<int> ks{n}, xs{s.hom_x(h)};
    for (int i = 0; i < k; ++i) {
        ks.push_back(1);
        xs.push_back(op.unit());
    }
    const int x2 = op.subst_obj(outer, ks, xs);
    std::vector<int> dom_in{m}, cod_in;
    for (int i = 0; i < n; ++i) cod_in.push_back(s.hom_input(h, i));
    dom_in.insert(dom_in.end(), tail.begin(), tail.end());
    cod_in.insert(cod_in.end(), tail.begin(), tail.end());
    std::vector<int> inner{theta};
    for (int b : tail) inner.push_back(s.identity(b));
    std::vector<char> hit(s.map_count(), 0);
    for (int c = 0; c < s.num_objects(); ++c) {
        const auto& dom = s.maps_in(s.hom_index(outer, dom_in, c));
        const auto& cod = s.maps_in(s.hom_index(x2, cod_in, c));
        if (dom.size() != cod.size()) return false;
        for (int u : dom) {
            int r = s.subst(u, inner);
            if (r < 0 || hit[r]) return false;
            hit[r] = 1;
        }
        for (int u : cod)
            if (!hit[u]) return false;
    }
    return true;
}

bool left_universal_up_to(const TMulticategory& s, int theta, int min_tail, int max_tail) {
    const int n = s.map_arity(theta);
    const int N = s.num_objects();
    for (int k = min_tail; k <= max_tail && n + k <= s.max_arity() && 1 + k <= s.max_arity(); ++k) {
        std::vector<int> tail(k);
        const int total = ipow(N, k);
        for (int code = 0; code < total; ++code) {
            tuple_decode(code, N, tail);
            if (!bijective_with_tail(s, theta, tail)) return false;
        }
    }
    return true;
}

UniversalMultimap make_entry(const TMulticategory& s, int theta) {
    HomKey k = s.hom_key(s.map_hom(theta));
    UniversalMultimap u{k.x, k.inputs, k.output, theta, is_universal(s, theta), false};
    u.left_universal = u.universal && is_left_universal(s, theta);
    return u;
}

template <class Fn>
void for_each_shape(const TMulticategory& s, Fn fn) {
    const int N = s.num_objects();
    for (int n = 0; n <= s.max_arity(); ++n) {
        std::vector<int> in(n);
        const int total = ipow(N, n);
        for (int x = 0; x < s.operad().component(n).num_objects(); ++x)
            for (int code = 0; code < total; ++code) {
                tuple_decode(code, N, in);
                fn(x, std::span<const int>(in));
            }
    }
}

}  // namespace

ClassifierTable::ClassifierTable(MulticatPtr m) : m_(std::move(m)) {
    entries_.resize(m_->num_objects() == 0 ? 0 : m_->hom_count() / m_->num_objects());
}

void ClassifierTable::set(UniversalMultimap u) {
    int k = key(u.x, u.inputs);
    entries_[k] = std::move(u);
}

bool ClassifierTable::complete() const { return !first_missing(); }

std::optional<int> ClassifierTable::first_missing() const {
    for (int k = 0; k < size(); ++k)
        if (entries_[k].theta < 0) return k;
    return std::nullopt;
}

std::string ClassifierTable::describe(int k) const {
    int h = k * m_->num_objects();
    std::string d = m_->describe_hom(h);
    return d.substr(0, d.rfind(';')) + ")";
}

bool is_universal(const TMulticategory& s, int theta) {
    const int h = s.map_hom(theta);
    HomKey k = s.hom_key(h);
    const int e = s.operad().unit();
    const int m[] = {k.output};
    const int inner[] = {theta};
    std::vector<char> hit(s.map_count(), 0);
    for (int b = 0; b < s.num_objects(); ++b) {
        const auto& dom = s.maps_in(s.hom_index(e, m, b));
        const auto& cod = s.maps_in(s.hom_index(k.x, k.inputs, b));
        if (dom.size() != cod.size()) return false;
        for (int u : dom) {
            int r = s.subst(u, inner);
            if (r < 0 || hit[r]) return false;
            hit[r] = 1;
        }
    }
    return true;
}

bool is_left_universal(const TMulticategory& s, int theta) {
    return left_universal_up_to(s, theta, 0, s.max_arity());
}

bool is_one_step_left_universal(const TMulticategory& s, int theta) { return left_universal_up_to(s, theta, 1, 1); }

std::optional<UniversalMultimap> find_universal(const TMulticategory& s, int x, std::span<const int> inputs) {
    const int n = static_cast<int>(inputs.size());
    if (n == 1 && x == s.operad().unit()) {
        int id = s.identity(inputs[0]);
        if (id < 0) return std::nullopt;
        UniversalMultimap u = make_entry(s, id);
        if (!u.universal) return std::nullopt;
        return u;
    }
    for (int m = 0; m < s.num_objects(); ++m)
        for (int theta : s.maps_in(s.hom_index(x, inputs, m)))
            if (is_universal(s, theta)) return make_entry(s, theta);
    return std::nullopt;
}

WeakRepresentability weak_representability(const MulticatPtr& s) {
    WeakRepresentability w{true, ClassifierTable(s), {}};
    for_each_shape(*s, [&](int x, std::span<const int> in) {
        auto u = find_universal(*s, x, in);
        if (u) {
            w.table.set(std::move(*u));
        } else if (w.holds) {
            w.holds = false;
            w.failure = w.table.describe(w.table.key(x, in));
        }
    });
    return w;
}

bool is_weakly_representable(const MulticatPtr& s) { return weak_representability(s).holds; }

namespace {

bool one_step_everywhere(const ClassifierTable& t) {
    const TMulticategory& s = t.multicat();
    for (int k = 0; k < t.size(); ++k) {
        int theta = t.at(k).theta;
        if (theta < 0) return false;
        if (!is_one_step_left_universal(s, theta)) return false;
    }
    return true;
}

}  // namespace

bool is_left_representable(const MulticatPtr& s) {
    auto w = weak_representability(s);
    return w.holds && one_step_everywhere(w.table);
}

std::optional<BaseClassifiers> find_base_classifiers(const MulticatPtr& s) {
    BaseClassifiers b;
    const int z = nullary_object(*s);
    const int t2 = tight_object(*s, 2);
    if (z < 0 || t2 < 0 || s->max_arity() < 2) return std::nullopt;
    auto nul = find_universal(*s, z, std::span<const int>());
    if (!nul) return std::nullopt;
    b.nullary = *nul;
    for (int a = 0; a < s->num_objects(); ++a)
        for (int c = 0; c < s->num_objects(); ++c) {
            const int in[] = {a, c};
            auto u = find_universal(*s, t2, in);
            if (!u) return std::nullopt;
            b.binary.push_back(*u);
        }
    return b;
}

ClassifierTable build_inductive_classifiers(const MulticatPtr& sp, const BaseClassifiers& base) {
    const TMulticategory& s = *sp;
    const CatOperad& op = s.operad();
    const int N = s.num_objects();
    if (static_cast<int>(base.binary.size()) != N * N || base.nullary.theta < 0)
        throw StructuralError("missing nullary or binary classifier");
    ClassifierTable t(sp);
    const int t2 = tight_object(s, 2);
    for_each_shape(s, [&](int x, std::span<const int> in) {
        const int n = static_cast<int>(in.size());
        if (n == 0) {
            t.set(base.nullary);
            return;
        }
        if (n == 1 && x == op.unit()) {
            t.set(make_entry(s, s.identity(in[0])));
            return;
        }
        const int ks[] = {n - 1, 1};
        int prev = -1;
        for (int y = 0; y < op.component(n - 1).num_objects() && prev < 0; ++y) {
            const int xs[] = {y, op.unit()};
            if (op.subst_obj(t2, ks, xs) == x) prev = y;
        }
        if (prev < 0) throw StructuralError("no inductive decomposition of " + op.component(n).object_name(x));
        const UniversalMultimap& p = t.at(prev, in.first(n - 1));
        const UniversalMultimap& bin = base.binary[p.classifier * N + in[n - 1]];
        if (bin.theta < 0 || p.theta < 0) throw StructuralError("missing tight binary classifier");
        const int inner[] = {p.theta, s.identity(in[n - 1])};
        int theta = s.subst(bin.theta, inner);
        if (theta < 0) throw StructuralError("substitution undefined while building classifiers");
        t.set(make_entry(s, theta));
    });
    return t;
}

RepresentabilityConditions evaluate_representability_conditions(const MulticatPtr& s) {
    RepresentabilityConditions p;
    auto w = weak_representability(s);
    if (w.holds) {
        p.c1 = true;
        for (int k = 0; k < w.table.size() && p.c1; ++k) p.c1 = w.table.at(k).left_universal;
        p.c4 = one_step_everywhere(w.table);
    }
    auto base = find_base_classifiers(s);
    if (base) {
        auto ind = build_inductive_classifiers(s, *base);
        p.c2 = true;
        for (int k = 0; k < ind.size() && p.c2; ++k) p.c2 = ind.at(k).universal;
        p.c3 = base->nullary.left_universal;
        for (auto& b : base->binary) p.c3 = p.c3 && b.left_universal;
    }
    return p;
}

namespace {

std::string flags(std::initializer_list<bool> v) {
    std::string s;
    int i = 1;
    for (bool b : v) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(i++) + ")=" + (b ? "true" : "false");
    return s;
}

}  // namespace

Report check_prop47_equivalences(const MulticatPtr& s) {
    RepresentabilityConditions p = evaluate_representability_conditions(s);
    if (p.agree()) return {};
    return {{"representability-conditions-disagree", flags({p.c1, p.c2, p.c3, p.c4})}};
}

std::optional<ClosedStructure> find_closed_structure(const MulticatPtr& sp) {
    const TMulticategory& s = *sp;
    const CatOperad& op = s.operad();
    const int N = s.num_objects();
    const int t2 = tight_object(s, 2);
    if (t2 < 0 || s.max_arity() < 2) return std::nullopt;
    ClosedStructure cs{std::vector<int>(static_cast<size_t>(N) * N, -1), std::vector<int>(static_cast<size_t>(N) * N, -1), {}};

    auto works = [&](int X, int b, int c, int e) {
        std::vector<char> hit(s.map_count(), 0);
        for (int n = 0; n + 1 <= s.max_arity(); ++n) {
            std::vector<int> in(n), in2(n + 1);
            const int total = ipow(N, n);
            const int ks[] = {n, 1};
            for (int x = 0; x < op.component(n).num_objects(); ++x) {
                const int xs[] = {x, op.unit()};
                const int x2 = op.subst_obj(t2, ks, xs);
                for (int code = 0; code < total; ++code) {
                    tuple_decode(code, N, in);
                    std::copy(in.begin(), in.end(), in2.begin());
                    in2[n] = b;
                    const auto& dom = s.maps_in(s.hom_index(x, in, X));
                    const auto& cod = s.maps_in(s.hom_index(x2, in2, c));
                    if (dom.size() != cod.size()) return false;
                    for (int f : dom) {
                        const int inner[] = {f, s.identity(b)};
                        int r = s.subst(e, inner);
                        if (r < 0 || hit[r]) return false;
                        hit[r] = 1;
                    }
                }
            }
        }
        return true;
    };

    for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
            bool found = false;
            for (int X = 0; X < N && !found; ++X) {
                const int in[] = {X, b};
                for (int e : s.maps_in(s.hom_index(t2, in, c)))
                    if (works(X, b, c, e)) {
                        cs.hom[b * N + c] = X;
                        cs.eval[b * N + c] = e;
                        found = true;
                        break;
                    }
            }
            if (!found) return std::nullopt;
        }

    // [u,v] by Yoneda: the unique f with e'(f, 1) = v(e(1, u))
    const int e1 = op.unit();
    for (int b2 = 0; b2 < N; ++b2)
        for (int b = 0; b < N; ++b) {
            const int ub[] = {b2};
            for (int u : s.maps_in(s.hom_index(e1, ub, b)))
                for (int c = 0; c < N; ++c)
                    for (int c2 = 0; c2 < N; ++c2) {
                        const int vc[] = {c};
                        for (int v : s.maps_in(s.hom_index(e1, vc, c2))) {
                            const int X = cs.hom[b * N + c], X2 = cs.hom[b2 * N + c2];
                            const int in1[] = {s.identity(X), u};
                            const int inner = s.subst(cs.eval[b * N + c], in1);
                            const int one[] = {inner};
                            const int target = s.subst(v, one);
                            const int xin[] = {X};
                            int found = -1;
                            for (int f : s.maps_in(s.hom_index(e1, xin, X2))) {
                                const int in2[] = {f, s.identity(b2)};
                                if (s.subst(cs.eval[b2 * N + c2], in2) == target) {
                                    found = f;
                                    break;
                                }
                            }
                            cs.hom_functor[(static_cast<long long>(u) << 32) | static_cast<unsigned>(v)] = found;
                        }
                    }
        }
    return cs;
}

Report check_hom_functor(const TMulticategory& s, const ClosedStructure& cs) {
    Report rep;
    const int N = s.num_objects();
    const int e = s.operad().unit();
    auto unary = [&](int a, int b) -> const std::vector<int>& {
        const int in[] = {a};
        return s.maps_in(s.hom_index(e, in, b));
    };
    auto comp = [&](int g, int f) {
        const int one[] = {f};
        return s.subst(g, one);
    };
    for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
            int r = cs.hom_on(s.identity(b), s.identity(c));
            if (r != s.identity(cs.hom[b * N + c]))
                rep.push_back({"hom-functor-identity", "[" + s.object_name(b) + "," + s.object_name(c) + "]"});
        }
    // [u u', v' v] = [u', v'] [u, v]
    for (int b = 0; b < N; ++b)
        for (int b1 = 0; b1 < N; ++b1)
            for (int u : unary(b1, b))
                for (int b2 = 0; b2 < N; ++b2)
                    for (int u2 : unary(b2, b1))
                        for (int c = 0; c < N; ++c)
                            for (int c1 = 0; c1 < N; ++c1)
                                for (int v : unary(c, c1))
                                    for (int c2 = 0; c2 < N; ++c2)
                                        for (int v2 : unary(c1, c2)) {
                                            int left = cs.hom_on(comp(u, u2), comp(v2, v));
                                            int right = comp(cs.hom_on(u2, v2), cs.hom_on(u, v));
                                            if (left < 0 || left != right)
                                                rep.push_back({"hom-functor-composition",
                                                               s.map_name(u) + "," + s.map_name(u2) + "," +
                                                                   s.map_name(v) + "," + s.map_name(v2)});
                                        }
    return rep;
}

ClosednessConditions evaluate_closedness_conditions(const MulticatPtr& sp) {
    ClosednessConditions p;
    auto cs = find_closed_structure(sp);
    if (!cs) return p;
    p.closed = true;
    const TMulticategory& s = *sp;
    const int N = s.num_objects();
    const int e = s.operad().unit();
    p.c1 = is_left_representable(sp);
    p.c2 = is_weakly_representable(sp);
    p.c3 = find_base_classifiers(sp).has_value();
    auto nul = find_universal(s, 0, std::span<const int>());
    p.c4 = nul.has_value();
    auto unary = [&](int a, int b) -> const std::vector<int>& {
        const int in[] = {a};
        return s.maps_in(s.hom_index(e, in, b));
    };
    // left adjoint to [b,-] at a: some (m, eta: a -> [b,m]) with u -> [1,u] eta bijective
    for (int b = 0; b < N && p.c4; ++b)
        for (int a = 0; a < N && p.c4; ++a) {
            bool found = false;
            for (int m = 0; m < N && !found; ++m)
                for (int eta : unary(a, cs->hom[b * N + m])) {
                    bool bij = true;
                    for (int c = 0; c < N && bij; ++c) {
                        const auto& dom = unary(m, c);
                        const auto& cod = unary(a, cs->hom[b * N + c]);
                        if (dom.size() != cod.size()) {
                            bij = false;
                            break;
                        }
                        std::vector<char> hit(s.map_count(), 0);
                        for (int u : dom) {
                            const int one[] = {eta};
                            int r = s.subst(cs->hom_on(s.identity(b), u), one);
                            if (r < 0 || hit[r]) {
                                bij = false;
                                break;
                            }
                            hit[r] = 1;
                        }
                    }
                    if (bij) {
                        found = true;
                        break;
                    }
                }
            p.c4 = found;
        }
    return p;
}

Report check_prop411(const MulticatPtr& s) {
    ClosednessConditions p = evaluate_closedness_conditions(s);
    if (!p.closed) return {{"not-closed", "no closed structure within the truncation"}};
    if (p.agree()) return {};
    return {{"closedness-conditions-disagree", flags({p.c1, p.c2, p.c3, p.c4})}};
}

std::string analyze_json(const MulticatPtr& sp) {
    const TMulticategory& s = *sp;
    using nlohmann::ordered_json;
    ordered_json j;
    auto w = weak_representability(sp);
    bool left = w.holds && one_step_everywhere(w.table);
    auto cs = find_closed_structure(sp);
    auto nul = find_universal(s, 0, std::span<const int>());
    j["weakly_representable"] = w.holds;
    j["left_representable"] = left;
    j["closed"] = cs.has_value();
    j["closed_with_unit"] = cs.has_value() && nul.has_value();
    ordered_json wit = ordered_json::object();
    if (!w.holds) wit["missing_classifier"] = w.failure;
    if (nul) wit["nullary_classifier"] = {{"object", s.object_name(nul->classifier)}, {"map", s.map_name(nul->theta)}};
    if (auto base = find_base_classifiers(sp)) {
        ordered_json t = ordered_json::array();
        for (auto& b : base->binary)
            t.push_back({s.object_name(b.inputs[0]), s.object_name(b.inputs[1]), s.object_name(b.classifier),
                         s.map_name(b.theta)});
        wit["tensor"] = t;
    }
    if (cs) {
        ordered_json h = ordered_json::array();
        const int N = s.num_objects();
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                h.push_back({s.object_name(b), s.object_name(c), s.object_name(cs->hom[b * N + c]),
                             s.map_name(cs->eval[b * N + c])});
        wit["internal_hom"] = h;
    }
    j["witnesses"] = wit;
    j["checked_up_to_arity"] = s.max_arity();
    return j.dump(2);
}

}  // namespace skewcat
