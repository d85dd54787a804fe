#include "skewcat/tmulticat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skewcat {

TMulticategory::TMulticategory(OperadPtr op, std::vector<std::string> objects, int max_arity)
    : op_(std::move(op)), objects_(std::move(objects)), max_arity_(max_arity) {
    if (max_arity_ < 1) throw StructuralError("max_arity must be at least 1");
    std::set<std::string> seen(objects_.begin(), objects_.end());
    if (seen.size() != objects_.size()) throw StructuralError("duplicate object");
    const int N = num_objects();
    block_of_.resize(max_arity_ + 1);
    int next = 0;
    for (int n = 0; n <= max_arity_; ++n) {
        const int nx = op_->component(n).num_objects();
        const int size = ipow(N, n) * N;
        for (int x = 0; x < nx; ++x) {
            int blk = static_cast<int>(block_start_.size());
            block_of_[n].push_back(blk);
            block_start_.push_back(next);
            for (int k = 0; k < size; ++k) {
                h_block_.push_back(blk);
                hom_arity_.push_back(n);
                hom_x_.push_back(x);
            }
            next += size;
        }
    }
    hom_maps_.resize(next);
    by_out_arity_.resize(static_cast<size_t>(N) * (max_arity_ + 1));
    identity_.assign(N, -1);
}

int TMulticategory::find_object(std::string_view name) const {
    for (int a = 0; a < num_objects(); ++a)
        if (objects_[a] == name) return a;
    return -1;
}

int TMulticategory::hom_index(int x, std::span<const int> inputs, int output) const {
    const int n = static_cast<int>(inputs.size());
    if (n > max_arity_ || x < 0 || x >= static_cast<int>(block_of_[n].size())) return -1;
    return block_start_[block_of_[n][x]] + tuple_code(inputs, num_objects()) * num_objects() + output;
}

int TMulticategory::hom_input(int h, int i) const {
    const int N = num_objects();
    int code = (h - block_start_[h_block_[h]]) / N;
    return (code / ipow(N, hom_arity_[h] - 1 - i)) % N;
}

HomKey TMulticategory::hom_key(int h) const {
    HomKey k;
    k.x = hom_x_[h];
    k.output = hom_output(h);
    k.inputs.resize(hom_arity_[h]);
    for (int i = 0; i < hom_arity_[h]; ++i) k.inputs[i] = hom_input(h, i);
    return k;
}

int TMulticategory::add_map(int h, std::string name) {
    if (h < 0 || h >= hom_count()) throw StructuralError("no such hom for multimap " + name);
    if (name_index_.count(name)) throw StructuralError("duplicate multimap id " + name);
    int m = map_count();
    name_index_.emplace(name, m);
    names_.push_back(std::move(name));
    map_hom_.push_back(h);
    hom_maps_[h].push_back(m);
    by_out_arity_[hom_output(h) * (max_arity_ + 1) + hom_arity_[h]].push_back(m);
    return m;
}

int TMulticategory::find_map(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    return it == name_index_.end() ? -1 : it->second;
}

int TMulticategory::act(int sigma, int m) const {
    const FinCategory& c = op_->component(map_arity(m));
    if (sigma < 0 || sigma >= c.num_morphisms() || c.src(sigma) != hom_x(map_hom(m))) return -1;
    if (c.is_identity(sigma)) return m;
    if (act_fn_) return act_fn_(sigma, m);
    auto it = act_table_.find((static_cast<long long>(sigma) << 32) | static_cast<unsigned>(m));
    return it == act_table_.end() ? -1 : it->second;
}

void TMulticategory::set_action(int sigma, int m, int result) {
    act_table_[(static_cast<long long>(sigma) << 32) | static_cast<unsigned>(m)] = result;
}

int TMulticategory::subst(int outer, std::span<const int> inners) const {
    if (inners.empty() && map_arity(outer) == 0) return outer;
    if (subst_fn_) return subst_fn_(outer, inners);
    thread_local std::vector<int> key;
    key.clear();
    key.push_back(outer);
    key.insert(key.end(), inners.begin(), inners.end());
    auto it = subst_table_.find(key);
    return it == subst_table_.end() ? -1 : it->second;
}

void TMulticategory::set_subst(int outer, std::span<const int> inners, int result) {
    std::vector<int> key{outer};
    key.insert(key.end(), inners.begin(), inners.end());
    subst_table_[std::move(key)] = result;
}

bool TMulticategory::thin() const {
    for (auto& h : hom_maps_)
        if (h.size() > 1) return false;
    return true;
}

void TMulticategory::for_each_inner_tuple(std::span<const int> outputs, int budget,
                                          const std::function<void(std::span<const int>)>& fn) const {
    const int n = static_cast<int>(outputs.size());
    std::vector<int> cur(n);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            fn(cur);
            return;
        }
        for (int k = 0; k <= left; ++k)
            for (int f : maps_with(outputs[i], k)) {
                cur[i] = f;
                rec(i + 1, left - k);
            }
    };
    rec(0, budget);
}

void TMulticategory::for_each_subst_tuple(const std::function<void(int, std::span<const int>)>& fn) const {
    for (int g = 0; g < map_count(); ++g) {
        const int n = map_arity(g);
        if (n == 0) continue;
        HomKey k = hom_key(map_hom(g));
        for_each_inner_tuple(k.inputs, max_arity_, [&](std::span<const int> fs) { fn(g, fs); });
    }
}

int TMulticategory::expected_result_hom(int outer, std::span<const int> inners) const {
    const int h = map_hom(outer);
    const int n = hom_arity_[h];
    if (static_cast<int>(inners.size()) != n) return -1;
    if (n == 0) return h;
    std::vector<int> ks(n), xs(n), inputs;
    for (int i = 0; i < n; ++i) {
        int fh = map_hom(inners[i]);
        if (hom_output(fh) != hom_input(h, i)) return -1;
        ks[i] = hom_arity_[fh];
        xs[i] = hom_x_[fh];
        for (int j = 0; j < ks[i]; ++j) inputs.push_back(hom_input(fh, j));
    }
    if (static_cast<int>(inputs.size()) > max_arity_) return -1;
    int x = op_->subst_obj(hom_x_[h], ks, xs);
    return hom_index(x, inputs, hom_output(h));
}

std::string TMulticategory::describe_hom(int h) const {
    HomKey k = hom_key(h);
    std::vector<std::string> in;
    for (int a : k.inputs) in.push_back(objects_[a]);
    return op_->component(k.arity()).object_name(k.x) + "(" + join_names(in) + ";" + objects_[k.output] + ")";
}

namespace {

std::string call_str(const TMulticategory& m, int g, std::span<const int> fs) {
    std::vector<std::string> n;
    for (int f : fs) n.push_back(f < 0 ? "?" : m.map_name(f));
    return m.map_name(g) + "(" + join_names(n) + ")";
}

std::string nm(const TMulticategory& m, int f) { return f < 0 ? "<none>" : m.map_name(f); }

// Unit-law witnesses for an operad object: ids of the all-identity inner morphisms.
std::vector<int> identity_inners(const CatOperad& op, std::span<const int> ks, std::span<const int> xs) {
    std::vector<int> ids(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ids[i] = op.component(ks[i]).id(xs[i]);
    return ids;
}

}  // namespace

Report check_tmulticat(const TMulticategory& m) {
    Report rep;
    const CatOperad& op = m.operad();
    const int e = op.unit();
    const bool thin = m.thin();

    for (int a = 0; a < m.num_objects(); ++a) {
        const int ia[] = {a};
        int id = m.identity(a);
        if (id < 0 || id >= m.map_count() || m.map_hom(id) != m.hom_index(e, ia, a))
            rep.push_back({"identity-missing", "object " + m.object_name(a)});
    }
    if (!rep.empty()) return rep;

    for (int g = 0; g < m.map_count(); ++g) {
        const int h = m.map_hom(g);
        const int n = m.hom_arity(h);
        const FinCategory& c = op.component(n);
        HomKey k = m.hom_key(h);
        for (int s = 0; s < c.num_morphisms(); ++s) {
            if (c.src(s) != k.x || c.is_identity(s)) continue;
            int r = m.act(s, g);
            if (r < 0) {
                rep.push_back({"action-missing", c.morphism_name(s) + " on " + m.map_name(g)});
                continue;
            }
            if (m.map_hom(r) != m.hom_index(c.tgt(s), k.inputs, k.output)) {
                rep.push_back({"action-type", c.morphism_name(s) + " on " + m.map_name(g) + " gives " + m.map_name(r)});
                continue;
            }
            for (int t = 0; t < c.num_morphisms(); ++t) {
                if (c.src(t) != c.tgt(s) || c.is_identity(t)) continue;
                int r2 = m.act(t, r);
                int r3 = m.act(c.compose(t, s), g);
                if (r2 >= 0 && r3 >= 0 && r2 != r3)
                    rep.push_back({"action-composition", c.morphism_name(t) + " after " + c.morphism_name(s) +
                                                             " on " + m.map_name(g)});
            }
        }
    }

    bool typed = true;
    m.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        int r = m.subst(g, fs);
        if (r < 0 || r >= m.map_count()) {
            rep.push_back({"subst-missing", call_str(m, g, fs)});
            typed = false;
        } else if (m.map_hom(r) != m.expected_result_hom(g, fs)) {
            rep.push_back({"subst-type", call_str(m, g, fs) + " = " + m.map_name(r) + " not in " +
                                             m.describe_hom(m.expected_result_hom(g, fs))});
            typed = false;
        }
    });
    if (!typed || thin) return rep;

    for (int g = 0; g < m.map_count(); ++g) {
        const int h = m.map_hom(g);
        const int c = m.hom_output(h);
        const int one[] = {g};
        int r = m.subst(m.identity(c), one);
        if (r != g) rep.push_back({"identity-left", "g=" + m.map_name(g) + ": 1_c(g)=" + nm(m, r)});
        const int n = m.hom_arity(h);
        if (n == 0) continue;
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = m.identity(m.hom_input(h, i));
        r = m.subst(g, ids);
        if (r != g) rep.push_back({"identity-right", "g=" + m.map_name(g) + ": g(1,..,1)=" + nm(m, r)});
    }

    // g(f_1(h_1), ..., f_n(h_n)) = g(f_1, ..., f_n)(h_1, ..., h_n)
    m.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        const int gf = m.subst(g, fs);
        std::vector<int> outs, ks;
        for (int f : fs) {
            HomKey k = m.hom_key(m.map_hom(f));
            ks.push_back(k.arity());
            outs.insert(outs.end(), k.inputs.begin(), k.inputs.end());
        }
        const std::vector<int> fv(fs.begin(), fs.end());
        std::vector<int> inner(fv.size());
        m.for_each_inner_tuple(outs, m.max_arity(), [&](std::span<const int> hs) {
            size_t pos = 0;
            for (size_t i = 0; i < fv.size(); ++i) {
                inner[i] = m.subst(fv[i], hs.subspan(pos, ks[i]));
                pos += ks[i];
            }
            int left = m.subst(g, inner);
            int right = m.subst(gf, hs);
            if (left != right)
                rep.push_back({"associativity", "g=" + m.map_name(g) + " f=" + call_str(m, g, fv) + " h=(" +
                                                    [&] {
                                                        std::vector<std::string> s;
                                                        for (int x : hs) s.push_back(m.map_name(x));
                                                        return join_names(s);
                                                    }() +
                                                    "): " + nm(m, left) + " vs " + nm(m, right)});
        });
    });

    // naturality in the operad variables, one variable at a time
    m.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        const int n = static_cast<int>(fs.size());
        const int gf = m.subst(g, fs);
        std::vector<int> ks(n), xs(n);
        for (int i = 0; i < n; ++i) {
            ks[i] = m.map_arity(fs[i]);
            xs[i] = m.hom_x(m.map_hom(fs[i]));
        }
        const FinCategory& cn = op.component(n);
        const int gx = m.hom_x(m.map_hom(g));
        std::vector<int> ids = identity_inners(op, ks, xs);
        for (int s = 0; s < cn.num_morphisms(); ++s) {
            if (cn.src(s) != gx || cn.is_identity(s)) continue;
            int left = m.subst(m.act(s, g), fs);
            int right = m.act(op.subst_mor(s, ks, ids), gf);
            if (left != right)
                rep.push_back({"naturality", cn.morphism_name(s) + " on outer of " + call_str(m, g, fs) + ": " +
                                                 nm(m, left) + " vs " + nm(m, right)});
        }
        for (int i = 0; i < n; ++i) {
            const FinCategory& ci = op.component(ks[i]);
            for (int s = 0; s < ci.num_morphisms(); ++s) {
                if (ci.src(s) != xs[i] || ci.is_identity(s)) continue;
                std::vector<int> fs2(fs.begin(), fs.end());
                fs2[i] = m.act(s, fs[i]);
                std::vector<int> mv = ids;
                mv[i] = s;
                int left = m.subst(g, fs2);
                int right = m.act(op.subst_mor(cn.id(gx), ks, mv), gf);
                if (left != right)
                    rep.push_back({"naturality", ci.morphism_name(s) + " on inner " + std::to_string(i + 1) + " of " +
                                                     call_str(m, g, fs) + ": " + nm(m, left) + " vs " +
                                                     nm(m, right)});
            }
        }
    });
    return rep;
}

bool same_tables(const TMulticategory& a, const TMulticategory& b) {
    if (a.operad().name() != b.operad().name() || a.max_arity() != b.max_arity() || a.objects() != b.objects() ||
        a.map_count() != b.map_count() || a.hom_count() != b.hom_count())
        return false;
    std::vector<int> to_b(a.map_count());
    for (int h = 0; h < a.hom_count(); ++h) {
        std::set<std::string> na, nb;
        for (int f : a.maps_in(h)) na.insert(a.map_name(f));
        for (int f : b.maps_in(h)) nb.insert(b.map_name(f));
        if (na != nb) return false;
    }
    for (int f = 0; f < a.map_count(); ++f) to_b[f] = b.find_map(a.map_name(f));
    for (int x = 0; x < a.num_objects(); ++x) {
        int ia = a.identity(x), ib = b.identity(x);
        if ((ia < 0) != (ib < 0) || (ia >= 0 && to_b[ia] != ib)) return false;
    }
    auto tr = [&](int f) { return f < 0 ? -1 : to_b[f]; };
    for (int f = 0; f < a.map_count(); ++f) {
        const FinCategory& c = a.operad().component(a.map_arity(f));
        for (int s = 0; s < c.num_morphisms(); ++s)
            if (c.src(s) == a.hom_x(a.map_hom(f)) && tr(a.act(s, f)) != b.act(s, to_b[f])) return false;
    }
    bool same = true;
    a.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        if (!same) return;
        std::vector<int> fb(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) fb[i] = to_b[fs[i]];
        if (tr(a.subst(g, fs)) != b.subst(to_b[g], fb)) same = false;
    });
    return same;
}

FinCategory underlying_category(const TMulticategory& m) {
    const int e = m.operad().unit();
    CategoryData d;
    d.objects = m.objects();
    std::vector<int> unary;
    for (int a = 0; a < m.num_objects(); ++a) {
        d.identities[m.object_name(a)] = m.map_name(m.identity(a));
        const int ia[] = {a};
        for (int b = 0; b < m.num_objects(); ++b)
            for (int f : m.maps_in(m.hom_index(e, ia, b))) {
                d.morphisms.push_back({m.map_name(f), m.object_name(a), m.object_name(b)});
                unary.push_back(f);
            }
    }
    for (int g : unary)
        for (int f : unary) {
            if (m.hom_input(m.map_hom(g), 0) != m.hom_output(m.map_hom(f))) continue;
            const int one[] = {f};
            int r = m.subst(g, one);
            if (r < 0) throw StructuralError("missing unary composite " + call_str(m, g, one));
            d.compose.push_back({m.map_name(g), m.map_name(f), m.map_name(r)});
        }
    return FinCategory::from_data(d);
}

int HomAction::post(int u, int g) const {
    const int one[] = {g};
    return m->subst(u, one);
}

int HomAction::pre(int g, int i, int v) const {
    const int h = m->map_hom(g);
    std::vector<int> ids(m->hom_arity(h));
    for (int k = 0; k < static_cast<int>(ids.size()); ++k) ids[k] = m->identity(m->hom_input(h, k));
    ids[i] = v;
    return m->subst(g, ids);
}

HomAction extend_hom_action(const TMulticategory& m) { return HomAction{&m}; }

Report check_hom_action(const TMulticategory& m) {
    Report rep;
    HomAction H = extend_hom_action(m);
    const int e = m.operad().unit();
    const int N = m.num_objects();
    auto unary = [&](int a, int b) -> const std::vector<int>& {
        const int ia[] = {a};
        return m.maps_in(m.hom_index(e, ia, b));
    };
    auto fail = [&](const std::string& law, const std::string& what) { rep.push_back({law, what}); };

    for (int g = 0; g < m.map_count(); ++g) {
        const int h = m.map_hom(g);
        const int n = m.hom_arity(h);
        const int b = m.hom_output(h);
        if (H.post(m.identity(b), g) != g) fail("hom-action-identity", "post on " + m.map_name(g));
        for (int i = 0; i < n; ++i)
            if (H.pre(g, i, m.identity(m.hom_input(h, i))) != g)
                fail("hom-action-identity", "pre slot " + std::to_string(i + 1) + " on " + m.map_name(g));

        for (int c = 0; c < N; ++c)
            for (int u : unary(b, c)) {
                for (int d = 0; d < N; ++d)
                    for (int u2 : unary(c, d))
                        if (H.post(u2, H.post(u, g)) != H.post(H.post(u2, u), g))
                            fail("hom-action-composition", "post " + m.map_name(u2) + "," + m.map_name(u) + " on " +
                                                               m.map_name(g));
                for (int i = 0; i < n; ++i)
                    for (int a = 0; a < N; ++a)
                        for (int v : unary(a, m.hom_input(h, i)))
                            if (H.post(u, H.pre(g, i, v)) != H.pre(H.post(u, g), i, v))
                                fail("hom-action-bifunctor", m.map_name(u) + " and " + m.map_name(v) + " on " +
                                                                 m.map_name(g));
                const FinCategory& cn = m.operad().component(n);
                for (int s = 0; s < cn.num_morphisms(); ++s)
                    if (cn.src(s) == m.hom_x(h) && m.act(s, H.post(u, g)) != H.post(u, m.act(s, g)))
                        fail("hom-action-operad", cn.morphism_name(s) + " and post " + m.map_name(u) + " on " +
                                                      m.map_name(g));
            }

        for (int i = 0; i < n; ++i)
            for (int a = 0; a < N; ++a)
                for (int v : unary(a, m.hom_input(h, i))) {
                    for (int a2 = 0; a2 < N; ++a2)
                        for (int v2 : unary(a2, a))
                            if (H.pre(H.pre(g, i, v), i, v2) != H.pre(g, i, H.post(v, v2)))
                                fail("hom-action-composition", "pre slot " + std::to_string(i + 1) + " on " +
                                                                   m.map_name(g));
                    for (int k = i + 1; k < n; ++k)
                        for (int a3 = 0; a3 < N; ++a3)
                            for (int w : unary(a3, m.hom_input(h, k)))
                                if (H.pre(H.pre(g, i, v), k, w) != H.pre(H.pre(g, k, w), i, v))
                                    fail("hom-action-bifunctor", "slots " + std::to_string(i + 1) + "," +
                                                                     std::to_string(k + 1) + " on " + m.map_name(g));
                    const FinCategory& cn = m.operad().component(n);
                    for (int s = 0; s < cn.num_morphisms(); ++s)
                        if (cn.src(s) == m.hom_x(h) && m.act(s, H.pre(g, i, v)) != H.pre(m.act(s, g), i, v))
                            fail("hom-action-operad", cn.morphism_name(s) + " and pre " + m.map_name(v) + " on " +
                                                          m.map_name(g));
                }
    }

    // compatibility with substitution
    m.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        const int gf = m.subst(g, fs);
        const int c = m.hom_output(m.map_hom(g));
        for (int d = 0; d < N; ++d)
            for (int u : unary(c, d))
                if (H.post(u, gf) != m.subst(H.post(u, g), fs))
                    fail("hom-action-subst", "post " + m.map_name(u) + " on " + call_str(m, g, fs));
        int offset = 0;
        for (size_t i = 0; i < fs.size(); ++i) {
            const int fh = m.map_hom(fs[i]);
            const int bi = m.hom_output(fh);
            for (int a = 0; a < N; ++a)
                for (int w : unary(a, bi)) {
                    std::vector<int> fs2(fs.begin(), fs.end());
                    fs2[i] = H.post(w, fs[i]);
                    if (m.subst(g, fs2) != m.subst(H.pre(g, static_cast<int>(i), w), fs))
                        fail("hom-action-subst", "slot " + std::to_string(i + 1) + " " + m.map_name(w) + " in " +
                                                     call_str(m, g, fs));
                }
            for (int k = 0; k < m.hom_arity(fh); ++k)
                for (int a = 0; a < N; ++a)
                    for (int v : unary(a, m.hom_input(fh, k))) {
                        std::vector<int> fs2(fs.begin(), fs.end());
                        fs2[i] = H.pre(fs[i], k, v);
                        if (m.subst(g, fs2) != H.pre(gf, offset + k, v))
                            fail("hom-action-subst", "input " + std::to_string(offset + k + 1) + " " +
                                                         m.map_name(v) + " in " + call_str(m, g, fs));
                    }
            offset += m.hom_arity(fh);
        }
    });
    return rep;
}

// ---- skew views ----

bool is_skew(const TMulticategory& m) { return m.operad().name() == "R"; }

int r_object(const TMulticategory& m, int n, char which) {
    return m.operad().object(n, which == 't' ? "t" : "l");
}

int tight_hom(const TMulticategory& s, std::span<const int> inputs, int output) {
    int t = r_object(s, static_cast<int>(inputs.size()), 't');
    return t < 0 ? -1 : s.hom_index(t, inputs, output);
}

int loose_hom(const TMulticategory& s, std::span<const int> inputs, int output) {
    return s.hom_index(r_object(s, static_cast<int>(inputs.size()), 'l'), inputs, output);
}

int lambda_of(const TMulticategory& s, int n) { return s.operad().component(n).find_morphism("lambda"); }

bool is_tight(const TMulticategory& s, int m) {
    return s.map_arity(m) > 0 && s.hom_x(s.map_hom(m)) == r_object(s, s.map_arity(m), 't');
}

int j_of(const TMulticategory& s, int m) { return s.act(lambda_of(s, s.map_arity(m)), m); }

MulticatPtr from_tight_subsets(const MulticatPtr& M, const std::vector<bool>& tight) {
    if (M->operad().name() != "N") throw StructuralError("tight subsets need a multicategory over N");
    if (static_cast<int>(tight.size()) != M->map_count()) throw StructuralError("tight table has the wrong size");
    for (int a = 0; a < M->num_objects(); ++a)
        if (!tight[M->identity(a)]) throw ClosureError("identity " + M->map_name(M->identity(a)) + " is not tight");
    M->for_each_subst_tuple([&](int g, std::span<const int> fs) {
        if (!tight[g] || M->map_arity(fs[0]) == 0 || !tight[fs[0]]) return;
        int r = M->subst(g, fs);
        if (r >= 0 && !tight[r])
            throw ClosureError("composite " + call_str(*M, g, fs) + " = " + M->map_name(r) + " is not tight");
    });

    auto S = std::make_shared<TMulticategory>(make_R_operad(), M->objects(), M->max_arity());
    const int base_count = M->map_count();
    std::set<std::string> used;
    for (int m = 0; m < base_count; ++m) used.insert(M->map_name(m));
    for (int m = 0; m < base_count; ++m) {
        HomKey k = M->hom_key(M->map_hom(m));
        S->add_map(loose_hom(*S, k.inputs, k.output), M->map_name(m));
    }
    std::vector<int> copy(base_count, -1), base(base_count);
    for (int m = 0; m < base_count; ++m) base[m] = m;
    for (int m = 0; m < base_count; ++m) {
        HomKey k = M->hom_key(M->map_hom(m));
        if (!tight[m] || k.arity() == 0) continue;
        std::string name = "t." + M->map_name(m);
        while (used.count(name)) name = "t." + name;
        used.insert(name);
        copy[m] = S->add_map(tight_hom(*S, k.inputs, k.output), name);
        base.push_back(m);
        S->set_action(lambda_of(*S, k.arity()), copy[m], m);
    }
    for (int a = 0; a < M->num_objects(); ++a) S->set_identity(a, copy[M->identity(a)]);
    S->set_subst_rule([M, copy, base, base_count](int g, std::span<const int> fs) {
        std::vector<int> bf(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) bf[i] = base[fs[i]];
        int r = M->subst(base[g], bf);
        if (r < 0) return -1;
        bool t = g >= base_count && !fs.empty() && fs[0] >= base_count;
        return t ? copy[r] : r;
    });
    return S;
}

MulticatPtr all_tight(const MulticatPtr& m) { return from_tight_subsets(m, std::vector<bool>(m->map_count(), true)); }

MulticatPtr loose_part(const MulticatPtr& S) {
    if (!is_skew(*S)) throw StructuralError("loose part needs a multicategory over R");
    auto M = std::make_shared<TMulticategory>(make_terminal_operad(), S->objects(), S->max_arity());
    std::vector<int> to_m(S->map_count(), -1), to_s;
    for (int f = 0; f < S->map_count(); ++f) {
        if (is_tight(*S, f)) continue;
        HomKey k = S->hom_key(S->map_hom(f));
        to_m[f] = M->add_map(M->hom_index(0, k.inputs, k.output), S->map_name(f));
        to_s.push_back(f);
    }
    for (int a = 0; a < S->num_objects(); ++a) {
        int j = j_of(*S, S->identity(a));
        if (j < 0) throw StructuralError("no loose image of identity of " + S->object_name(a));
        M->set_identity(a, to_m[j]);
    }
    M->set_subst_rule([S, to_m, to_s](int g, std::span<const int> fs) {
        std::vector<int> sf(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) sf[i] = to_s[fs[i]];
        int r = S->subst(to_s[g], sf);
        return r < 0 ? -1 : to_m[r];
    });
    return M;
}

std::pair<MulticatPtr, std::vector<bool>> extract_tight_subsets(const MulticatPtr& S) {
    MulticatPtr M = loose_part(S);
    std::vector<bool> tight(M->map_count(), false);
    std::vector<int> to_m(S->map_count(), -1);
    for (int f = 0; f < M->map_count(); ++f) to_m[S->find_map(M->map_name(f))] = f;
    for (int f = 0; f < S->map_count(); ++f) {
        if (!is_tight(*S, f)) continue;
        int j = j_of(*S, f);
        if (j < 0) throw StructuralError("no lambda action on " + S->map_name(f));
        if (tight[to_m[j]]) throw StructuralError("j is not injective at " + S->map_name(j));
        tight[to_m[j]] = true;
    }
    return {M, tight};
}

}  // namespace skewcat
