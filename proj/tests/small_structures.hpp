#pragma once
// Exhaustive generators of small categories and small ordinary multicategories, plus one-entry mutants.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "oracles/naive_category.hpp"
#include "oracles/naive_multicat.hpp"
#include "skewcat/fincat.hpp"

namespace small {

struct Cat {
    int n = 0;
    std::vector<int> src, tgt;  // identities are morphisms 0..n-1
    std::vector<int> comp;      // M*M, -1 where absent
    int M() const { return static_cast<int>(src.size()); }
};

inline std::string cat_obj(int a) { return "o" + std::to_string(a); }
inline std::string cat_mor(const Cat& c, int f) { return f < c.n ? "1" + cat_obj(f) : "m" + std::to_string(f); }

inline skewcat::CategoryData to_data(const Cat& c) {
    skewcat::CategoryData d;
    for (int a = 0; a < c.n; ++a) {
        d.objects.push_back(cat_obj(a));
        d.identities[cat_obj(a)] = cat_mor(c, a);
    }
    for (int f = 0; f < c.M(); ++f) d.morphisms.push_back({cat_mor(c, f), cat_obj(c.src[f]), cat_obj(c.tgt[f])});
    for (int g = 0; g < c.M(); ++g)
        for (int f = 0; f < c.M(); ++f)
            if (c.comp[g * c.M() + f] >= 0) d.compose.push_back({cat_mor(c, g), cat_mor(c, f), cat_mor(c, c.comp[g * c.M() + f])});
    return d;
}

// Morphisms within a hom set are interchangeable, so each hom is filled by a count; tables are labeled.
inline void for_each_category(int max_objects, int max_morphisms, const std::function<void(const Cat&)>& fn) {
    for (int n = 1; n <= max_objects; ++n) {
        std::vector<int> h(n * n, 0);
        std::function<void(int, int)> dist = [&](int p, int left) {
            if (p < n * n) {
                for (int k = 0; k <= left; ++k) {
                    h[p] = k;
                    dist(p + 1, left - k);
                }
                h[p] = 0;
                return;
            }
            Cat c;
            c.n = n;
            for (int a = 0; a < n; ++a) {
                c.src.push_back(a);
                c.tgt.push_back(a);
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int k = 0; k < h[a * n + b]; ++k) {
                        c.src.push_back(a);
                        c.tgt.push_back(b);
                    }
            const int M = c.M();
            std::vector<std::vector<int>> homs(n * n);
            for (int f = 0; f < M; ++f) homs[c.src[f] * n + c.tgt[f]].push_back(f);
            c.comp.assign(M * M, -1);
            for (int f = 0; f < M; ++f) {
                c.comp[c.tgt[f] * M + f] = f;
                c.comp[f * M + c.src[f]] = f;
            }
            // squares first, then the rest in row order
            std::vector<std::pair<int, int>> pairs;
            for (int g = n; g < M; ++g)
                if (c.src[g] == c.tgt[g]) pairs.push_back({g, g});
            for (int g = n; g < M; ++g)
                for (int f = n; f < M; ++f)
                    if (f != g && c.src[g] == c.tgt[f]) pairs.push_back({g, f});
            auto at = [&](int g, int f) { return c.comp[g * M + f]; };
            auto ok3 = [&](int x, int y, int z) {
                if (c.src[x] != c.tgt[y] || c.src[y] != c.tgt[z]) return true;
                int xy = at(x, y), yz = at(y, z);
                if (xy < 0 || yz < 0) return true;
                int l = at(xy, z), r = at(x, yz);
                return l < 0 || r < 0 || l == r;
            };
            // only triples whose evaluation reads the entry just set
            auto assoc_ok = [&](int g, int f) {
                for (int z = 0; z < M; ++z)
                    if (!ok3(g, f, z)) return false;
                for (int x = 0; x < M; ++x)
                    if (!ok3(x, g, f)) return false;
                for (int x = 0; x < M; ++x)
                    for (int y = 0; y < M; ++y)
                        if (at(x, y) == g && !ok3(x, y, f)) return false;
                for (int y = 0; y < M; ++y)
                    for (int z = 0; z < M; ++z)
                        if (at(y, z) == f && !ok3(g, y, z)) return false;
                return true;
            };
            std::function<void(size_t)> bt = [&](size_t i) {
                if (i == pairs.size()) {
                    fn(c);
                    return;
                }
                auto [g, f] = pairs[i];
                for (int r : homs[c.src[f] * n + c.tgt[g]]) {
                    c.comp[g * M + f] = r;
                    if (assoc_ok(g, f)) bt(i + 1);
                    c.comp[g * M + f] = -1;
                }
            };
            bt(0);
        };
        dist(0, max_morphisms - n);
    }
}

struct Multi {
    int n = 0, max_arity = 0;
    std::vector<std::vector<int>> in;  // identities are maps 0..n-1
    std::vector<int> out;
    std::map<std::vector<int>, int> subst;  // {g, f_1..f_k} -> result, absent when undefined
    int count() const { return static_cast<int>(out.size()); }
};

inline std::string multi_obj(int a) { return "o" + std::to_string(a); }
inline std::string multi_map(const Multi& m, int f) { return f < m.n ? "1" + multi_obj(f) : "g" + std::to_string(f); }

inline oracle::Multi to_oracle(const Multi& m) {
    oracle::Multi o;
    o.max_arity = m.max_arity;
    for (int a = 0; a < m.n; ++a) {
        o.objects.push_back(multi_obj(a));
        o.ident[multi_obj(a)] = multi_map(m, a);
    }
    for (int f = 0; f < m.count(); ++f) {
        auto name = multi_map(m, f);
        o.maps.push_back(name);
        for (int a : m.in[f]) o.in[name].push_back(multi_obj(a));
        o.in[name];
        o.out[name] = multi_obj(m.out[f]);
    }
    for (auto& [k, r] : m.subst) {
        std::vector<std::string> key;
        for (int f : k) key.push_back(multi_map(m, f));
        o.subst[key] = multi_map(m, r);
    }
    return o;
}

// Ordinary multicategories (operad N) truncated at max_arity.
inline void for_each_multicat(int max_objects, int max_maps, int max_arity,
                              const std::function<void(const Multi&)>& fn) {
    for (int n = 1; n <= max_objects; ++n) {
        // every hom (inputs; output) up to max_arity
        std::vector<std::pair<std::vector<int>, int>> homs;
        for (int k = 0; k <= max_arity; ++k) {
            std::vector<int> t(k, 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == k) {
                    for (int b = 0; b < n; ++b) homs.push_back({t, b});
                    return;
                }
                for (int a = 0; a < n; ++a) {
                    t[i] = a;
                    rec(i + 1);
                }
            };
            rec(0);
        }
        const int H = static_cast<int>(homs.size());
        std::vector<int> h(H, 0);
        std::function<void(int, int)> dist = [&](int p, int left) {
            if (p < H && left > 0) {
                for (int k = 0; k <= left; ++k) {
                    h[p] = k;
                    dist(p + 1, left - k);
                }
                h[p] = 0;
                return;
            }
            Multi m;
            m.n = n;
            m.max_arity = max_arity;
            for (int a = 0; a < n; ++a) {
                m.in.push_back({a});
                m.out.push_back(a);
            }
            for (int j = 0; j < H; ++j)
                for (int k = 0; k < h[j]; ++k) {
                    m.in.push_back(homs[j].first);
                    m.out.push_back(homs[j].second);
                }
            const int F = m.count();
            auto maps_in = [&](const std::vector<int>& ins, int b) {
                std::vector<int> r;
                for (int f = 0; f < F; ++f)
                    if (m.out[f] == b && m.in[f] == ins) r.push_back(f);
                return r;
            };
            // composable tuples with total arity <= max_arity
            std::vector<std::vector<int>> tuples;
            for (int g = 0; g < F; ++g) {
                int k = static_cast<int>(m.in[g].size());
                if (k == 0) continue;
                std::vector<int> cur{g};
                std::function<void(int, int)> rec = [&](int i, int used) {
                    if (i == k) {
                        tuples.push_back(cur);
                        return;
                    }
                    for (int f = 0; f < F; ++f) {
                        int a = static_cast<int>(m.in[f].size());
                        if (m.out[f] != m.in[g][i] || used + a > max_arity) continue;
                        cur.push_back(f);
                        rec(i + 1, used + a);
                        cur.pop_back();
                    }
                };
                rec(0, 0);
            }
            std::vector<std::vector<int>> free;
            std::vector<std::vector<int>> cands;
            for (auto& t : tuples) {
                int g = t[0];
                bool outer_id = g < n;
                bool inner_ids = true;
                for (size_t i = 1; i < t.size(); ++i) inner_ids = inner_ids && t[i] < n;
                if (outer_id) {
                    m.subst[t] = t[1];
                } else if (inner_ids) {
                    m.subst[t] = g;
                } else {
                    std::vector<int> ins;
                    for (size_t i = 1; i < t.size(); ++i) ins.insert(ins.end(), m.in[t[i]].begin(), m.in[t[i]].end());
                    free.push_back(t);
                    cands.push_back(maps_in(ins, m.out[g]));
                }
            }
            for (auto& c : cands)
                if (c.empty()) return;
            // forced entries, then composites of low-arity maps, squares before mixed tuples
            auto weight = [&](const std::vector<int>& t) {
                size_t w = 0, total = 0;
                for (size_t i = 0; i < t.size(); ++i) w = std::max(w, m.in[t[i]].size());
                for (size_t i = 1; i < t.size(); ++i) total += m.in[t[i]].size();
                std::vector<int> d(t.begin(), t.end());
                std::sort(d.begin(), d.end());
                size_t distinct = std::unique(d.begin(), d.end()) - d.begin();
                return std::tuple{w, total, distinct};
            };
            std::vector<size_t> order(free.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](size_t a, size_t b) {
                                 bool fa = cands[a].size() == 1, fb = cands[b].size() == 1;
                                 if (fa != fb) return fa;
                                 return weight(free[a]) < weight(free[b]);
                             });
            {
                std::vector<std::vector<int>> f2, c2;
                for (size_t i : order) {
                    f2.push_back(free[i]);
                    c2.push_back(cands[i]);
                }
                free.swap(f2);
                cands.swap(c2);
            }
            // dense table indexed by key code
            const int B = F + 1;
            int table_size = 1;
            for (int i = 0; i <= max_arity; ++i) table_size *= B;
            table_size = (table_size - 1) / (B - 1) * B + 1;
            auto code = [&](const std::vector<int>& key) {
                int c = 0;
                for (int x : key) c = c * B + x + 1;
                return c;
            };
            std::vector<int> tab(table_size, -1);
            for (int f = 0; f < F; ++f)
                if (m.in[f].empty()) tab[code({f})] = f;
            for (auto& [k, r] : m.subst) tab[code(k)] = r;

            // instances of g(f..)(h..) = g(f_1(h..), ..)
            struct Inst {
                int g, t_code, hs_code, hs_len;
                std::vector<int> inner;  // codes of f_j(h..)
            };
            std::vector<Inst> insts;
            std::map<int, std::vector<int>> by_key, by_hs;
            std::vector<std::vector<int>> by_outer(F);
            for (auto& t : tuples) {
                std::vector<int> slots;
                for (size_t i = 1; i < t.size(); ++i) slots.insert(slots.end(), m.in[t[i]].begin(), m.in[t[i]].end());
                std::vector<int> hs;
                std::function<void(size_t, int)> rec = [&](size_t i, int used) {
                    if (i == slots.size()) {
                        Inst in{t[0], code(t), code(hs), static_cast<int>(hs.size()), {}};
                        size_t p = 0;
                        for (size_t j = 1; j < t.size(); ++j) {
                            std::vector<int> k{t[j]};
                            for (size_t q = 0; q < m.in[t[j]].size(); ++q) k.push_back(hs[p++]);
                            in.inner.push_back(code(k));
                        }
                        int id = static_cast<int>(insts.size());
                        by_key[in.t_code].push_back(id);
                        for (int c : in.inner) by_key[c].push_back(id);
                        by_hs[in.hs_code].push_back(id);
                        by_outer[in.g].push_back(id);
                        insts.push_back(std::move(in));
                        return;
                    }
                    for (int x = 0; x < F; ++x) {
                        int a = static_cast<int>(m.in[x].size());
                        if (m.out[x] != slots[i] || used + a > max_arity) continue;
                        hs.push_back(x);
                        rec(i + 1, used + a);
                        hs.pop_back();
                    }
                };
                rec(0, 0);
            }
            std::vector<int> pow(max_arity + 2, 1);
            for (size_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * B;
            auto holds = [&](const Inst& in) {
                int gf = tab[in.t_code];
                if (gf < 0) return true;
                int r = tab[(gf + 1) * pow[in.hs_len] + in.hs_code];
                if (r < 0) return true;
                int outer = in.g + 1;
                for (int c : in.inner) {
                    int v = tab[c];
                    if (v < 0) return true;
                    outer = outer * B + v + 1;
                }
                int l = tab[outer];
                return l < 0 || l == r;
            };
            auto all_hold = [&](const std::vector<int>& idx) {
                for (int i : idx)
                    if (!holds(insts[i])) return false;
                return true;
            };
            // an instance is rechecked through every key it may read
            auto touched_ok = [&](const std::vector<int>& key) {
                auto k = by_key.find(code(key));
                if (k != by_key.end() && !all_hold(k->second)) return false;
                auto h = by_hs.find(code(std::vector<int>(key.begin() + 1, key.end())));
                if (h != by_hs.end() && !all_hold(h->second)) return false;
                return all_hold(by_outer[key[0]]);
            };
            for (auto& in : insts)
                if (!holds(in)) return;
            std::vector<int> free_code(free.size());
            for (size_t i = 0; i < free.size(); ++i) free_code[i] = code(free[i]);
            std::function<void(size_t)> bt = [&](size_t i) {
                if (i == free.size()) {
                    for (size_t j = 0; j < free.size(); ++j) m.subst[free[j]] = tab[free_code[j]];
                    fn(m);
                    return;
                }
                for (int r : cands[i]) {
                    tab[free_code[i]] = r;
                    if (touched_ok(free[i])) bt(i + 1);
                }
                tab[free_code[i]] = -1;
            };
            bt(0);
        };
        dist(0, max_maps - n);
    }
}

// One entry changed: the last composite between non-identities moves to the next parallel morphism, or is
// dropped when its hom has a single element. Without such composites an identity law entry is dropped.
inline Cat mutant(const Cat& c) {
    Cat d = c;
    const int M = c.M();
    for (int g = M - 1; g >= c.n; --g)
        for (int f = M - 1; f >= c.n; --f) {
            int r = c.comp[g * M + f];
            if (r < 0) continue;
            std::vector<int> hom;
            for (int x = 0; x < M; ++x)
                if (c.src[x] == c.src[r] && c.tgt[x] == c.tgt[r]) hom.push_back(x);
            if (hom.size() == 1) {
                d.comp[g * M + f] = -1;
            } else {
                size_t i = 0;
                while (hom[i] != r) ++i;
                d.comp[g * M + f] = hom[(i + 1) % hom.size()];
            }
            return d;
        }
    d.comp[(M - 1) * M + c.src[M - 1]] = -1;
    return d;
}

inline Multi mutant(const Multi& m) {
    Multi d = m;
    for (auto it = m.subst.rbegin(); it != m.subst.rend(); ++it) {
        auto& [k, r] = *it;
        if (k[0] < m.n) continue;
        bool inner_ids = true;
        for (size_t i = 1; i < k.size(); ++i) inner_ids = inner_ids && k[i] < m.n;
        if (inner_ids) continue;
        std::vector<int> hom;
        for (int x = 0; x < m.count(); ++x)
            if (m.in[x] == m.in[r] && m.out[x] == m.out[r]) hom.push_back(x);
        if (hom.size() == 1) {
            d.subst.erase(k);
        } else {
            size_t i = 0;
            while (hom[i] != r) ++i;
            d.subst[k] = hom[(i + 1) % hom.size()];
        }
        return d;
    }
    d.subst.erase(m.subst.rbegin()->first);
    return d;
}

}  // namespace small
