#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "oracles/naive_multicat.hpp"
#include "skewcat/tmulticat.hpp"

namespace fixtures {

using skewcat::HomKey;
using skewcat::MulticatPtr;
using skewcat::OperadPtr;
using skewcat::TMulticategory;

// One multimap in every hom where keep(h) holds, named after the hom; everything else forced.
inline std::shared_ptr<TMulticategory> thin_multicat(OperadPtr op, std::vector<std::string> objects, int max_arity,
                                                     const std::function<bool(const HomKey&)>& keep) {
    auto m = std::make_shared<TMulticategory>(op, std::move(objects), max_arity);
    std::vector<int> in_hom(m->hom_count(), -1);
    for (int h = 0; h < m->hom_count(); ++h)
        if (keep(m->hom_key(h))) in_hom[h] = m->add_map(h, m->describe_hom(h));
    const int e = op->unit();
    for (int a = 0; a < m->num_objects(); ++a) {
        const int ia[] = {a};
        m->set_identity(a, in_hom[m->hom_index(e, ia, a)]);
    }
    for (int f = 0; f < m->map_count(); ++f) {
        HomKey k = m->hom_key(m->map_hom(f));
        const auto& c = op->component(k.arity());
        for (int s = 0; s < c.num_morphisms(); ++s)
            if (c.src(s) == k.x && !c.is_identity(s)) m->set_action(s, f, in_hom[m->hom_index(c.tgt(s), k.inputs, k.output)]);
    }
    const TMulticategory& mm = *m;
    std::vector<std::pair<std::vector<int>, int>> entries;
    mm.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        std::vector<int> key{g};
        key.insert(key.end(), fs.begin(), fs.end());
        entries.push_back({key, in_hom[mm.expected_result_hom(g, fs)]});
    });
    for (auto& [k, r] : entries) m->set_subst(k[0], std::span<const int>(k).subspan(1), r);
    return m;
}

inline std::shared_ptr<TMulticategory> terminal_multicat(OperadPtr op, int max_arity) {
    return thin_multicat(op, {"*"}, max_arity, [](const HomKey&) { return true; });
}

// One object; maps of arity n are the elements 0..k-1 of a commutative monoid given by `plus`, named "n:v".
inline std::shared_ptr<TMulticategory> monoid_multicat(int max_arity, int k, const std::function<int(int, int)>& plus) {
    auto m = std::make_shared<TMulticategory>(skewcat::make_terminal_operad(), std::vector<std::string>{"*"}, max_arity);
    std::vector<int> ins;
    for (int n = 0; n <= max_arity; ++n) {
        ins.assign(n, 0);
        int h = m->hom_index(0, ins, 0);
        for (int v = 0; v < k; ++v) m->add_map(h, std::to_string(n) + ":" + std::to_string(v));
    }
    auto id = [&](int n, int v) { return m->find_map(std::to_string(n) + ":" + std::to_string(v)); };
    m->set_identity(0, id(1, 0));
    const TMulticategory& mm = *m;
    std::vector<std::pair<std::vector<int>, int>> entries;
    mm.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        int v = g % k, n = 0;
        for (int f : fs) {
            v = plus(v, f % k);
            n += mm.map_arity(f);
        }
        std::vector<int> key{g};
        key.insert(key.end(), fs.begin(), fs.end());
        entries.push_back({key, id(n, v)});
    });
    for (auto& [key, r] : entries) m->set_subst(key[0], std::span<const int>(key).subspan(1), r);
    return m;
}

// Table-backed copy, so that single entries can be mutated.
inline std::shared_ptr<TMulticategory> materialize(const TMulticategory& src) {
    auto m = std::make_shared<TMulticategory>(src.operad_ptr(), src.objects(), src.max_arity());
    for (int f = 0; f < src.map_count(); ++f) m->add_map(src.map_hom(f), src.map_name(f));
    for (int a = 0; a < src.num_objects(); ++a) m->set_identity(a, src.identity(a));
    for (int f = 0; f < src.map_count(); ++f) {
        const auto& c = src.operad().component(src.map_arity(f));
        for (int s = 0; s < c.num_morphisms(); ++s)
            if (c.src(s) == src.hom_x(src.map_hom(f)) && !c.is_identity(s)) m->set_action(s, f, src.act(s, f));
    }
    src.for_each_subst_tuple([&](int g, std::span<const int> fs) { m->set_subst(g, fs, src.subst(g, fs)); });
    return m;
}

inline oracle::Multi to_oracle(const TMulticategory& m) {
    oracle::Multi o;
    o.max_arity = m.max_arity();
    o.objects = m.objects();
    for (int f = 0; f < m.map_count(); ++f) {
        auto k = m.hom_key(m.map_hom(f));
        o.maps.push_back(m.map_name(f));
        for (int a : k.inputs) o.in[m.map_name(f)].push_back(m.object_name(a));
        o.in[m.map_name(f)];
        o.out[m.map_name(f)] = m.object_name(k.output);
    }
    for (int a = 0; a < m.num_objects(); ++a)
        if (m.identity(a) >= 0) o.ident[m.object_name(a)] = m.map_name(m.identity(a));
    m.for_each_subst_tuple([&](int g, std::span<const int> fs) {
        int r = m.subst(g, fs);
        if (r < 0) return;
        std::vector<std::string> key{m.map_name(g)};
        for (int f : fs) key.push_back(m.map_name(f));
        o.subst[key] = m.map_name(r);
    });
    return o;
}

// The skew multicategory with tight(a..;b) = [a1 <= b] and every loose hom a singleton, on the 2-chain.
inline MulticatPtr chain2_fst_skew(int max_arity) {
    auto loose = thin_multicat(skewcat::make_terminal_operad(), {"0", "1"}, max_arity, [](const HomKey&) { return true; });
    std::vector<bool> tight(loose->map_count());
    for (int f = 0; f < loose->map_count(); ++f) {
        auto k = loose->hom_key(loose->map_hom(f));
        tight[f] = k.arity() > 0 && k.inputs[0] <= k.output;
    }
    return skewcat::from_tight_subsets(loose, tight);
}

// The same loose part as the 2-chain example, but only identities tight. Not weakly representable.
inline MulticatPtr identities_tight_skew(int max_arity) {
    auto loose = thin_multicat(skewcat::make_terminal_operad(), {"0", "1"}, max_arity, [](const HomKey&) { return true; });
    std::vector<bool> tight(loose->map_count());
    for (int f = 0; f < loose->map_count(); ++f) {
        auto k = loose->hom_key(loose->map_hom(f));
        tight[f] = k.arity() == 1 && k.inputs[0] == k.output;
    }
    return skewcat::from_tight_subsets(loose, tight);
}

// Poset multicategory on the 3-chain: (a..;b) inhabited iff m(a) <= b, where m() = 2, m is the identity and
// max in arities 1 and 2, and in arity 3 m is 2 when some input is 2 and 0 otherwise.
// Weakly but not left representable: m(1,1,1) = 0 but m(m(1,1),1) = 1.
inline MulticatPtr max_then_bottom() {
    auto m = thin_multicat(skewcat::make_terminal_operad(), {"0", "1", "2"}, 3, [](const HomKey& k) {
        int v = 0;
        for (int a : k.inputs) v = std::max(v, a);
        if (k.arity() == 0) v = 2;
        if (k.arity() == 3 && v < 2) v = 0;
        return v <= k.output;
    });
    return skewcat::all_tight(m);
}

}  // namespace fixtures
