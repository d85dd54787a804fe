#pragma once

#include <functional>
#include <memory>

#include "fixtures.hpp"
#include "oracles/naive_skew.hpp"
#include "skewcat/skewmon.hpp"

namespace fixtures {

using skewcat::SkewMonoidalCategory;
using SkewPtr = std::shared_ptr<const SkewMonoidalCategory>;

// Skew structure on the n-chain from an order-preserving tensor; every component is the unique arrow.
inline SkewMonoidalCategory chain_skew(int n, const std::function<int(int, int)>& tensor, int unit) {
    SkewMonoidalCategory s;
    s.base = std::make_shared<const skewcat::FinCategory>(chain(n));
    const auto& c = *s.base;
    auto arrow = [&](int a, int b) {
        const auto& h = c.hom(a, b);
        if (h.size() != 1) throw skewcat::StructuralError("no arrow");
        return h[0];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.tensor_obj.push_back(tensor(a, b));
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < c.num_morphisms(); ++g)
            s.tensor_mor.push_back(arrow(tensor(c.src(f), c.src(g)), tensor(c.tgt(f), c.tgt(g))));
    s.unit = unit;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < n; ++x) s.alpha.push_back(arrow(tensor(tensor(a, b), x), tensor(a, tensor(b, x))));
    for (int a = 0; a < n; ++a) {
        s.lambda.push_back(arrow(tensor(unit, a), a));
        s.rho.push_back(arrow(a, tensor(a, unit)));
    }
    return s;
}

inline SkewPtr chain2_fst() { return std::make_shared<SkewMonoidalCategory>(chain_skew(2, [](int a, int) { return a; }, 0)); }
inline SkewPtr chain2_snd() { return std::make_shared<SkewMonoidalCategory>(chain_skew(2, [](int, int b) { return b; }, 1)); }
inline SkewPtr trivial_skew() { return std::make_shared<SkewMonoidalCategory>(chain_skew(1, [](int, int) { return 0; }, 0)); }

// Z/2 with tensor = addition; morphism "0" is the identity.
inline SkewPtr z2_skew(int alpha, int lambda, int rho) {
    auto s = std::make_shared<SkewMonoidalCategory>();
    s->base = std::make_shared<const skewcat::FinCategory>(z2());
    const auto& c = *s->base;
    int m0 = c.find_morphism("0"), m1 = c.find_morphism("1");
    auto el = [&](int v) { return v ? m1 : m0; };
    auto val = [&](int f) { return f == m1 ? 1 : 0; };
    s->tensor_obj = {0};
    s->tensor_mor.resize(4);
    for (int f = 0; f < 2; ++f)
        for (int g = 0; g < 2; ++g) s->tensor_mor[f * 2 + g] = el((val(f) + val(g)) % 2);
    s->unit = 0;
    s->alpha = {el(alpha)};
    s->lambda = {el(lambda)};
    s->rho = {el(rho)};
    return s;
}

inline oracle::Skew to_oracle(const SkewMonoidalCategory& s) {
    oracle::Skew o;
    auto d = s.to_data();
    o.c = to_oracle(d.category);
    for (auto& [a, b, ab] : d.tensor_objects) o.tobj[{a, b}] = ab;
    for (auto& [f, g, fg] : d.tensor_morphisms) o.tmor[{f, g}] = fg;
    o.unit = d.unit;
    for (auto& [a, b, x, m] : d.alpha) o.alpha[{a, b, x}] = m;
    for (auto& [a, m] : d.lambda) o.lambda[a] = m;
    for (auto& [a, m] : d.rho) o.rho[a] = m;
    return o;
}

}  // namespace fixtures
