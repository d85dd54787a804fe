#pragma once

#include <string>

#include "oracles/naive_category.hpp"
#include "skewcat/fincat.hpp"

namespace fixtures {

using skewcat::CategoryData;

// The poset 0 < 1 < ... < n-1, morphisms named "a->b".
inline CategoryData chain_data(int n) {
    CategoryData d;
    auto mn = [](int a, int b) { return std::to_string(a) + "->" + std::to_string(b); };
    for (int a = 0; a < n; ++a) {
        d.objects.push_back(std::to_string(a));
        d.identities[std::to_string(a)] = mn(a, a);
        for (int b = a; b < n; ++b) d.morphisms.push_back({mn(a, b), std::to_string(a), std::to_string(b)});
    }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) d.compose.push_back({mn(b, c), mn(a, b), mn(a, c)});
    return d;
}

// One object, morphisms "0" and "1", composition is addition mod 2.
inline CategoryData z2_data() {
    CategoryData d;
    d.objects = {"*"};
    d.morphisms = {{"0", "*", "*"}, {"1", "*", "*"}};
    d.identities = {{"*", "0"}};
    d.compose = {{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}};
    return d;
}

inline CategoryData trivial_data() { return chain_data(1); }

// a, b, x with parallel u, v: a -> b and w: x -> a, so u w = v w.
inline CategoryData parallel_pair() {
    CategoryData d;
    d.objects = {"a", "b", "x"};
    d.morphisms = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"1x", "x", "x"}, {"u", "a", "b"},
                   {"v", "a", "b"},  {"w", "x", "a"},  {"uw", "x", "b"}};
    d.identities = {{"a", "1a"}, {"b", "1b"}, {"x", "1x"}};
    for (auto& m : d.morphisms) {
        d.compose.push_back({d.identities[m.tgt], m.id, m.id});
        if (m.id[0] != '1') d.compose.push_back({m.id, d.identities[m.src], m.id});
    }
    d.compose.push_back({"u", "w", "uw"});
    d.compose.push_back({"v", "w", "uw"});
    return d;
}

// Z/2 times the 2-chain: objects "0", "1", morphisms "a->b/k" with k in Z/2.
inline CategoryData z2_chain2() {
    CategoryData d;
    auto mn = [](int a, int b, int k) { return std::to_string(a) + "->" + std::to_string(b) + "/" + std::to_string(k); };
    d.objects = {"0", "1"};
    for (int a = 0; a < 2; ++a) {
        d.identities[std::to_string(a)] = mn(a, a, 0);
        for (int b = a; b < 2; ++b)
            for (int k = 0; k < 2; ++k) d.morphisms.push_back({mn(a, b, k), std::to_string(a), std::to_string(b)});
    }
    for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b)
            for (int c = b; c < 2; ++c)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) d.compose.push_back({mn(b, c, l), mn(a, b, k), mn(a, c, (k + l) % 2)});
    return d;
}

inline skewcat::FinCategory chain(int n) { return skewcat::FinCategory::from_data(chain_data(n)); }
inline skewcat::FinCategory z2() { return skewcat::FinCategory::from_data(z2_data()); }

inline oracle::Cat to_oracle(const CategoryData& d) {
    oracle::Cat c;
    c.objects = d.objects;
    for (auto& m : d.morphisms) {
        c.mors.push_back(m.id);
        c.src[m.id] = m.src;
        c.tgt[m.id] = m.tgt;
    }
    c.ident = d.identities;
    for (auto& e : d.compose) c.comp[{e.g, e.f}] = e.gf;
    return c;
}

}  // namespace fixtures
