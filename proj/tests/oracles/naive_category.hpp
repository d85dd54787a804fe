#pragma once
// Brute-force reference checks over plain tables.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Cat {
    std::vector<std::string> objects;
    std::vector<std::string> mors;
    std::map<std::string, std::string> src, tgt;
    std::map<std::string, std::string> ident;
    std::map<std::pair<std::string, std::string>, std::string> comp;
};

// Integer form of a table; -1 marks a missing entry.
struct IntCat {
    int M = 0;
    std::vector<int> src, tgt, ident, comp;
    bool ok = true;  // false when an object lacks an identity or a name is unknown
    int at(int g, int f) const { return comp[g * M + f]; }
};

inline IntCat intern(const Cat& c) {
    IntCat r;
    std::map<std::string, int> oid, mid;
    for (auto& o : c.objects) oid.emplace(o, static_cast<int>(oid.size()));
    for (auto& f : c.mors) mid.emplace(f, static_cast<int>(mid.size()));
    r.M = static_cast<int>(c.mors.size());
    for (auto& f : c.mors) {
        r.src.push_back(oid.at(c.src.at(f)));
        r.tgt.push_back(oid.at(c.tgt.at(f)));
    }
    for (auto& o : c.objects) {
        auto it = c.ident.find(o);
        r.ident.push_back(it == c.ident.end() ? -1 : mid.at(it->second));
        r.ok = r.ok && it != c.ident.end();
    }
    r.comp.assign(r.M * r.M, -1);
    for (auto& [k, v] : c.comp) r.comp[mid.at(k.first) * r.M + mid.at(k.second)] = mid.at(v);
    return r;
}

// true iff every category law holds
inline bool category_ok(const IntCat& c) {
    if (!c.ok) return false;
    const int M = c.M;
    for (int o = 0; o < static_cast<int>(c.ident.size()); ++o)
        if (c.src[c.ident[o]] != o || c.tgt[c.ident[o]] != o) return false;
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            bool composable = c.src[g] == c.tgt[f];
            int gf = c.at(g, f);
            if (composable != (gf >= 0)) return false;
            if (composable && (c.src[gf] != c.src[f] || c.tgt[gf] != c.tgt[g])) return false;
        }
    for (int f = 0; f < M; ++f) {
        if (c.at(c.ident[c.tgt[f]], f) != f) return false;
        if (c.at(f, c.ident[c.src[f]]) != f) return false;
    }
    for (int h = 0; h < M; ++h)
        for (int g = 0; g < M; ++g)
            for (int f = 0; f < M; ++f) {
                if (c.src[h] != c.tgt[g] || c.src[g] != c.tgt[f]) continue;
                if (c.at(h, c.at(g, f)) != c.at(c.at(h, g), f)) return false;
            }
    return true;
}

inline bool category_ok(const Cat& c) { return category_ok(intern(c)); }

inline bool epi(const IntCat& c, int f) {
    for (int g = 0; g < c.M; ++g)
        for (int h = 0; h < c.M; ++h) {
            if (g == h) continue;
            if (c.src[g] != c.tgt[f] || c.src[h] != c.tgt[f]) continue;
            if (c.tgt[g] != c.tgt[h]) continue;
            if (c.at(g, f) == c.at(h, f)) return false;
        }
    return true;
}

inline bool epi(const Cat& c, const std::string& f) {
    int i = 0;
    while (c.mors[i] != f) ++i;
    return epi(intern(c), i);
}

}  // namespace oracle
