#pragma once
// Ordinary (untyped-operad) multicategory laws, checked by plain enumeration.

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace oracle {

struct Multi {
    int max_arity = 0;
    std::vector<std::string> objects;
    std::vector<std::string> maps;
    std::map<std::string, std::vector<std::string>> in;
    std::map<std::string, std::string> out;
    std::map<std::string, std::string> ident;
    std::map<std::vector<std::string>, std::string> subst;  // {g, f1, ..., fn} -> result
};

inline bool multicat_ok(const Multi& ms) {
    // names to indices
    std::map<std::string, int> oid, mid;
    for (auto& a : ms.objects) oid.emplace(a, static_cast<int>(oid.size()));
    for (auto& f : ms.maps) mid.emplace(f, static_cast<int>(mid.size()));
    const int F = static_cast<int>(ms.maps.size());
    std::vector<std::vector<int>> in(F);
    std::vector<int> out(F);
    for (auto& f : ms.maps) {
        for (auto& a : ms.in.at(f)) in[mid[f]].push_back(oid.at(a));
        out[mid[f]] = oid.at(ms.out.at(f));
    }
    std::vector<int> ident;
    for (auto& a : ms.objects) {
        auto it = ms.ident.find(a);
        if (it == ms.ident.end()) return false;
        int i = mid.at(it->second);
        if (in[i] != std::vector<int>{oid[a]} || out[i] != oid[a]) return false;
        ident.push_back(i);
    }
    const int N = ms.max_arity;
    auto code = [&](const std::vector<int>& key) {
        long c = 0;
        for (int x : key) c = c * (F + 1) + x + 1;
        return c;
    };
    std::unordered_map<long, int> subst;
    for (auto& [k, r] : ms.subst) {
        std::vector<int> key;
        for (auto& x : k) key.push_back(mid.at(x));
        subst[code(key)] = mid.at(r);
    }

    // all composable tuples
    std::vector<std::vector<int>> tuples;
    for (int g = 0; g < F; ++g) {
        if (in[g].empty()) continue;
        std::vector<int> cur{g};
        std::function<void(size_t, int)> rec = [&](size_t i, int used) {
            if (i == in[g].size()) {
                tuples.push_back(cur);
                return;
            }
            for (int f = 0; f < F; ++f) {
                int k = static_cast<int>(in[f].size());
                if (out[f] != in[g][i] || used + k > N) continue;
                cur.push_back(f);
                rec(i + 1, used + k);
                cur.pop_back();
            }
        };
        rec(0, 0);
    }
    auto sub = [&](const std::vector<int>& key) -> int {
        if (key.size() == 1 && in[key[0]].empty()) return key[0];
        auto it = subst.find(code(key));
        return it == subst.end() ? -1 : it->second;
    };
    for (auto& t : tuples) {
        int r = sub(t);
        if (r < 0) return false;
        std::vector<int> ins;
        for (size_t i = 1; i < t.size(); ++i) ins.insert(ins.end(), in[t[i]].begin(), in[t[i]].end());
        if (in[r] != ins || out[r] != out[t[0]]) return false;
    }
    for (int g = 0; g < F; ++g) {
        if (sub({ident[out[g]], g}) != g) return false;
        if (in[g].empty()) continue;
        std::vector<int> key{g};
        for (int a : in[g]) key.push_back(ident[a]);
        if (sub(key) != g) return false;
    }
    for (auto& t : tuples) {
        int gf = sub(t);
        std::vector<int> slots;
        for (size_t i = 1; i < t.size(); ++i) slots.insert(slots.end(), in[t[i]].begin(), in[t[i]].end());
        std::vector<int> hs;
        std::function<bool(size_t, int)> rec = [&](size_t i, int used) -> bool {
            if (i == slots.size()) {
                std::vector<int> outer{t[0]};
                size_t p = 0;
                for (size_t j = 1; j < t.size(); ++j) {
                    std::vector<int> inner{t[j]};
                    for (size_t q = 0; q < in[t[j]].size(); ++q) inner.push_back(hs[p++]);
                    outer.push_back(sub(inner));
                }
                std::vector<int> right{gf};
                right.insert(right.end(), hs.begin(), hs.end());
                return sub(outer) == sub(right);
            }
            for (int h = 0; h < F; ++h) {
                int k = static_cast<int>(in[h].size());
                if (out[h] != slots[i] || used + k > N) continue;
                hs.push_back(h);
                bool ok = rec(i + 1, used + k);
                hs.pop_back();
                if (!ok) return false;
            }
            return true;
        };
        if (!rec(0, 0)) return false;
    }
    return true;
}

}  // namespace oracle
