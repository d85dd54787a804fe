#pragma once
// Skew monoidal laws and a generate-and-test structure count, on string tables.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "naive_category.hpp"

namespace oracle {

struct Skew {
    Cat c;
    std::map<std::pair<std::string, std::string>, std::string> tobj, tmor;
    std::string unit;
    std::map<std::tuple<std::string, std::string, std::string>, std::string> alpha;
    std::map<std::string, std::string> lambda, rho;
};

inline bool skew_ok(const Skew& s) {
    const Cat& c = s.c;
    auto o = [&](const std::string& a, const std::string& b) { return s.tobj.at({a, b}); };
    auto m = [&](const std::string& f, const std::string& g) { return s.tmor.at({f, g}); };
    auto cmp = [&](const std::string& g, const std::string& f) { return c.comp.at({g, f}); };
    auto id = [&](const std::string& a) { return c.ident.at(a); };
    const std::string& i = s.unit;
    for (auto& f : c.mors)
        for (auto& g : c.mors) {
            if (c.src.at(m(f, g)) != o(c.src.at(f), c.src.at(g))) return false;
            if (c.tgt.at(m(f, g)) != o(c.tgt.at(f), c.tgt.at(g))) return false;
        }
    for (auto& a : c.objects)
        for (auto& b : c.objects)
            if (m(id(a), id(b)) != id(o(a, b))) return false;
    for (auto& f : c.mors)
        for (auto& f2 : c.mors)
            for (auto& g : c.mors)
                for (auto& g2 : c.mors) {
                    if (c.src.at(f2) != c.tgt.at(f) || c.src.at(g2) != c.tgt.at(g)) continue;
                    if (m(cmp(f2, f), cmp(g2, g)) != cmp(m(f2, g2), m(f, g))) return false;
                }
    for (auto& a : c.objects) {
        auto& l = s.lambda.at(a);
        auto& r = s.rho.at(a);
        if (c.src.at(l) != o(i, a) || c.tgt.at(l) != a) return false;
        if (c.src.at(r) != a || c.tgt.at(r) != o(a, i)) return false;
        for (auto& b : c.objects)
            for (auto& x : c.objects) {
                auto& al = s.alpha.at({a, b, x});
                if (c.src.at(al) != o(o(a, b), x) || c.tgt.at(al) != o(a, o(b, x))) return false;
            }
    }
    for (auto& f : c.mors) {
        auto a = c.src.at(f), a2 = c.tgt.at(f);
        if (cmp(s.lambda.at(a2), m(id(i), f)) != cmp(f, s.lambda.at(a))) return false;
        if (cmp(s.rho.at(a2), f) != cmp(m(f, id(i)), s.rho.at(a))) return false;
        for (auto& g : c.mors)
            for (auto& h : c.mors) {
                auto al1 = s.alpha.at({a, c.src.at(g), c.src.at(h)});
                auto al2 = s.alpha.at({a2, c.tgt.at(g), c.tgt.at(h)});
                if (cmp(al2, m(m(f, g), h)) != cmp(m(f, m(g, h)), al1)) return false;
            }
    }
    auto al = [&](const std::string& a, const std::string& b, const std::string& x) { return s.alpha.at({a, b, x}); };
    for (auto& a : c.objects)
        for (auto& b : c.objects) {
            for (auto& x : c.objects)
                for (auto& d : c.objects)
                    if (cmp(cmp(m(id(a), al(b, x, d)), al(a, o(b, x), d)), m(al(a, b, x), id(d))) !=
                        cmp(al(a, b, o(x, d)), al(o(a, b), x, d)))
                        return false;
            if (cmp(s.lambda.at(o(a, b)), al(i, a, b)) != m(s.lambda.at(a), id(b))) return false;
            if (cmp(al(a, b, i), s.rho.at(o(a, b))) != m(id(a), s.rho.at(b))) return false;
            if (cmp(cmp(m(id(a), s.lambda.at(b)), al(a, i, b)), m(s.rho.at(a), id(b))) != id(o(a, b))) return false;
        }
    return cmp(s.lambda.at(i), s.rho.at(i)) == id(i);
}

// Every assignment of tables with the right types, filtered by skew_ok.
inline long count_skew_structures(const Cat& c) {
    auto hom = [&](const std::string& a, const std::string& b) {
        std::vector<std::string> r;
        for (auto& f : c.mors)
            if (c.src.at(f) == a && c.tgt.at(f) == b) r.push_back(f);
        return r;
    };
    // generic product enumeration over labelled choice lists
    auto product = [](const std::vector<std::vector<std::string>>& choices,
                      const std::function<void(const std::vector<std::string>&)>& fn) {
        std::vector<std::string> cur(choices.size());
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == choices.size()) {
                fn(cur);
                return;
            }
            for (auto& v : choices[k]) {
                cur[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
    };
    std::vector<std::pair<std::string, std::string>> opairs, mpairs;
    for (auto& a : c.objects)
        for (auto& b : c.objects) opairs.push_back({a, b});
    for (auto& f : c.mors)
        for (auto& g : c.mors) mpairs.push_back({f, g});
    long count = 0;
    product(std::vector<std::vector<std::string>>(opairs.size(), c.objects), [&](const std::vector<std::string>& ov) {
        Skew s;
        s.c = c;
        for (size_t k = 0; k < opairs.size(); ++k) s.tobj[opairs[k]] = ov[k];
        std::vector<std::vector<std::string>> mch;
        for (auto& [f, g] : mpairs)
            mch.push_back(hom(s.tobj[{c.src.at(f), c.src.at(g)}], s.tobj[{c.tgt.at(f), c.tgt.at(g)}]));
        product(mch, [&](const std::vector<std::string>& mv) {
            for (size_t k = 0; k < mpairs.size(); ++k) s.tmor[mpairs[k]] = mv[k];
            for (auto& i : c.objects) {
                s.unit = i;
                std::vector<std::vector<std::string>> cch;
                for (auto& a : c.objects) cch.push_back(hom(s.tobj[{i, a}], a));
                for (auto& a : c.objects) cch.push_back(hom(a, s.tobj[{a, i}]));
                for (auto& a : c.objects)
                    for (auto& b : c.objects)
                        for (auto& x : c.objects)
                            cch.push_back(hom(s.tobj[{s.tobj[{a, b}], x}], s.tobj[{a, s.tobj[{b, x}]}]));
                product(cch, [&](const std::vector<std::string>& cv) {
                    size_t k = 0;
                    for (auto& a : c.objects) s.lambda[a] = cv[k++];
                    for (auto& a : c.objects) s.rho[a] = cv[k++];
                    for (auto& a : c.objects)
                        for (auto& b : c.objects)
                            for (auto& x : c.objects) s.alpha[{a, b, x}] = cv[k++];
                    count += skew_ok(s);
                });
            }
        });
    });
    return count;
}

}  // namespace oracle
