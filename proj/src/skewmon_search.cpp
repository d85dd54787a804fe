#include <atomic>
#include <thread>

#include "csp.hpp"
#include "skewcat/skewmon.hpp"

namespace skewcat {

namespace {

struct Tensor {
    std::vector<int> obj, mor;
};

std::vector<Tensor> tensor_functors(const FinCategory& c) {
    const int N = c.num_objects(), M = c.num_morphisms();
    std::vector<std::vector<int>> objmaps;
    {
        detail::Csp csp;
        std::vector<int> all(N);
        for (int a = 0; a < N; ++a) all[a] = a;
        for (int k = 0; k < N * N; ++k) csp.add_slot(all);
        for (int p = 0; p < N * N; ++p)
            for (int q = 0; q < N * N; ++q) {
                if (c.hom(p / N, q / N).empty() || c.hom(p % N, q % N).empty()) continue;
                csp.add_constraint({p, q}, [&c, p, q](const std::vector<int>& v) { return !c.hom(v[p], v[q]).empty(); });
            }
        csp.solve([&](const std::vector<int>& v) {
            objmaps.push_back(v);
            return true;
        });
    }
    std::vector<Tensor> out;
    for (auto& om : objmaps) {
        detail::Csp csp;
        auto T = [&](int a, int b) { return om[a * N + b]; };
        for (int f = 0; f < M; ++f)
            for (int g = 0; g < M; ++g) {
                if (c.is_identity(f) && c.is_identity(g))
                    csp.add_slot({c.id(T(c.src(f), c.src(g)))});
                else
                    csp.add_slot(c.hom(T(c.src(f), c.src(g)), T(c.tgt(f), c.tgt(g))));
            }
        for (int f = 0; f < M; ++f)
            for (int f2 = 0; f2 < M; ++f2) {
                if (c.src(f2) != c.tgt(f)) continue;
                const int ff = c.compose(f2, f);
                for (int g = 0; g < M; ++g)
                    for (int g2 = 0; g2 < M; ++g2) {
                        if (c.src(g2) != c.tgt(g)) continue;
                        const int s1 = f * M + g, s2 = f2 * M + g2, s3 = ff * M + c.compose(g2, g);
                        csp.add_constraint({s1, s2, s3}, [&c, s1, s2, s3](const std::vector<int>& v) {
                            return c.compose(v[s2], v[s1]) == v[s3];
                        });
                    }
            }
        csp.solve([&](const std::vector<int>& v) {
            out.push_back({om, v});
            return true;
        });
    }
    return out;
}

void structures_for(const CategoryPtr& base, const Tensor& T, std::vector<SkewMonoidalCategory>& out) {
    const FinCategory& c = *base;
    const int N = c.num_objects(), M = c.num_morphisms();
    auto t = [&](int a, int b) { return T.obj[a * N + b]; };
    auto tm = [&](int f, int g) { return T.mor[f * M + g]; };
    auto C = [&](int g, int f) { return c.compose(g, f); };
    auto id = [&](int a) { return c.id(a); };
    for (int i = 0; i < N; ++i) {
        detail::Csp csp;
        std::vector<int> ls(N), rs(N), as(static_cast<size_t>(N) * N * N);
        for (int a = 0; a < N; ++a) ls[a] = csp.add_slot(c.hom(t(i, a), a));
        for (int a = 0; a < N; ++a) rs[a] = csp.add_slot(c.hom(a, t(a, i)));
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                for (int x = 0; x < N; ++x) as[(a * N + b) * N + x] = csp.add_slot(c.hom(t(t(a, b), x), t(a, t(b, x))));
        auto A = [&](int a, int b, int x) { return as[(a * N + b) * N + x]; };
        using V = const std::vector<int>&;
        for (int f = 0; f < M; ++f) {
            const int a = c.src(f), a2 = c.tgt(f);
            const int la = ls[a], la2 = ls[a2], ra = rs[a], ra2 = rs[a2];
            csp.add_constraint({la, la2}, [=, &c](V v) { return C(v[la2], tm(id(i), f)) == C(f, v[la]); });
            csp.add_constraint({ra, ra2}, [=, &c](V v) { return C(v[ra2], f) == C(tm(f, id(i)), v[ra]); });
            for (int g = 0; g < M; ++g)
                for (int h = 0; h < M; ++h) {
                    const int s1 = A(c.src(f), c.src(g), c.src(h)), s2 = A(a2, c.tgt(g), c.tgt(h));
                    const int lhs = tm(tm(f, g), h), rhs = tm(f, tm(g, h));
                    csp.add_constraint({s1, s2}, [=, &c](V v) { return C(v[s2], lhs) == C(rhs, v[s1]); });
                }
        }
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                for (int x = 0; x < N; ++x)
                    for (int d = 0; d < N; ++d) {
                        const int s1 = A(b, x, d), s2 = A(a, t(b, x), d), s3 = A(a, b, x), s4 = A(a, b, t(x, d)),
                                  s5 = A(t(a, b), x, d);
                        csp.add_constraint({s1, s2, s3, s4, s5}, [=, &c](V v) {
                            return C(C(tm(id(a), v[s1]), v[s2]), tm(v[s3], id(d))) == C(v[s4], v[s5]);
                        });
                    }
                const int lab = ls[t(a, b)], aiab = A(i, a, b), la = ls[a];
                csp.add_constraint({lab, aiab, la}, [=, &c](V v) { return C(v[lab], v[aiab]) == tm(v[la], id(b)); });
                const int aabi = A(a, b, i), rab = rs[t(a, b)], rb = rs[b];
                csp.add_constraint({aabi, rab, rb}, [=, &c](V v) { return C(v[aabi], v[rab]) == tm(id(a), v[rb]); });
                const int lb = ls[b], aaib = A(a, i, b), ra = rs[a];
                csp.add_constraint({lb, aaib, ra}, [=, &c](V v) {
                    return C(C(tm(id(a), v[lb]), v[aaib]), tm(v[ra], id(b))) == id(t(a, b));
                });
            }
        const int li = ls[i], ri = rs[i];
        csp.add_constraint({li, ri}, [=, &c](V v) { return C(v[li], v[ri]) == id(i); });
        csp.solve([&](V v) {
            SkewMonoidalCategory s;
            s.base = base;
            s.tensor_obj = T.obj;
            s.tensor_mor = T.mor;
            s.unit = i;
            for (int a = 0; a < N; ++a) {
                s.lambda.push_back(v[ls[a]]);
                s.rho.push_back(v[rs[a]]);
            }
            for (int k : as) s.alpha.push_back(v[k]);
            out.push_back(std::move(s));
            return true;
        });
    }
}

}  // namespace

std::vector<SkewMonoidalCategory> search_skew_monoidal(const CategoryPtr& base, int threads) {
    std::vector<Tensor> tensors = tensor_functors(*base);
    std::vector<std::vector<SkewMonoidalCategory>> per(tensors.size());
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(tensors.size())));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k = next++; k < tensors.size(); k = next++) structures_for(base, tensors[k], per[k]);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    std::vector<SkewMonoidalCategory> out;
    for (auto& p : per)
        for (auto& s : p) out.push_back(std::move(s));
    return out;
}

}  // namespace skewcat
