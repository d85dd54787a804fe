#include "doctest.h"
#include "skewcat/catoperad.hpp"

using namespace skewcat;

namespace {

int T(const CatOperad& r, int n) { return r.object(n, "t"); }
int L(const CatOperad& r, int n) { return r.object(n, "l"); }

bool has_law(const Report& r, const std::string& law) {
    for (auto& v : r)
        if (v.law == law) return true;
    return false;
}

}  // namespace

TEST_CASE("terminal operad") {
    auto n = make_terminal_operad();
    CHECK(n->component(0).num_objects() == 1);
    CHECK(n->component(3).num_morphisms() == 1);
    CHECK(check_operad_axioms(*n, 5).empty());
    auto d = dual_operad(n);
    for (int k = 0; k <= 4; ++k) CHECK(d->component(k) == n->component(k));
}

TEST_CASE("components of R") {
    auto r = make_R_operad();
    CHECK(r->component(0).num_objects() == 1);
    CHECK(r->component(0).object_name(0) == "l");
    const auto& c2 = r->component(2);
    CHECK(c2.num_objects() == 2);
    int lam = c2.find_morphism("lambda");
    CHECK(c2.src(lam) == T(*r, 2));
    CHECK(c2.tgt(lam) == L(*r, 2));
    CHECK(r->unit() == T(*r, 1));
}

TEST_CASE("substitution in R") {
    auto r = make_R_operad();
    {
        const int ks[] = {1, 3};
        const int xs[] = {T(*r, 1), L(*r, 3)};
        CHECK(r->subst_obj(T(*r, 2), ks, xs) == T(*r, 4));
    }
    {
        const int ks[] = {1, 1};
        const int xs[] = {T(*r, 1), T(*r, 1)};
        CHECK(r->subst_obj(L(*r, 2), ks, xs) == L(*r, 2));
    }
    // The formula, checked literally on every input up to arity 5.
    std::function<void(int, std::vector<int>&, int)> rec;
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> ks;
        rec = [&](int len, std::vector<int>& cur, int budget) {
            if (static_cast<int>(cur.size()) == len) {
                int S = sum_of(cur);
                std::vector<int> xs(len);
                std::vector<int> sizes(len);
                for (int i = 0; i < len; ++i) sizes[i] = r->component(cur[i]).num_objects();
                for (int x = 0; x < r->component(len).num_objects(); ++x) {
                    std::fill(xs.begin(), xs.end(), 0);
                    while (true) {
                        bool t = S > 0 && len > 0 && r->component(len).object_name(x) == "t" &&
                                 r->component(cur[0]).object_name(xs[0]) == "t";
                        int got = r->subst_obj(x, cur, xs);
                        CHECK(r->component(S).object_name(got) == (t ? "t" : "l"));
                        int i = len - 1;
                        while (i >= 0 && ++xs[i] == sizes[i]) xs[i--] = 0;
                        if (i < 0) break;
                    }
                }
                return;
            }
            for (int k = 0; k <= budget; ++k) {
                cur.push_back(k);
                rec(len, cur, budget - k);
                cur.pop_back();
            }
        };
        rec(n, ks, 5);
    }
}

TEST_CASE("unit laws of R on objects") {
    auto r = make_R_operad();
    for (int k = 0; k <= 4; ++k)
        for (int x = 0; x < r->component(k).num_objects(); ++x) {
            const int ks1[] = {k};
            const int xs1[] = {x};
            CHECK(r->subst_obj(r->unit(), ks1, xs1) == x);
            std::vector<int> ones(k, 1), es(k, r->unit());
            CHECK(r->subst_obj(x, ones, es) == x);
        }
}

TEST_CASE("R and L pass the operad axioms") {
    CHECK(check_operad_axioms(*make_R_operad(), 5).empty());
    CHECK(check_operad_axioms(*make_L_operad(), 5).empty());
}

TEST_CASE("the dual of R") {
    auto l = make_L_operad();
    const auto& c3 = l->component(3);
    int lam = c3.find_morphism("lambda");
    CHECK(c3.object_name(c3.src(lam)) == "l");
    CHECK(c3.object_name(c3.tgt(lam)) == "t");
    CHECK(l->component(0).num_objects() == 1);
    auto rr = dual_operad(l);
    for (int k = 0; k <= 4; ++k) CHECK(rr->component(k) == make_R_operad()->component(k));
    CHECK(l->name() == "L");
    CHECK(rr->name() == "R");
}

TEST_CASE("the mutant of R breaks associativity") {
    auto m = make_R_mutant_operad();
    auto rep = check_operad_axioms(*m, 5);
    CHECK(has_law(rep, "associativity"));
    CHECK_FALSE(has_law(rep, "unit-left"));
    CHECK_FALSE(has_law(rep, "unit-right"));
}

TEST_CASE("operads by name") {
    CHECK(operad_by_name("N")->name() == "N");
    CHECK(operad_by_name("R")->name() == "R");
    CHECK(operad_by_name("L")->name() == "L");
    CHECK(operad_by_name("Q") == nullptr);
}
