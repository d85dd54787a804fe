#include "doctest.h"
#include "multicat_fixtures.hpp"
#include "skewcat/representability.hpp"

#include "json.hpp"

using namespace skewcat;

TEST_CASE("classifiers in the 2-chain example") {
    auto s = fixtures::chain2_fst_skew(4);
    const int t1 = s->operad().object(1, "t");
    for (int a = 0; a < 2; ++a) {
        const int in[] = {a};
        auto u = find_universal(*s, t1, in);
        REQUIRE(u);
        CHECK(u->theta == s->identity(a));
        CHECK(u->classifier == a);
    }
    auto nul = find_universal(*s, s->operad().object(0, "l"), std::span<const int>());
    REQUIRE(nul);
    CHECK(nul->classifier == 0);
    const int t2 = s->operad().object(2, "t");
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const int in[] = {a, b};
            auto u = find_universal(*s, t2, in);
            REQUIRE(u);
            CHECK(u->classifier == a);
            CHECK(u->left_universal);
        }
    auto w = weak_representability(s);
    CHECK(w.holds);
    CHECK(w.table.complete());
    CHECK(is_left_representable(s));
}

TEST_CASE("inductive classifiers") {
    auto s = fixtures::chain2_fst_skew(4);
    auto base = find_base_classifiers(s);
    REQUIRE(base);
    auto t = build_inductive_classifiers(s, *base);
    CHECK(t.complete());
    const int t3 = s->operad().object(3, "t");
    for (int a = 0; a < 2; ++a) {
        const int in[] = {a, 1, 0};
        CHECK(t.at(t3, in).classifier == a);
        CHECK(t.at(t3, in).universal);
    }
    // every loose shape is classified by the bottom
    for (int k = 0; k < t.size(); ++k) {
        const auto& u = t.at(k);
        CHECK(u.universal);
        if (u.x != s->operad().unit() && s->operad().component(u.inputs.size()).object_name(u.x) == "l")
            CHECK(u.classifier == 0);
    }
    BaseClassifiers broken = *base;
    broken.binary.pop_back();
    CHECK_THROWS_AS(build_inductive_classifiers(s, broken), StructuralError);
}

TEST_CASE("the four conditions agree") {
    auto good = evaluate_representability_conditions(fixtures::chain2_fst_skew(4));
    CHECK((good.c1 && good.c2 && good.c3 && good.c4));
    auto bad = evaluate_representability_conditions(fixtures::identities_tight_skew(3));
    CHECK_FALSE((bad.c1 || bad.c2 || bad.c3 || bad.c4));
    CHECK(check_prop47_equivalences(fixtures::identities_tight_skew(3)).empty());
    for (auto op : {make_R_operad(), make_L_operad(), make_terminal_operad()}) {
        auto t = fixtures::terminal_multicat(op, 3);
        auto p = evaluate_representability_conditions(t);
        CHECK((p.c1 && p.c2 && p.c3 && p.c4));
    }
    auto w = weak_representability(fixtures::identities_tight_skew(3));
    CHECK_FALSE(w.holds);
    CHECK(w.failure == "l()");
}

TEST_CASE("monoid multicategories") {
    // one object, every hom a copy of the monoid: representable with classifier the identity action
    auto z2 = fixtures::monoid_multicat(3, 2, [](int a, int b) { return (a + b) % 2; });
    CHECK(check_tmulticat(*z2).empty());
    CHECK(is_weakly_representable(z2));
    CHECK(is_left_representable(z2));
    CHECK(check_prop47_equivalences(z2).empty());
    // max on {0,1} is not a group, so multiplication by a nonzero element is not injective
    auto mx = fixtures::monoid_multicat(3, 2, [](int a, int b) { return a > b ? a : b; });
    auto w = weak_representability(mx);
    CHECK(w.holds);
    for (int k = 0; k < w.table.size(); ++k) CHECK(mx->map_name(w.table.at(k).theta).substr(2) == "0");
}

TEST_CASE("closed structure of the 2-chain example") {
    auto s = fixtures::chain2_fst_skew(4);
    auto cs = find_closed_structure(s);
    REQUIRE(cs);
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) CHECK(cs->hom[b * 2 + c] == c);
    CHECK(check_hom_functor(*s, *cs).empty());
    auto p = evaluate_closedness_conditions(s);
    CHECK(p.closed);
    CHECK(p.agree());
    CHECK(p.c1);
    CHECK(check_prop411(s).empty());

    CHECK_FALSE(find_closed_structure(fixtures::identities_tight_skew(3)));
    CHECK(check_prop411(fixtures::identities_tight_skew(3)).front().law == "not-closed");
}

TEST_CASE("analyzer report") {
    auto j = nlohmann::json::parse(analyze_json(fixtures::chain2_fst_skew(3)));
    CHECK(j["weakly_representable"] == true);
    CHECK(j["left_representable"] == true);
    CHECK(j["closed"] == true);
    CHECK(j["closed_with_unit"] == true);
    CHECK(j["checked_up_to_arity"] == 3);
    CHECK(j["witnesses"]["nullary_classifier"]["object"] == "0");
    CHECK(j["witnesses"]["tensor"].size() == 4);
    auto k = nlohmann::json::parse(analyze_json(fixtures::identities_tight_skew(3)));
    CHECK(k["weakly_representable"] == false);
    CHECK(k["witnesses"]["missing_classifier"] == "l()");
}
