#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewcat/fincat.hpp"

namespace skewcat {

// Name-level presentation, as read from JSON.
struct SkewMonoidalData {
    CategoryData category;
    std::vector<std::array<std::string, 3>> tensor_objects;    // a, b, a⊗b
    std::vector<std::array<std::string, 3>> tensor_morphisms;  // f, g, f⊗g
    std::string unit;
    std::vector<std::array<std::string, 4>> alpha;  // a, b, c, component
    std::vector<std::array<std::string, 2>> lambda, rho;
};

// alpha_{a,b,c}: (ab)c -> a(bc), lambda_a: ia -> a, rho_a: a -> ai.
struct SkewMonoidalCategory {
    CategoryPtr base;
    std::vector<int> tensor_obj;  // N*N
    std::vector<int> tensor_mor;  // M*M
    int unit = 0;
    std::vector<int> alpha;  // N^3
    std::vector<int> lambda, rho;

    int N() const { return base->num_objects(); }
    int M() const { return base->num_morphisms(); }
    int t(int a, int b) const { return tensor_obj[a * N() + b]; }
    int tm(int f, int g) const { return tensor_mor[f * M() + g]; }
    int al(int a, int b, int c) const { return alpha[(a * N() + b) * N() + c]; }

    static SkewMonoidalCategory from_data(const SkewMonoidalData& d);
    SkewMonoidalData to_data() const;
};

// Tables must be total; missing components are structural errors raised by from_data. Tags: tensor-*, alpha-type,
// lambda-type, rho-type, *-naturality, A1..A5.
Report check_skew_monoidal(const SkewMonoidalCategory& c);

bool is_left_normal(const SkewMonoidalCategory& c);
bool lambda_all_epi(const SkewMonoidalCategory& c);

struct SkewClosedData {
    std::vector<int> hom;   // [b,c] at b*N+c
    std::vector<int> eval;  // [b,c]⊗b -> c
};
std::optional<SkewClosedData> is_closed_skew_monoidal(const SkewMonoidalCategory& c);

int left_bracketed_tensor(const SkewMonoidalCategory& c, std::span<const int> objs);
// i a_1 ... a_n
int left_bracketed_tensor_with_unit(const SkewMonoidalCategory& c, std::span<const int> objs);

struct LaxMonoidalFunctor {
    std::shared_ptr<const SkewMonoidalCategory> source, target;
    std::vector<int> obj_map, mor_map;
    std::vector<int> f2;  // Fa⊗Fb -> F(a⊗b) at a*N+b
    int f0 = -1;          // i -> F i
};
Report check_lax_monoidal(const LaxMonoidalFunctor& f);
LaxMonoidalFunctor identity_lax(const std::shared_ptr<const SkewMonoidalCategory>& c);

// Mutually inverse strong monoidal isomorphisms, or nothing.
std::optional<std::pair<LaxMonoidalFunctor, LaxMonoidalFunctor>> monoidal_iso_search(
    const std::shared_ptr<const SkewMonoidalCategory>& c, const std::shared_ptr<const SkewMonoidalCategory>& d);

// Every skew monoidal structure on the category, in canonical order (tensor, unit, lambda, rho, alpha).
std::vector<SkewMonoidalCategory> search_skew_monoidal(const CategoryPtr& base, int threads = 0);

}  // namespace skewcat
