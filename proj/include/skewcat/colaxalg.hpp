#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "skewcat/representability.hpp"

namespace skewcat {

// Functor base^n -> base as tables over tuple codes (objects base N, morphisms base M).
struct TupleFunctor {
    int arity = 0;
    std::vector<int> obj, mor;
};

// Normal colax algebra for an operad (L in practice) on a finite category, truncated at max_arity.
// m[n][x] for every object x of component(n); m[1][unit] is the identity and is not stored separately.
// m_sigma[n][s][code of a] is the component m_sigma(a): m_{src s}(a) -> m_{tgt s}(a).
// gamma[{n, x, k_1..k_n, x_1..x_n}][code of the concatenated inputs] is
// Gamma: m_{x(x_1..x_n)}(a) -> m_x(m_{x_1}(a_1), ..., m_{x_n}(a_n)).
struct NormalColaxAlgebra {
    OperadPtr operad;
    CategoryPtr base;
    int max_arity = 0;
    std::vector<std::vector<TupleFunctor>> m;
    std::vector<std::vector<std::vector<int>>> m_sigma;
    std::map<std::vector<int>, std::vector<int>> gamma;

    int apply_obj(int n, int x, std::span<const int> a) const;
    int apply_mor(int n, int x, std::span<const int> f) const;
    // -1 when the key is absent.
    int gamma_at(int x, std::span<const int> ks, std::span<const int> xs, std::span<const int> a) const;
};

// Visits every (x; x_1..x_n) with n >= 1 and total arity <= max_arity, as key vectors.
void for_each_gamma_key(const CatOperad& op, int max_arity, const std::function<void(const std::vector<int>&)>& fn);

Report check_colax_algebra(const NormalColaxAlgebra& a);
bool is_LBC(const NormalColaxAlgebra& a);

// Throws StructuralError when the table has a hole.
NormalColaxAlgebra multicat_to_colax(const MulticatPtr& m, const ClassifierTable& table);
// Inductive table when it is available and universal, else the canonical one.
ClassifierTable preferred_classifiers(const MulticatPtr& m);
MulticatPtr colax_to_multicat(const NormalColaxAlgebra& a);

}  // namespace skewcat
