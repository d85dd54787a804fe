#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewcat/catoperad.hpp"
#include "skewcat/fincat.hpp"

namespace skewcat {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const noexcept {
        size_t h = v.size();
        for (int x : v) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct HomKey {
    int x = 0;  // object of component(inputs.size())
    std::vector<int> inputs;
    int output = 0;
    int arity() const { return static_cast<int>(inputs.size()); }
};

// Raised by from_tight_subsets when a required composite is not tight.
class ClosureError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

// Arity-truncated T-multicategory. Homs exist for every (x, inputs, output) of arity <= max_arity and are
// indexed densely; multimaps carry globally unique names. Substitution and the operad action are either
// tables or rules; both answer -1 where undefined.
class TMulticategory {
public:
    using SubstFn = std::function<int(int, std::span<const int>)>;
    using ActFn = std::function<int(int, int)>;

    TMulticategory(OperadPtr op, std::vector<std::string> objects, int max_arity);

    const CatOperad& operad() const { return *op_; }
    const OperadPtr& operad_ptr() const { return op_; }
    int num_objects() const { return static_cast<int>(objects_.size()); }
    const std::string& object_name(int a) const { return objects_[a]; }
    const std::vector<std::string>& objects() const { return objects_; }
    int find_object(std::string_view name) const;
    int max_arity() const { return max_arity_; }

    int hom_count() const { return static_cast<int>(hom_maps_.size()); }
    int hom_index(int x, std::span<const int> inputs, int output) const;
    HomKey hom_key(int h) const;
    int hom_arity(int h) const { return hom_arity_[h]; }
    int hom_x(int h) const { return hom_x_[h]; }
    int hom_output(int h) const { return (h - block_start_[h_block_[h]]) % num_objects(); }
    int hom_input(int h, int i) const;
    const std::vector<int>& maps_in(int h) const { return hom_maps_[h]; }

    int add_map(int h, std::string name);
    int map_count() const { return static_cast<int>(names_.size()); }
    const std::string& map_name(int m) const { return names_[m]; }
    int map_hom(int m) const { return map_hom_[m]; }
    int map_arity(int m) const { return hom_arity_[map_hom_[m]]; }
    int find_map(std::string_view name) const;
    // Maps with output b and arity k.
    const std::vector<int>& maps_with(int b, int k) const { return by_out_arity_[b * (max_arity_ + 1) + k]; }

    int identity(int a) const { return identity_[a]; }
    void set_identity(int a, int m) { identity_[a] = m; }

    // sigma is a morphism of component(arity of m) out of the hom's x; identities act trivially.
    int act(int sigma, int m) const;
    void set_action(int sigma, int m, int result);
    void set_action_rule(ActFn fn) { act_fn_ = std::move(fn); }
    bool action_is_table() const { return !act_fn_; }

    // An outer nullary map substitutes to itself.
    int subst(int outer, std::span<const int> inners) const;
    void set_subst(int outer, std::span<const int> inners, int result);
    void set_subst_rule(SubstFn fn) { subst_fn_ = std::move(fn); }
    bool subst_is_table() const { return !subst_fn_; }

    // Every hom has at most one element.
    bool thin() const;

    // Visits every (g; f_1..f_n) with 1 <= n, matching types, and total arity <= max_arity.
    void for_each_subst_tuple(const std::function<void(int, std::span<const int>)>& fn) const;
    // Visits tuples of maps whose outputs are `outputs`, with total arity <= budget.
    void for_each_inner_tuple(std::span<const int> outputs, int budget,
                              const std::function<void(std::span<const int>)>& fn) const;
    // Hom that g(f_1..f_n) must land in, or -1 if the types do not match or the arity is too large.
    int expected_result_hom(int outer, std::span<const int> inners) const;

    std::string describe_hom(int h) const;

private:
    OperadPtr op_;
    std::vector<std::string> objects_;
    int max_arity_;
    std::vector<int> block_start_, h_block_, hom_arity_, hom_x_;
    std::vector<std::vector<int>> block_of_;  // [n][x] -> block
    std::vector<std::vector<int>> hom_maps_;
    std::vector<std::string> names_;
    std::vector<int> map_hom_;
    std::unordered_map<std::string, int> name_index_;
    std::vector<std::vector<int>> by_out_arity_;
    std::vector<int> identity_;
    std::unordered_map<std::vector<int>, int, VecHash> subst_table_;
    std::unordered_map<long long, int> act_table_;
    SubstFn subst_fn_;
    ActFn act_fn_;
};

using MulticatPtr = std::shared_ptr<const TMulticategory>;

Report check_tmulticat(const TMulticategory& m);

// Same objects, operad, truncation, hom contents, identities, action and substitution, compared by name.
bool same_tables(const TMulticategory& a, const TMulticategory& b);

// Homs A_e(a;b), composition by substitution; morphism names are multimap names.
FinCategory underlying_category(const TMulticategory& m);

// Unary-map actions on hom sets.
struct HomAction {
    const TMulticategory* m;
    // u after g, for u in A_e(b;c) and g with output b.
    int post(int u, int g) const;
    // g with v precomposed in input slot i, for v in A_e(a;a_i).
    int pre(int g, int i, int v) const;
};
HomAction extend_hom_action(const TMulticategory& m);
// Functor laws, bifunctoriality, compatibility with the operad action and with substitution.
Report check_hom_action(const TMulticategory& m);

struct MulticatMorphism {
    MulticatPtr source, target;
    std::vector<int> obj_map, map_map;
};
Report check_morphism(const MulticatMorphism& f);

struct Multicat2Cell {
    MulticatMorphism F, G;
    std::vector<int> components;  // phi_a in target A_e(Fa; Ga)
};
Report check_2cell(const Multicat2Cell& phi);

MulticatMorphism identity_morphism(const MulticatPtr& m);
// Mutually inverse morphisms, first in canonical order, or nothing.
std::optional<std::pair<MulticatMorphism, MulticatMorphism>> iso_search(const MulticatPtr& a, const MulticatPtr& b);

// ---- skew (operad R) views ----
bool is_skew(const TMulticategory& m);
int r_object(const TMulticategory& m, int n, char which);  // which = 't' or 'l'
int tight_hom(const TMulticategory& s, std::span<const int> inputs, int output);
int loose_hom(const TMulticategory& s, std::span<const int> inputs, int output);
int lambda_of(const TMulticategory& s, int n);
bool is_tight(const TMulticategory& s, int m);
// Image of a tight map under the lambda action.
int j_of(const TMulticategory& s, int m);

// tight[m] marks tight maps of an ordinary multicategory m (operad N); unary identities must be marked.
MulticatPtr from_tight_subsets(const MulticatPtr& m, const std::vector<bool>& tight);
MulticatPtr all_tight(const MulticatPtr& m);
MulticatPtr loose_part(const MulticatPtr& s);
// Inverse of from_tight_subsets when j is injective: the loose part and the j-image of the tight maps.
std::pair<MulticatPtr, std::vector<bool>> extract_tight_subsets(const MulticatPtr& s);

}  // namespace skewcat
