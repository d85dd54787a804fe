#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>

#include "skewcat/fincat.hpp"

namespace skewcat {

class CatOperad;
using OperadPtr = std::shared_ptr<const CatOperad>;

// Components come from a rule and are materialized on first use.
// Substitution takes the outer element x of component(n), the inner arities ks and inner elements xs
// (objects or morphisms of component(ks[i])) and returns an element of component(sum ks), or -1.
class CatOperad {
public:
    using ComponentRule = std::function<FinCategory(int)>;
    using SubstRule = std::function<int(const CatOperad&, int, std::span<const int>, std::span<const int>)>;

    CatOperad(std::string name, ComponentRule component, std::string unit_name, SubstRule subst_obj,
              SubstRule subst_mor);

    const std::string& name() const { return name_; }
    const FinCategory& component(int n) const;
    int unit() const { return unit_; }
    int subst_obj(int x, std::span<const int> ks, std::span<const int> xs) const { return obj_(*this, x, ks, xs); }
    int subst_mor(int f, std::span<const int> ks, std::span<const int> fs) const { return mor_(*this, f, ks, fs); }
    // Object of component(n) with the given name, or -1.
    int object(int n, std::string_view name) const { return component(n).find_object(name); }

    const ComponentRule& component_rule() const { return comp_; }
    const SubstRule& obj_rule() const { return obj_; }
    const SubstRule& mor_rule() const { return mor_; }
    const std::string& unit_name() const { return unit_name_; }

private:
    std::string name_, unit_name_;
    int unit_ = -1;
    ComponentRule comp_;
    SubstRule obj_, mor_;
    std::vector<FinCategory> eager_;  // arities below kEager, built up front
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<FinCategory>> cache_;
    static constexpr int kEager = 9;
};

// Morphism rule shared by operads whose components are posets: the unique arrow between the substituted
// endpoints, or -1 if there is none.
int poset_subst_mor(const CatOperad& op, int f, std::span<const int> ks, std::span<const int> fs);

OperadPtr make_terminal_operad();
OperadPtr make_R_operad();
OperadPtr dual_operad(const OperadPtr& t);
// dual_operad(make_R_operad()), cached.
OperadPtr make_L_operad();
// "N", "R" or "L"; nullptr otherwise.
OperadPtr operad_by_name(std::string_view name);

// R with subst_obj(t; l, ...) = t for outer arity at least two.
OperadPtr make_R_mutant_operad();

Report check_operad_axioms(const CatOperad& t, int bound = 5);

inline int sum_of(std::span<const int> ks) {
    int s = 0;
    for (int k : ks) s += k;
    return s;
}

}  // namespace skewcat
