#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewcat/tmulticat.hpp"

namespace skewcat {

struct UniversalMultimap {
    int x = -1;  // object of component(inputs.size())
    std::vector<int> inputs;
    int classifier = -1;
    int theta = -1;
    bool universal = false;
    bool left_universal = false;
};

// One entry per (x, inputs) with arity <= max_arity; theta < 0 where nothing was found.
class ClassifierTable {
public:
    explicit ClassifierTable(MulticatPtr m);
    const TMulticategory& multicat() const { return *m_; }
    const MulticatPtr& multicat_ptr() const { return m_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int key(int x, std::span<const int> inputs) const { return m_->hom_index(x, inputs, 0) / m_->num_objects(); }
    const UniversalMultimap& at(int k) const { return entries_[k]; }
    const UniversalMultimap& at(int x, std::span<const int> inputs) const { return entries_[key(x, inputs)]; }
    void set(UniversalMultimap u);
    bool complete() const;
    // First (x, inputs) in canonical order without a classifier.
    std::optional<int> first_missing() const;
    std::string describe(int k) const;

private:
    MulticatPtr m_;
    std::vector<UniversalMultimap> entries_;
};

// u -> u(theta) from A_e(m;b) onto A_x(inputs;b), for every b.
bool is_universal(const TMulticategory& s, int theta);
// u -> u(theta, 1, ..., 1) from A_t(m, tail; c) onto A_x(inputs, tail; c), for every tail within the truncation.
bool is_left_universal(const TMulticategory& s, int theta);
// Tails of length exactly one only.
bool is_one_step_left_universal(const TMulticategory& s, int theta);

std::optional<UniversalMultimap> find_universal(const TMulticategory& s, int x, std::span<const int> inputs);

struct WeakRepresentability {
    bool holds = false;
    ClassifierTable table;
    std::string failure;  // first (x, inputs) without a classifier
};
WeakRepresentability weak_representability(const MulticatPtr& s);
bool is_weakly_representable(const MulticatPtr& s);

// Decided through the one-step criterion.
bool is_left_representable(const MulticatPtr& s);

struct BaseClassifiers {
    UniversalMultimap nullary;
    std::vector<UniversalMultimap> binary;  // tight binary, at a*N+b
};
// Nothing if the nullary or some tight binary classifier is missing.
std::optional<BaseClassifiers> find_base_classifiers(const MulticatPtr& s);
// Throws StructuralError naming the missing classifier when called without the base classifiers.
ClassifierTable build_inductive_classifiers(const MulticatPtr& s, const BaseClassifiers& base);

struct RepresentabilityConditions {
    bool c1 = false, c2 = false, c3 = false, c4 = false;
    bool agree() const { return c1 == c2 && c2 == c3 && c3 == c4; }
};
RepresentabilityConditions evaluate_representability_conditions(const MulticatPtr& s);
Report check_prop47_equivalences(const MulticatPtr& s);

struct ClosedStructure {
    std::vector<int> hom;   // [b,c] at b*N+c
    std::vector<int> eval;  // tight multimap ([b,c], b; c)
    // [u,v] for unary u: b' -> b and v: c -> c'
    std::unordered_map<long long, int> hom_functor;
    int hom_on(int u, int v) const {
        auto it = hom_functor.find((static_cast<long long>(u) << 32) | static_cast<unsigned>(v));
        return it == hom_functor.end() ? -1 : it->second;
    }
};
std::optional<ClosedStructure> find_closed_structure(const MulticatPtr& s);
// Functor laws of [-,-] on unary maps and naturality of the evaluation.
Report check_hom_functor(const TMulticategory& s, const ClosedStructure& c);

struct ClosednessConditions {
    bool closed = false;
    bool c1 = false, c2 = false, c3 = false, c4 = false;
    bool agree() const { return c1 == c2 && c2 == c3 && c3 == c4; }
};
ClosednessConditions evaluate_closedness_conditions(const MulticatPtr& s);
Report check_prop411(const MulticatPtr& s);

// Analyzer report as JSON text.
std::string analyze_json(const MulticatPtr& s);

}  // namespace skewcat
