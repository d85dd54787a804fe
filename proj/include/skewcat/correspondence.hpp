#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "skewcat/colaxalg.hpp"
#include "skewcat/skewmon.hpp"

namespace skewcat {

using SkewPtr = std::shared_ptr<const SkewMonoidalCategory>;

// The normal colax L-algebra of left-bracketed tensors, with Gamma built from rho and alpha.
NormalColaxAlgebra monoidal_to_colax(const SkewMonoidalCategory& c, int max_arity);
MulticatPtr monoidal_to_multicat(const SkewMonoidalCategory& c, int max_arity);

// Throws StructuralError naming the missing classifier, or when the input is not left representable
// or is truncated below arity 3.
SkewMonoidalCategory multicat_to_monoidal(const MulticatPtr& s);

struct MonoidalRoundtrip {
    SkewPtr back;
    std::optional<std::pair<LaxMonoidalFunctor, LaxMonoidalFunctor>> iso;
};
MonoidalRoundtrip roundtrip_monoidal(const SkewPtr& c, int max_arity);

struct MulticatRoundtrip {
    MulticatPtr back;
    std::optional<std::pair<MulticatMorphism, MulticatMorphism>> iso;
};
MulticatRoundtrip roundtrip_multicat(const MulticatPtr& s);

Report check_loose_classifier_adjunction(const MulticatPtr& s);

struct ClassifyFlags {
    bool left_normal = false, lambda_epi = false, closed = false;
    bool operator==(const ClassifyFlags&) const = default;
};
struct Classification {
    ClassifyFlags monoidal, multicat;
    bool agree() const { return monoidal == multicat; }
};
// j bijective / injective everywhere, and closedness, on the multicategory side.
ClassifyFlags multicat_flags(const MulticatPtr& s);
ClassifyFlags monoidal_flags(const SkewMonoidalCategory& c);
Classification classify(const SkewMonoidalCategory& c, int max_arity);
Classification classify(const MulticatPtr& s);

std::string classification_json(const Classification& c);

}  // namespace skewcat
