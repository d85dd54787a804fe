#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "skewcat/colaxalg.hpp"
#include "skewcat/skewmon.hpp"
#include "skewcat/tmulticat.hpp"

namespace skewcat {

// Malformed JSON, wrong types, unknown or missing keys.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SchemaKind { Category, SkewMonoidal, Multicat };
const char* schema_name(SchemaKind k);

struct ParsedInput {
    SchemaKind kind = SchemaKind::Category;
    CategoryPtr category;
    std::shared_ptr<const SkewMonoidalCategory> skew;
    MulticatPtr multicat;
};

// The schema is picked from the top-level keys. Throws ParseError, or StructuralError for dangling ids.
ParsedInput parse_input(const std::string& text);
CategoryData category_data_from_json(const std::string& text);

std::string category_to_json(const FinCategory& c);
std::string skew_to_json(const SkewMonoidalCategory& c);
// Substitution and action are written out as tables even when the multicategory holds rules.
std::string multicat_to_json(const TMulticategory& m);
std::string colax_to_json(const NormalColaxAlgebra& a);

std::string report_to_json(SchemaKind kind, const Report& r, int checked_up_to_arity = -1);

}  // namespace skewcat
