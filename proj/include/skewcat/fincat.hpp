#pragma once

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewcat {

// A single failed law instance. `law` is a short stable tag, `detail` names the ids involved.
struct Violation {
    std::string law;
    std::string detail;
};
using Report = std::vector<Violation>;

// Malformed input: dangling ids, duplicates, missing table rows.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int ipow(int base, int exp);
// Tuple codes put the first entry in the most significant digit, so codes follow lexicographic order.
int tuple_code(std::span<const int> t, int base);
void tuple_decode(int code, int base, std::span<int> out);

struct MorphismDecl {
    std::string id, src, tgt;
};
struct ComposeDecl {
    std::string g, f, gf;
};

// String-level presentation, exactly the JSON fields.
struct CategoryData {
    std::vector<std::string> objects;
    std::vector<MorphismDecl> morphisms;
    std::map<std::string, std::string> identities;
    std::vector<ComposeDecl> compose;
};

class FinCategory {
public:
    FinCategory() = default;

    // Objects and morphisms are re-sorted by name; throws StructuralError on dangling or duplicate ids.
    static FinCategory from_data(const CategoryData& data);
    CategoryData to_data() const;

    int num_objects() const { return static_cast<int>(obj_.size()); }
    int num_morphisms() const { return static_cast<int>(mor_.size()); }
    const std::string& object_name(int a) const { return obj_[a]; }
    const std::string& morphism_name(int f) const { return mor_[f]; }
    int find_object(std::string_view name) const;
    int find_morphism(std::string_view name) const;

    int src(int f) const { return src_[f]; }
    int tgt(int f) const { return tgt_[f]; }
    int id(int a) const { return id_[a]; }
    bool is_identity(int f) const { return id_[src_[f]] == f; }
    // g after f; -1 when the table has no entry.
    int compose(int g, int f) const { return comp_[static_cast<size_t>(g) * mor_.size() + f]; }
    const std::vector<int>& hom(int a, int b) const { return hom_[static_cast<size_t>(a) * obj_.size() + b]; }
    // Position of f inside hom(src f, tgt f).
    int hom_position(int f) const { return hom_pos_[f]; }
    bool is_thin() const;

    bool operator==(const FinCategory& o) const {
        return obj_ == o.obj_ && mor_ == o.mor_ && src_ == o.src_ && tgt_ == o.tgt_ && id_ == o.id_ && comp_ == o.comp_;
    }

private:
    std::vector<std::string> obj_, mor_;
    std::vector<int> src_, tgt_, id_, comp_, hom_pos_;
    std::vector<std::vector<int>> hom_;
    void index_homs();
    friend FinCategory opposite_category(const FinCategory& c);
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

Report check_category(const FinCategory& c);

struct Functor {
    CategoryPtr source, target;
    std::vector<int> obj_map, mor_map;
};

// Builds a functor from name maps; throws StructuralError for ids outside source or target.
Functor make_functor(CategoryPtr source, CategoryPtr target, const std::map<std::string, std::string>& objects,
                     const std::map<std::string, std::string>& morphisms);
Functor identity_functor(CategoryPtr c);
Report check_functor(const Functor& f);

struct NatTrans {
    std::shared_ptr<const Functor> source, target;
    std::vector<int> components;  // indexed by object of the common domain
};
Report check_nat_trans(const NatTrans& t);

// Objects "(a,b)", morphisms "(f,g)".
FinCategory product_category(const FinCategory& c, const FinCategory& d);
FinCategory opposite_category(const FinCategory& c);

bool is_epimorphism(const FinCategory& c, int f);
// -1 if f is not invertible.
int inverse_of(const FinCategory& c, int f);

std::string join_names(const std::vector<std::string>& names);

}  // namespace skewcat
