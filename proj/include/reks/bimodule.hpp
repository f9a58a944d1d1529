#ifndef REKS_BIMODULE_HPP
#define REKS_BIMODULE_HPP

#include "reks/category.hpp"

namespace reks {

// Abelian-group-valued bimodule M : C^op ⊗ C -> Ab on a table category,
// with elements enumerated per pair of objects.  push = covariant action on
// the second slot, pull = contravariant action on the first.
class Bimodule {
  public:
    Bimodule() = default;
    Bimodule(FinCatPtr cat, std::vector<std::vector<int>> sizes,
             std::function<int(int, int, int, int)> add,
             std::function<int(int, int)> zero,
             std::function<int(int, int, int)> neg,
             std::function<int(int, int, int, int, int)> push,   // (c,d,d',f∈hom(d,d'),m)
             std::function<int(int, int, int, int, int)> pull);  // (c,d,c',g∈hom(c',c),m)

    const FinCat& cat() const { return *cat_; }
    FinCatPtr cat_ptr() const { return cat_; }
    int size(int c, int d) const { return sizes_[c][d]; }
    int add(int c, int d, int m1, int m2) const { return add_(c, d, m1, m2); }
    int zero(int c, int d) const { return zero_(c, d); }
    int neg(int c, int d, int m) const { return neg_(c, d, m); }
    int push(int c, int d, int dp, int f, int m) const { return push_(c, d, dp, f, m); }
    int pull(int c, int d, int cp, int g, int m) const { return pull_(c, d, cp, g, m); }

    void validate() const;

    static Bimodule zero_bimodule(FinCatPtr cat);

  private:
    FinCatPtr cat_;
    std::vector<std::vector<int>> sizes_;
    std::function<int(int, int, int, int)> add_;
    std::function<int(int, int)> zero_;
    std::function<int(int, int, int)> neg_;
    std::function<int(int, int, int, int, int)> push_;
    std::function<int(int, int, int, int, int)> pull_;
};

// Duality J : M(c,d) -> M(D d, D c) over a strict duality on the category;
// natural, additive, with J² = id.
struct BimoduleDuality {
    std::function<int(int, int, int)> J;
    void validate(const Bimodule& m, const StrictDuality& d) const;
};

// Semidirect product C ⋉ M: homs C(c,d) × M(c,d) with composition
// (f,m)∘(g,n) = (f∘g, f_* n + g^* m); morphism index = f * |M| + m.
struct SemidirectCat {
    FinCatPtr cat;
    FinCatPtr base;
    const Bimodule* m = nullptr;
    std::vector<std::vector<int>> msize;

    int pair_index(int c, int d, int f, int mm) const { return f * msize[c][d] + mm; }
    int f_part(int c, int d, int idx) const { return idx / msize[c][d]; }
    int m_part(int c, int d, int idx) const { return idx % msize[c][d]; }

    Functor project;   // to C
    Functor section;   // C -> C ⋉ M at m = 0
};

SemidirectCat semidirect_cat(const Bimodule& m);

// duality D ⋉ J on the semidirect product
StrictDuality semidirect_duality(const SemidirectCat& sd, const StrictDuality& d,
                                 const BimoduleDuality& j);

// Subcategory of isomorphisms of a table category.
struct IsoCat {
    FinCatPtr cat;
    std::vector<std::vector<std::vector<int>>> back;   // iso index -> original hom index
    int find(int c, int d, int orig) const;
};
IsoCat iso_subcategory(FinCatPtr c);

// ∐_C M: the groupoid with objects of C and only endomorphisms M(c,c);
// e : ∐_C M -> i(C ⋉ M), m -> (id_c, m).
struct CoprodGroupoid {
    FinCatPtr cat;
    const Bimodule* m = nullptr;
    StrictDuality duality;      // from D and J
    void validate_embedding(const SemidirectCat& sd, const IsoCat& iso) const;
};
CoprodGroupoid coprod_groupoid(const Bimodule& m, const StrictDuality& d,
                               const BimoduleDuality& j);

// Ab-enrichment of a table category (hom-sets are abelian groups and
// composition is bilinear).
struct AbEnrichment {
    std::function<int(int, int, int, int)> add;
    std::function<int(int, int)> zero;
    std::function<int(int, int, int)> neg;
    void validate(const FinCat& cat) const;
};

// Split square-zero extension classification: for exact p : B -> C with
// section s and natural iso U : p∘s => id, presents ker p as a bimodule and
// returns the comparison F : C ⋉ ker p -> B, verified to be an equivalence
// via the explicit hom-level inverse.
struct SplitExtension {
    Bimodule ker;                  // over C
    SemidirectCat semidirect;
    Functor comparison;            // C ⋉ ker p -> B
    bool equivalence = false;
    std::string detail;
};

SplitExtension classify_split_extension(const Functor& p, const Functor& s,
                                        const NatIso& u, const AbEnrichment& enr_b);

} // namespace reks

#endif
