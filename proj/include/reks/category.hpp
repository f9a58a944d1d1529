#ifndef REKS_CATEGORY_HPP
#define REKS_CATEGORY_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace reks {

// Finite category as composition tables.  Morphisms in hom(c,d) are indexed
// 0..hom_size(c,d)-1; composition tables are materialized and validated.
class FinCat {
  public:
    FinCat() = default;
    // lazy = true defers composition tables to first use and skips the
    // whole-table validation (for large algebra-backed categories)
    FinCat(int n_obj, std::vector<std::vector<int>> hom_size, std::vector<int> id_idx,
           std::function<int(int, int, int, int, int)> comp, std::string name = "",
           bool lazy = false);

    int n_obj() const { return n_obj_; }
    int hom_size(int c, int d) const { return hom_size_[c][d]; }
    int id_mor(int c) const { return id_idx_[c]; }
    // f ∘ g for g: c -> d, f: d -> e
    int compose(int c, int d, int e, int g, int f) const;
    const std::string& name() const { return name_; }

    bool is_iso(int c, int d, int f) const;
    int inverse(int c, int d, int f) const;       // -1 if not invertible
    std::vector<int> isos(int c, int d) const;

    void validate() const;

    size_t total_morphisms() const;

  private:
    int n_obj_ = 0;
    std::vector<std::vector<int>> hom_size_;
    std::vector<int> id_idx_;
    // comp_[c][d][e][g * hom(d,e) + f]; blocks filled on demand in lazy mode
    mutable std::vector<std::vector<std::vector<std::vector<int>>>> comp_;
    mutable std::vector<std::vector<std::vector<int>>> inv_cache_;
    std::function<int(int, int, int, int, int)> comp_fn_;
    bool lazy_ = false;
    std::string name_;
};

typedef std::shared_ptr<const FinCat> FinCatPtr;

// Contravariant strict involution: D^2 = id on objects and morphisms,
// D(f ∘ g) = D(g) ∘ D(f), D(id) = id.
struct StrictDuality {
    std::vector<int> obj;
    // mor[c][d][f] = index of D(f) in hom(D d, D c)
    std::vector<std::vector<std::vector<int>>> mor;

    int dobj(int c) const { return obj[c]; }
    int dmor(int c, int d, int f) const { return mor[c][d][f]; }
    void validate(const FinCat& cat) const;
};

// Duality up to coherent natural isomorphism (Def-3.4-style data).
struct DualityData {
    std::vector<int> obj;
    std::vector<std::vector<std::vector<int>>> mor;
    std::vector<int> eta;   // eta[c] in hom(c, D(D(c))); identity components = strict

    int dobj(int c) const { return obj[c]; }
    int dmor(int c, int d, int f) const { return mor[c][d][f]; }
    void validate(const FinCat& cat) const;
    bool is_strict(const FinCat& cat) const;
    static DualityData from_strict(const FinCat& cat, const StrictDuality& d);
};

struct Functor {
    FinCatPtr src, dst;
    std::vector<int> obj;
    std::vector<std::vector<std::vector<int>>> mor;

    int fobj(int c) const { return obj[c]; }
    int fmor(int c, int d, int f) const { return mor[c][d][f]; }
    void validate() const;
    bool is_identity() const;
};

Functor identity_functor(FinCatPtr c);
Functor compose_functors(const Functor& g, const Functor& f);

// natural isomorphism F => G between functors with common src/dst
struct NatIso {
    std::vector<int> comp;   // comp[c] in hom(F c, G c)
    void validate(const Functor& f, const Functor& g) const;
};

struct EquivalenceVerdict {
    bool fully_faithful = false;
    bool essentially_surjective = false;
    bool ok() const { return fully_faithful && essentially_surjective; }
    std::string detail;
};

EquivalenceVerdict check_equivalence(const Functor& f);

// Builder for table categories.
class CatBuilder {
  public:
    explicit CatBuilder(int n_obj, std::string name = "");
    void set_hom(int c, int d, int size);
    void set_id(int c, int idx);
    void set_comp(std::function<int(int, int, int, int, int)> comp);
    FinCatPtr finish(bool lazy = false);

  private:
    int n_obj_;
    std::string name_;
    std::vector<std::vector<int>> hom_size_;
    std::vector<int> id_idx_;
    std::function<int(int, int, int, int, int)> comp_;
};

// one-object group as a category, with the inversion duality
FinCatPtr group_category(const std::vector<std::vector<int>>& mul, const std::string& name = "");
// contractible groupoid on n objects (a unique morphism between any two)
FinCatPtr pair_groupoid(int n);

// --- strictification ---

// 𝒟C for a category with (possibly non-strict) duality: objects are
// triples (c, d, φ: d ≅ D c), morphisms pairs (a, b) with φ ∘ b = D(a) ∘ φ'.
struct Strictified {
    FinCatPtr dcat;
    StrictDuality duality;
    // destructuring: per 𝒟-object the triple, per 𝒟-morphism the pair
    std::vector<std::array<int, 3>> obj_parts;           // (c, d, phi)
    std::vector<std::vector<std::vector<std::array<int, 2>>>> mor_parts;
    Functor projection;                                   // 𝒟C -> C (an equivalence)
    FinCatPtr base;
    DualityData base_duality;

    int find_obj(int c, int d, int phi) const;
    int find_mor(int x, int y, int a, int b) const;      // -1 if not a morphism
};

Strictified strictify(FinCatPtr c, const DualityData& d);

// --- sym categories ---

// sym A for a strict duality: objects (a, k: a -> D a) with D(k) = k,
// morphisms f with k = D(f) ∘ k' ∘ f.
struct SymCat {
    FinCatPtr cat;
    std::vector<std::array<int, 2>> obj_parts;   // (a, k)
    // morphisms of sym are morphisms of A; mor_back[x][y][i] = index in hom_A
    std::vector<std::vector<std::vector<int>>> mor_back;
    int find_obj(int a, int k) const;
};

SymCat sym_category(FinCatPtr a, const StrictDuality& d);

// The mutually inverse equivalences p: sym 𝒟A -> sym A and s: sym A -> sym 𝒟A,
// with p∘s = id on the nose and an explicit natural isomorphism s∘p ≅ id.
struct SymEquivalences {
    SymCat sym_a;
    SymCat sym_da;
    Functor p, s;
    NatIso sp_to_id;    // s∘p => id as a verified natural isomorphism
};

SymEquivalences sym_equivalences(FinCatPtr a, const StrictDuality& d, const Strictified& da);

// Quasi-inverse of an equivalence that strictly commutes with dualities:
// the induced 𝒟(F', ξ) : 𝒟B -> 𝒟A, verified to commute strictly.
struct DualizedInverse {
    Functor f_prime;        // B -> A (choices: lexicographically first)
    std::vector<int> xi;    // xi[b] in hom_A(F'(D_B b), D_A F'(b))
    Functor d_inverse;      // 𝒟B -> 𝒟A
};

DualizedInverse dualized_inverse(const Functor& f, const StrictDuality& da,
                                 const StrictDuality& db, const Strictified& sa,
                                 const Strictified& sb);

} // namespace reks

#endif
