#ifndef REKS_WALL_HPP
#define REKS_WALL_HPP

#include <string>
#include <vector>

#include "reks/bimodule.hpp"
#include "reks/category.hpp"
#include "reks/real.hpp"

namespace reks {

// Finite ring with unit, as tables.
struct FiniteRing {
    int n = 0;
    std::vector<std::vector<int>> add, mul;
    int zero = 0, one = 1;
    std::vector<int> neg;

    void validate() const;
    static FiniteRing field2();
    static FiniteRing field3();
    static FiniteRing z4();
    static FiniteRing m2f2();                 // 2x2 matrices over F2
    static FiniteRing dual_numbers_f2();      // F2[x]/x^2
    static FiniteRing preset(const std::string& name);
};

// Wall antistructure (A, w, ε): w an anti-automorphism, w(1) = 1, and w²
// equal to conjugation by the unit ε.
struct WallRing {
    FiniteRing A;
    std::vector<int> w;
    int eps = 1;

    void validate() const;
    bool w_eps_is_eps() const;        // records the open w(ε) = ε question
    bool w_eps_inverse() const;       // w(ε)·ε = 1, needed for the duality coherence
    int winv(int a) const;
    static WallRing preset(const std::string& name);
};

// Bimodule (M, h) over a Wall antistructure: h(a·m) = h(m)·w(a),
// h(m·a) = w(a)·h(m), h²(m) = ε·m·ε^{-1}.
struct WallBimodule {
    int n = 0;
    std::vector<std::vector<int>> add;
    int zero = 0;
    std::vector<int> neg;
    std::vector<std::vector<int>> left;     // left[a][m]
    std::vector<std::vector<int>> right;    // right[m][a]
    std::vector<int> h;

    void validate(const WallRing& ring) const;
    static WallBimodule ring_as_bimodule(const WallRing& ring,
                                         const std::vector<int>& h_table);
    static WallBimodule preset(const WallRing& ring, const std::string& name);
};

// Semidirect product ring A ⋉ M with antistructure (w ⋉ h, (ε, 0));
// element (a, m) encoded as a + |A|·m.
struct SemidirectRing {
    WallRing ring;
    int a_size = 0, m_size = 0;
    int pair(int a, int m) const { return a + a_size * m; }
    int a_part(int x) const { return x % a_size; }
    int m_part(int x) const { return x / a_size; }
};
SemidirectRing semidirect_ring(const WallRing& a, const WallBimodule& m);

// brute-force unital ring isomorphism search (test oracle)
bool rings_isomorphic(const FiniteRing& a, const FiniteRing& b);

// Skeleton of the category of free right modules A^0..A^r, with the
// hom(-, A_s) duality: D = w-transpose on matrices, η = ε·id.
struct ModCatSkeleton {
    WallRing ring;
    int rank_bound = 0;
    FinCatPtr cat;
    AbEnrichment enrich;
    DualityData duality;

    int mor_index(int j, int k, const std::vector<int>& entries) const;
    std::vector<int> mor_entries(int j, int k, int idx) const;
    int zero_mor(int j, int k) const;
};

ModCatSkeleton mod_cat_skeleton(const WallRing& a, int rank_bound);

// H^M(P, Q) = hom_A(P, Q ⊗_A M) as a bimodule on the skeleton, with the
// duality J = h-transpose; coherence against (D, η) is machine-checked.
struct HmBimodule {
    Bimodule bimod;
    std::function<int(int, int, int)> J;    // pre-strictification duality
    const ModCatSkeleton* skel = nullptr;
    const WallBimodule* m = nullptr;

    int elem_index(int j, int k, const std::vector<int>& entries) const;
    std::vector<int> elem_entries(int j, int k, int idx) const;
};

HmBimodule hm_bimodule(const ModCatSkeleton& skel, const WallBimodule& m);

// verify the Def-3.11-style coherence of (J, D, η) on the skeleton
void validate_hm_duality(const HmBimodule& hm);

// strictified bimodule 𝒟M over 𝒟C, with its strict duality 𝒟J
struct StrictifiedBimodule {
    Bimodule bimod;            // over ds.dcat
    BimoduleDuality J;
};
StrictifiedBimodule strictify_bimodule(const Strictified& ds, const Bimodule& m,
                                       std::function<int(int, int, int)> j_base);

// Dold-Thom bimodule M(X) of a finite pointed set (levelwise for a Real
// simplicial set): M^{⊕(nonbase points)} with diagonal structure; for
// Real input the involution composes h with the simplex involution.
struct LevelwiseWallBimodule {
    std::vector<WallBimodule> levels;          // per simplicial degree
    std::vector<std::vector<int>> involution;  // h(X) with the w-twist, per level
};
WallBimodule bimodule_of_pointed_set(const WallRing& a, const WallBimodule& m, int n_points);
LevelwiseWallBimodule bimodule_of_real_sset(const WallRing& a, const WallBimodule& m,
                                            const RealSSet& x);

} // namespace reks

#endif
