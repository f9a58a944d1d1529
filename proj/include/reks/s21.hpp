#ifndef REKS_S21_HPP
#define REKS_S21_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "reks/wall.hpp"

namespace reks {

// Ambient data for the S^{2,1} construction: an additive table category
// with a zero object and an element structure on objects (used for the
// exactness conditions).
struct S21Ctx {
    FinCatPtr cat;
    int zero_obj = 0;
    std::function<int(int, int)> zero_mor;        // zero of hom(c,d)
    std::function<int(int)> obj_size;             // number of elements
    std::function<int(int, int, int, int)> apply; // (c,d,f,elem) -> elem
    std::function<int(int)> zero_elem;
    std::optional<StrictDuality> duality;         // for the conjugation duality
};

S21Ctx skeleton_ctx(const ModCatSkeleton& sk);
// 𝒟C of a skeleton, with the element structure through the first component
// and the exact structure transported along the projection
S21Ctx strictified_ctx(const Strictified& ds, const ModCatSkeleton& sk);

// monotone θ: [2] -> [p]
typedef std::array<int, 3> Theta;
std::vector<Theta> injective_thetas(int p);
bool theta_leq(const Theta& a, const Theta& b);

// Object of S^{2,1}_p: objects at the injective θ (zero elsewhere) and a
// full table of structure maps X(ψ) for ψ: ρ <= θ.
struct S21Obj {
    int p = 0;
    std::vector<int> vert;                        // per injective θ
    std::vector<std::vector<int>> map;            // map[ti][tj] for θ_i <= θ_j, else -1

    bool operator==(const S21Obj& o) const { return p == o.p && vert == o.vert && map == o.map; }
    bool operator<(const S21Obj& o) const
    {
        return std::tie(p, vert, map) < std::tie(o.p, o.vert, o.map);
    }
};

// value/map accessors handling non-injective θ (zero object / zero maps)
int s21_value(const S21Ctx& ctx, const S21Obj& x, const Theta& t);
int s21_map(const S21Ctx& ctx, const S21Obj& x, const Theta& from, const Theta& to);

// functoriality + vanishing + the 4-term exactness for every ψ: [3] -> [p]
bool s21_valid(const S21Ctx& ctx, const S21Obj& x, std::string* why = nullptr);

// all objects satisfying the conditions (raw, no dedup)
std::vector<S21Obj> s21_enumerate(const S21Ctx& ctx, int p);

// natural transformations X => Y as per-θ morphism tuples
std::vector<std::vector<int>> s21_hom(const S21Ctx& ctx, const S21Obj& x, const S21Obj& y);
std::vector<std::vector<int>> s21_isos(const S21Ctx& ctx, const S21Obj& x, const S21Obj& y);
// first natural isomorphism found, if any (early-exit search)
std::optional<std::vector<int>> s21_iso_exists(const S21Ctx& ctx, const S21Obj& x,
                                               const S21Obj& y);

// simplicial structure: restriction along a monotone α: [q] -> [p]
S21Obj s21_restrict(const S21Ctx& ctx, const S21Obj& x, const std::vector<int>& alpha);

// conjugation duality (requires ctx.duality)
S21Obj s21_duality(const S21Ctx& ctx, const S21Obj& x);

// --- splitting oracle ---

// monotone surjections ρ: [p] -> [2]; the oracle object for constituent
// ranks r_ρ has Y_θ = ⊕_{ρ ∈ r(θ)} (rank r_ρ), with inclusion/projection maps
std::vector<Theta> surjections_p2(int p);     // encoded by (i, j) block lengths
bool retraction_of(int p, const Theta& rho_blocks, const Theta& theta);

// oracle objects over a skeleton: choose a rank per surjection
S21Obj splitting_oracle_object(const ModCatSkeleton& sk, int p, const std::vector<int>& ranks);
std::vector<std::vector<int>> splitting_oracle_ranks(const ModCatSkeleton& sk, int p);

// constituent ranks of an arbitrary object (via kernel cardinalities);
// returns empty if some kernel is not free of well-defined rank
std::vector<int> constituent_ranks(const S21Ctx& ctx, const ModCatSkeleton& sk, const S21Obj& x);

// --- the level bimodule M_p(X, Y) ---

// compatible families {m_θ} inside ⊕_θ M(X_θ, Y_θ): X(ψ)^* m_θ = Y(ψ)_* m_ρ
std::vector<std::vector<int>> extend_bimodule(const S21Ctx& ctx, const Bimodule& m,
                                              const S21Obj& x, const S21Obj& y);

// restriction of ⊕J to the compatible families (duality of the level
// bimodule); asserts the image stays compatible
std::vector<int> extend_bimodule_J(const S21Ctx& ctx, const Bimodule& m,
                                   const BimoduleDuality& j, const S21Obj& x, const S21Obj& y,
                                   const std::vector<int>& fam);

// --- Prop 3.20 verification ---

struct SplitPAReport {
    bool ok = true;
    std::string detail;
    size_t objects_a = 0, objects_b = 0, classes_checked = 0;
    size_t hom_pairs_checked = 0;
};

// F : i(S^{2,1}_p 𝒟P_A) ⋉ 𝒟(H^M)_p -> i S^{2,1}_p 𝒟P_{A⋉M}: duality
// commutation, full faithfulness on class representatives, essential
// surjectivity via the splitting-oracle route.
SplitPAReport verify_split_pa(const WallRing& a, const WallBimodule& m, int p, int rank_bound);

} // namespace reks

#endif
