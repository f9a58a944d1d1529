#ifndef REKS_DOLDTHOM_HPP
#define REKS_DOLDTHOM_HPP

#include <optional>
#include <string>

#include "reks/conn.hpp"
#include "reks/homology.hpp"
#include "reks/sset.hpp"

namespace reks {

// Finite abelian group ⊕ Z/d_i (d_i = 0 allowed, meaning a Z summand) with a
// G-action by additive automorphisms, given as integer matrices on the
// generators.
struct GAbelianGroup {
    LatticePtr lat;
    std::vector<Int> ds;
    std::vector<Mat> action;       // one square matrix per group element

    size_t gens() const { return ds.size(); }
    AbPres pres() const { return AbPres::cyclic_sum(ds); }
    void validate() const;

    static GAbelianGroup with_trivial_action(LatticePtr lat, std::vector<Int> ds);
    // Z/2 acting by negation on each summand.
    static GAbelianGroup with_negation(LatticePtr c2lat, std::vector<Int> ds);
    // Z/2 acting by an explicit involution matrix.
    static GAbelianGroup with_involution(LatticePtr c2lat, std::vector<Int> ds, Mat invol);
};

// Simplicial abelian group with G-action, presented levelwise; structure
// maps and the action are matrices on generators.  Degeneracy data is
// optional (the normalized Dold-Thom model only carries faces).
struct SimplicialAb {
    LatticePtr lat;
    std::vector<AbPres> levels;
    std::vector<std::vector<Mat>> face;     // face[n][i] : level n -> level n-1
    std::vector<std::vector<Mat>> degen;    // degen[n][i] : level n -> level n+1 (may be empty)
    std::vector<std::vector<Mat>> action;   // action[g][n]

    int top() const { return (int)levels.size() - 1; }
    Mat boundary(int n) const;              // alternating face sum
    PresentedComplex complex() const;
    void validate(bool with_degeneracies) const;
};

// The equivariant Dold-Thom construction M(X), levelwise ⊕_{x∈X_n∖*} M·x
// with the transfer functoriality and diagonal action.
// `normalized` = generators only on nondegenerate simplices (the degenerate
// summand splits off equivariantly); `full` = all simplices, with
// degeneracy operators included.
struct DTSpace {
    GAbelianGroup m;
    SSetPtr x;
    SimplicialAb full;
    SimplicialAb normalized;
};

DTSpace dold_thom(const GAbelianGroup& m, SSetPtr x);

// Matrix of f_* : M(X)_n -> M(Y)_n (transfer formula) on the chosen model.
Mat dt_map_level(const GAbelianGroup& m, const SMap& f, int n, bool normalized);

// H-fixed points of a SimplicialAb: a presented complex whose level-n
// generators are the columns of gens[n] in ambient coordinates.
struct FixedAb {
    std::vector<Mat> gens;
    PresentedComplex cx;
};
FixedAb fixed_ab(const SimplicialAb& a, size_t sub);

// Orbit/stabilizer description of (M(X)_n)^H: ⊕_{[x]∈(X_n∖*)/H} M^{H_x},
// with the comparison map into the ambient level (summing over the orbit).
// Verifies that the comparison is an isomorphism onto the fixed subgroup.
struct DTFixedFormula {
    std::vector<AbPres> levels;
    std::vector<Mat> to_ambient;
};
DTFixedFormula dt_fixed_formula(const DTSpace& dt, size_t sub, bool normalized,
                                bool verify_iso = true);

// Bredon-type homology report: Moore homology of the fixed points of M(X),
// for every subgroup class, through degree `window`.
std::vector<HomologyReport> bredon(const DTSpace& dt, int window);

// Connectivity of the fixed simplicial abelian group (least nonvanishing
// Moore homology degree, minus one); exact for simplicial abelian groups.
ExtInt dt_fixed_conn(const DTSpace& dt, size_t sub, int window);

struct LinearityReport {
    bool ok = true;
    std::string detail;
};

// Wedge case of G-linearity: M(∨_J X) -> ∏_J M(X) is a literal isomorphism
// of simplicial G-abelian groups, checked levelwise through `through_dim`.
LinearityReport verify_linearity_wedge(const GAbelianGroup& m, SSetPtr x, const FiniteGSet& J,
                                       int through_dim);

// Square case: a cofibration X >-> Y induces M(X) -> M(Y) -> M(Y/X),
// degreewise split short exact on all fixed points; the long exact homology
// sequence is verified exact through degree `les_window`.
LinearityReport verify_linearity_cofib(const GAbelianGroup& m, const SMap& incl, int les_window);

struct ConnPreservationReport {
    bool ok = true;
    ConnFn measured;
    ConnFn bound;
    ConnPreservationReport(LatticePtr lat) : measured(lat), bound(lat) {}
};

// Prop-A.1-style check: conn M(X)^H >= min_{K<=H} conn X^K for every H.
ConnPreservationReport verify_conn_preservation(const GAbelianGroup& m, SSetPtr x);

} // namespace reks

#endif
