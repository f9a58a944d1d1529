#ifndef REKS_COEFF_HPP
#define REKS_COEFF_HPP

#include "reks/doldthom.hpp"
#include "reks/real.hpp"

namespace reks {

// Coefficient system at spectrum level one: a 1-reduced Real simplicial set
// S with a constant abelian-group value on the nonbasepoint simplices (the
// involution of the group matches the Real structure), zero at the
// basepoint, restrictions the identity wherever both ends are nonbase.
struct CoeffSystem {
    RealSSet s;
    GAbelianGroup value;      // over Z/2; action[1] is the w-structure on N

    void validate() const;    // 1-reducedness and involution consistency
};

// The level-one Real K-theory and MacLane levels with Dold-Thom
// coefficients N(X), built on the edgewise subdivision of the S-direction
// so that both carry genuine simplicial Z/2-actions:
//   kr  = diagonal of (p,q) -> ∨_{s∈(sd_e S)_p} N_s(X_q)   (a pointed sset)
//   hr  = diagonal of (p,q) -> ⊕_{s∈(sd_e S)_p} N_s(X_q)   (sset + presented)
// and the levelwise-injective trace map kr -> hr.
struct TraceLevels {
    SSetPtr kr;
    SSetPtr hr_space;              // underlying simplicial set of the sum
    SMap trace;                    // kr -> hr_space
    PresentedComplex hr_moore;     // Moore complex of the sum (fixed H = 1)
};

// size_cap bounds the largest level of the sum space; construction throws
// if the curated input does not fit the desk-scale window.
TraceLevels kr_hr_levels(const CoeffSystem& sys, SSetPtr x, int trunc, size_t size_cap = 60000);

// measured equivariant connectivity of the trace map (cone homology on
// underlying and fixed points), and the Prop-3.17-style lower bound
// (2 conn X + 1, min{2 conn X^{Z/2}, conn X} + 1).
struct TraceConnReport {
    bool ok = false;
    ConnFn measured;
    ConnFn bound;
    TraceConnReport(LatticePtr lat) : measured(lat), bound(lat) {}
};
TraceConnReport verify_trace_conn(const CoeffSystem& sys, SSetPtr x, int trunc,
                                  size_t size_cap = 60000);

// general brute-force simplicial set builder: explicit elements per level
// with face/degeneracy/action callbacks, normalized into the nondegenerate
// representation.  base[n] must be the degeneracies of base[0].
struct BruteLevels {
    LatticePtr lat;
    int trunc = 0;
    std::vector<size_t> size;
    std::function<size_t(int, int, size_t)> face;    // (n, i, e) -> level n-1
    std::function<size_t(int, int, size_t)> degen;   // (n, i, e) -> level n+1
    std::function<size_t(int, int, size_t)> act;     // (g, n, e)
    std::vector<size_t> base;
};
struct BruteResult {
    SSetPtr sset;
    // element index of each level <-> Simplex of the result
    std::vector<std::vector<Simplex>> normal;
};
BruteResult normalize_brute(const BruteLevels& lv);

} // namespace reks

#endif
