#ifndef REKS_REAL_HPP
#define REKS_REAL_HPP

#include "reks/sset.hpp"

namespace reks {

// Finite pointed Real simplicial set: a simplicial set with levelwise
// involutions w_p reversing the simplicial direction.  The normative
// identities, fixed once here and unit-tested, are
//     w d_i = d_{p-i} w      and      w s_i = s_{p-1-i} w.
// The involution is stored on nondegenerate simplices and extended to
// degenerate ones through the s-identity.
class RealSSet {
  public:
    RealSSet(SSetPtr underlying, std::vector<std::vector<int>> w_nd);

    const SSetPtr& sset() const { return x_; }
    int trunc() const { return x_->trunc(); }
    Simplex w(const Simplex& s) const;
    int w_nd(int dim, int nd) const { return w_[dim][nd]; }

    void validate() const;

  private:
    SSetPtr x_;
    std::vector<std::vector<int>> w_;
};

// S^{1,1} = Δ[1]/∂ with the coordinate-reversing levelwise involution.
RealSSet real_circle(int trunc);

// Smash of Real simplicial sets with the diagonal involution.
RealSSet real_smash(const RealSSet& a, const RealSSet& b);

// Edgewise subdivision: (sd_e Z)_p = Z_{2p+1} with d_i = d_i d_{2p+1-i},
// s_i = s_i s_{2p+1-i}, and the simplicial Z/2-action induced by w.
// The result is truncated at `trunc` (requires 2*trunc+1 <= Z.trunc()).
struct SubdivResult {
    SSetPtr sd;                      // carries a Z/2-action
    // correspondence: simplices of (sd)_p are simplices of Z_{2p+1};
    // from_z[p][k] is the index (within Z.level(2p+1)) of the k-th
    // nondegenerate p-simplex of sd.
    std::vector<std::vector<size_t>> from_z;
};
SubdivResult edgewise_subdivide(const RealSSet& z, int trunc);

} // namespace reks

#endif
