#ifndef REKS_RETRACTIVE_HPP
#define REKS_RETRACTIVE_HPP

#include "reks/sset.hpp"

namespace reks {

// Retractive simplicial G-set (X, p, s) over B: p∘s = id, s a levelwise
// injective section.
struct Retractive {
    SSetPtr total, base;
    SMap p, s;
    void validate() const;
};

Retractive over_point(SSetPtr x);                 // B = *
Retractive base_over_itself(SSetPtr b);           // X = B

// Pointed sset from a finite pointed G-set (dimension-0 cells).
SSetPtr gset_to_sset(const FiniteGSet& j, int trunc);

// X ∧_B Y: pushout of X ∨_B Y -> X ×_B Y collapsed onto B.
Retractive smash_over_base(const Retractive& x, const Retractive& y);

// The retractive object K × B over B (projection, section through K's basepoint).
Retractive times_base(SSetPtr k, SSetPtr b);

// S^{R[I]}_B X = X ∧_B (S^{R[I]} × B); for B = * this is S^{R[I]} ∧ X.
Retractive suspension_over_base(const Retractive& x, const FiniteGSet& I);

// Mapping cylinder X ∧_B (I × B) of the projection p.
Retractive cylinder_over_base(const Retractive& x);

// ∨_B^J X: pushout of ∨_J B -> ∨_J X along the fold map.
Retractive indexed_wedge_over_base(const Retractive& x, const FiniteGSet& J);

// connectivity of p measured on fixed points (spec usage: conn of (X,p,s))
ConnFn retractive_conn(const Retractive& x);

} // namespace reks

#endif
