#ifndef REKS_CONN_HPP
#define REKS_CONN_HPP

#include "reks/homology.hpp"
#include "reks/sset.hpp"

namespace reks {

// Reduced normalized chains: one generator per nondegenerate simplex, the
// basepoint 0-simplex dropped, boundary the alternating face sum with
// degenerate faces discarded.
ChainComplex reduced_chains(const SSet& x);

// Chain map on reduced chains induced by a pointed simplicial map.
std::vector<Mat> chain_map(const SMap& f);

// Mapping cone of f on reduced chains; degree n is src_{n-1} ⊕ dst_n.
ChainComplex mapping_cone(const SMap& f);

// Homological connectivity of a map: the largest ν with reduced homology of
// the cone vanishing in degrees <= ν; +∞ when it vanishes through the
// truncation window (window-limited verdict).
ExtInt conn_map(const SMap& f);

// conn_map applied to f^H for every subgroup H, assembled per class.
ConnFn equivariant_conn(const SMap& f);

// Restriction of an equivariant map to H-fixed subcomplexes.
SMap restrict_to_fixed(const SMap& f, size_t sub, const FixedResult& fs, const FixedResult& fd);

HomologyReport reduced_homology(const SSet& x);

} // namespace reks

#endif
