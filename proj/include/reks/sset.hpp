#ifndef REKS_SSET_HPP
#define REKS_SSET_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reks/connfn.hpp"
#include "reks/group.hpp"

namespace reks {

// A simplex in degeneracy normal form s_{w[0]} s_{w[1]} ... s_{w[r-1]} (nd),
// with w strictly decreasing.  The word entries double as the collapse set
// of the associated monotone surjection.
struct Simplex {
    int dim = 0;
    std::vector<int> word;
    int nd = 0;

    bool degenerate() const { return !word.empty(); }
    bool operator==(const Simplex& o) const
    {
        return dim == o.dim && nd == o.nd && word == o.word;
    }
    bool operator<(const Simplex& o) const
    {
        if (dim != o.dim) return dim < o.dim;
        if (nd != o.nd) return nd < o.nd;
        return word < o.word;
    }
    std::string str() const;
};

class SSet;
typedef std::shared_ptr<const SSet> SSetPtr;

// Finite pointed simplicial set with G-action, truncated at dimension
// `trunc`: nondegenerate simplices are stored per dimension 0..trunc, each
// with its faces in normal form.  The basepoint is nondegenerate 0-simplex 0
// and must be G-fixed.
class SSet : public std::enable_shared_from_this<SSet> {
  public:
    // Plain constructor; faces[n][x][i] is the i-th face of nondegenerate
    // simplex x in dimension n (faces[0] unused).  Action may be empty for
    // the trivial group.
    SSet(LatticePtr lat, int trunc, std::vector<int> n_nd,
         std::vector<std::vector<std::vector<Simplex>>> faces,
         std::vector<std::vector<std::vector<int>>> action, std::string name = "");

    const SubgroupLattice& lattice() const { return *lat_; }
    LatticePtr lattice_ptr() const { return lat_; }
    const FiniteGroup& group() const { return lat_->group(); }
    int trunc() const { return trunc_; }
    const std::string& name() const { return name_; }

    int n_nd(int dim) const
    {
        return (dim >= 0 && dim <= trunc_) ? n_nd_[dim] : 0;
    }
    int basepoint() const { return 0; }
    Simplex base_simplex(int dim) const;        // the degenerate basepoint in a dimension

    Simplex face(const Simplex& s, int i) const;
    Simplex degenerate(const Simplex& s, int i) const;
    Simplex act(int g, const Simplex& s) const;
    int act_nd(int g, int dim, int x) const;

    // All simplices of dimension n (degenerate ones included), in a fixed
    // enumeration order; index_of inverts the enumeration.
    const std::vector<Simplex>& level(int n) const;
    size_t level_size(int n) const { return level(n).size(); }
    size_t index_of(const Simplex& s) const;

    bool is_base_degenerate(const Simplex& s) const
    {
        return s.dim == 0 ? s.nd == 0 : (s.nd == 0 && (int)s.word.size() == s.dim);
    }

    void validate() const;   // simplicial identities + action laws + fixed basepoint

    // Number of nondegenerate simplices in all dimensions.
    size_t total_nd() const;

  private:
    LatticePtr lat_;
    int trunc_;
    std::vector<int> n_nd_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
    std::vector<std::vector<std::vector<int>>> action_;
    std::string name_;
    mutable std::vector<std::vector<Simplex>> levels_;
    mutable std::vector<std::map<Simplex, size_t>> level_idx_;
    void build_levels() const;
};

// Pointed simplicial map, given on nondegenerate simplices.
struct SMap {
    SSetPtr src, dst;
    std::vector<std::vector<Simplex>> img;   // img[n][x]

    Simplex apply(const Simplex& s) const;
    void validate(bool check_equivariance = true) const;
    bool is_identity() const;
    bool levelwise_injective_nd() const;     // injective on nondegenerates per dim
};

SMap identity_map(SSetPtr x);
SMap compose(const SMap& g, const SMap& f);  // g after f
SMap constant_map(SSetPtr x, SSetPtr y);     // collapse to basepoint

// --- basic builders (trivial action unless stated) ---

SSetPtr point_sset(LatticePtr lat, int trunc = 0);
SSetPtr circle_sset(LatticePtr lat, int trunc);           // S^1 = Δ[1]/∂
SSetPtr sphere_sset(LatticePtr lat, int n, int trunc);    // one 0-cell + one n-cell
SSetPtr interval_sset(LatticePtr lat, int trunc);         // Δ[1], basepoint = vertex 1

// --- constructions ---

struct ProductResult {
    SSetPtr prod;
    std::vector<SMap> projections;
    // nondegenerate simplex (n, x) of the product is the tuple of factor
    // simplices parts[n][x]
    std::vector<std::vector<std::vector<Simplex>>> parts;
    std::vector<std::map<std::vector<Simplex>, int>> tuple_idx;
    int nd_of_tuple(int dim, const std::vector<Simplex>& t) const;
};

// n-ary product with diagonal action twisted by a permutation action of G
// on the factors (factor_perm[g][j] = image of factor j); identity
// permutation when empty.  All factors must share the lattice.
ProductResult product_sset(const std::vector<SSetPtr>& factors,
                           const std::vector<std::vector<int>>& factor_perm = {});

struct WedgeResult {
    SSetPtr wedge;
    std::vector<SMap> inclusions;
};

WedgeResult wedge_sset(const std::vector<SSetPtr>& summands,
                       const std::vector<std::vector<int>>& summand_perm = {});

// Quotient of X by the nondegenerate-closed set `kill` (kill[n] lists
// nondegenerate ids); returns the quotient and the projection map.
struct QuotientResult {
    SSetPtr quot;
    SMap proj;
};
QuotientResult quotient_sset(SSetPtr x, const std::vector<std::vector<int>>& kill);

// Smash product via product / fat wedge.
struct SmashResult {
    SSetPtr smash;
    SMap from_product;
    ProductResult product;
};
SmashResult smash_sset(const std::vector<SSetPtr>& factors,
                       const std::vector<std::vector<int>>& factor_perm = {});

// Pushout of X <-f- A -g-> Y where f is levelwise injective; returns
// P together with the two legs X -> P and Y -> P.
struct PushoutResult {
    SSetPtr po;
    SMap from_x, from_y;
};
PushoutResult pushout_sset(const SMap& f, const SMap& g);

// Reduced cone and suspension, with the canonical inclusion / quotient maps.
struct ConeResult {
    SSetPtr cone;
    SMap incl;        // X -> CX
};
ConeResult cone_sset(SSetPtr x);

SSetPtr suspension_sset(SSetPtr x);       // X ∧ S^1 (trivial action on S^1)

// Subcomplex spanned by the kept nondegenerate simplices (must be
// face-closed, G-stable, and contain the basepoint).
struct SubResult {
    SSetPtr sub;
    SMap incl;
};
SubResult subcomplex_sset(SSetPtr x, const std::vector<std::vector<bool>>& keep,
                          const std::string& name = "sub");

// H-fixed subcomplex together with its inclusion.
struct FixedResult {
    SSetPtr fixed;    // carries the trivial-group lattice
    SMap incl;        // into x (equivariance not meaningful; validated non-eq)
};
FixedResult fixed_points(SSetPtr x, size_t sub);

// Connectivity of a pointed simplicial set per subgroup, measured by reduced
// homology of the fixed-point complexes.  Window-limited +∞ means "no
// nonzero reduced homology up to the truncation".
ConnFn space_conn(SSetPtr x);

// --- indexed wedges and products over a finite G-set ---

struct IndexedResult {
    SSetPtr wedge;
    SSetPtr prod;
    SMap comparison;   // wedge -> prod, identity on summand j, basepoint elsewhere
};
IndexedResult indexed_wedge_product(SSetPtr x, const FiniteGSet& J);

// Representation sphere S^{R[I]}: |I|-fold smash of simplicial circles with
// G permuting the factors through its action on I.
SSetPtr rep_sphere(const FiniteGSet& I, int trunc);

// Strongly cocartesian (n+1)-cube built from initial maps e_i with common
// domain by iterated amalgamation; vertices indexed by subsets of the e-list.
struct GCube {
    std::vector<SMap> initial;                  // the given e_i
    std::vector<SSetPtr> vertex;                // indexed by bitmask over e's
    std::vector<std::vector<SMap>> edge;        // edge[S][i]: vertex S -> S|{i}, for i not in S
    SSetPtr at(uint32_t mask) const { return vertex[mask]; }
};
GCube build_cocartesian_cube(const std::vector<SMap>& es);

} // namespace reks

#endif
