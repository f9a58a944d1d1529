#ifndef REKS_HOMOLOGY_HPP
#define REKS_HOMOLOGY_HPP

#include <vector>
#include <optional>
#include <string>

#include "reks/linalg.hpp"

namespace reks {

// Homology of one degree: free rank plus torsion coefficients in
// divisibility order.
struct HomologyGroup {
    size_t betti = 0;
    std::vector<Int> torsion;
    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const
    {
        return betti == o.betti && torsion == o.torsion;
    }
    std::string str() const;
};

struct HomologyReport {
    std::vector<HomologyGroup> groups;    // degrees 0 .. window
    size_t window = 0;                    // groups valid in degrees <= window
    const HomologyGroup& at(size_t n) const;
    bool operator==(const HomologyReport& o) const;
    std::string str() const;
};

// Chain complex of free Z-modules: ranks[n] and boundary[n] : C_n -> C_{n-1}.
// boundary[0] is a 0 x ranks[0] matrix.
struct ChainComplex {
    std::vector<size_t> ranks;
    std::vector<Mat> boundary;

    size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    size_t rank(size_t n) const { return n < ranks.size() ? ranks[n] : 0; }
    Mat d(size_t n) const;           // boundary out of degree n (possibly zero-sized)
    void validate() const;           // checks d∘d = 0 exactly
};

HomologyReport homology(const ChainComplex& C);

// Chain complex of presented f.g. abelian groups: level n is
// coker(rels[n]) and diff[n] : level n -> level n-1 is a matrix on
// generators compatible with the relations.
struct PresentedComplex {
    std::vector<AbPres> levels;
    std::vector<Mat> diff;           // diff[n] : gens_n -> gens_{n-1}; diff[0] empty

    size_t top() const { return levels.empty() ? 0 : levels.size() - 1; }
    size_t gens(size_t n) const { return n < levels.size() ? levels[n].gens : 0; }
    Mat d(size_t n) const;
    Mat rels(size_t n) const;
    void validate() const;           // d∘d = 0 and d(rels) ⊆ rels, both mod relations
};

PresentedComplex as_presented(const ChainComplex& C);

// Homology of a presented complex in degrees <= through (inclusive).
// Degree n of the output is H_n = {v : dv ∈ rels} / (im d + rels).
HomologyReport homology(const PresentedComplex& C, size_t through);

// Homology with explicit cycle representatives, for mapping classes around.
struct HomologyBasis {
    // Column i of cycles is an integer vector in the level's generators;
    // the classes of these columns generate H_n, presented as
    // coker(pres) on these generators.
    Mat cycles;
    Mat pres;
    HomologyGroup shape() const { return {coker_shape(pres, cycles.cols()).free_rank,
                                          coker_shape(pres, cycles.cols()).torsion}; }
};

HomologyBasis homology_basis(const PresentedComplex& C, size_t n);

// Matrix of the map induced on H_n by a levelwise chain map f (given on
// generators), from complex A to complex B, with respect to the generator
// columns of the two homology bases.
Mat induced_on_homology(const PresentedComplex& A, const HomologyBasis& hA,
                        const PresentedComplex& B, const HomologyBasis& hB,
                        const Mat& f_n, size_t n);

// Exactness of  P --a--> Q --b--> R  at Q, where P,Q,R are presented groups
// and a, b act on generators.  All three groups must be finite.
bool exact_at(const AbPres& P, const AbPres& Q, const AbPres& R,
              const Mat& a, const Mat& b);

// Largest c such that H_n = 0 for all n <= c, scanning degrees <= window.
// Returns window+1 to signal "no nonzero group seen in the window".
int vanishing_range(const HomologyReport& h);

} // namespace reks

#endif
