#include "reks/homology.hpp"

#include <sstream>

namespace reks {

std::string HomologyGroup::str() const
{
    std::ostringstream ss;
    bool first = true;
    if (betti > 0) {
        ss << "Z";
        if (betti > 1) ss << "^" << betti;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) ss << " + ";
        ss << "Z/" << t;
        first = false;
    }
    if (first) ss << "0";
    return ss.str();
}

const HomologyGroup& HomologyReport::at(size_t n) const
{
    static const HomologyGroup zero;
    return n < groups.size() ? groups[n] : zero;
}

bool HomologyReport::operator==(const HomologyReport& o) const
{
    size_t n = std::max(groups.size(), o.groups.size());
    for (size_t i = 0; i < n; ++i)
        if (!(at(i) == o.at(i))) return false;
    return true;
}

std::string HomologyReport::str() const
{
    std::ostringstream ss;
    for (size_t i = 0; i < groups.size(); ++i)
        ss << "H_" << i << " = " << groups[i].str() << "\n";
    return ss.str();
}

Mat ChainComplex::d(size_t n) const
{
    if (n < boundary.size()) return boundary[n];
    return Mat(rank(n == 0 ? 0 : n - 1), rank(n));
}

void ChainComplex::validate() const
{
    for (size_t n = 0; n + 1 < ranks.size(); ++n) {
        Mat dd = d(n + 1);
        Mat prev = d(n);
        if (n == 0) continue;
        if (!(prev * dd).is_zero())
            throw std::runtime_error("ChainComplex: d∘d != 0 at degree " + std::to_string(n + 1));
    }
}

HomologyReport homology(const ChainComplex& C)
{
    return homology(as_presented(C), C.top());
}

Mat PresentedComplex::d(size_t n) const
{
    if (n < diff.size() && n > 0) return diff[n];
    return Mat(gens(n == 0 ? 0 : n - 1), gens(n));
}

Mat PresentedComplex::rels(size_t n) const
{
    if (n < levels.size()) return levels[n].rels;
    return Mat(0, 0);
}

void PresentedComplex::validate() const
{
    for (size_t n = 1; n < levels.size(); ++n) {
        // d maps relations into relations
        Mat dr = d(n) * rels(n);
        Mat X;
        if (n >= 1 && !solve_integer_mat(rels(n - 1), dr, X))
            throw std::runtime_error("PresentedComplex: d(rels) not in rels at " + std::to_string(n));
        if (n >= 2) {
            Mat dd = d(n - 1) * d(n);
            if (!solve_integer_mat(rels(n - 2), dd, X))
                throw std::runtime_error("PresentedComplex: d∘d != 0 at " + std::to_string(n));
        }
    }
}

PresentedComplex as_presented(const ChainComplex& C)
{
    PresentedComplex P;
    for (size_t n = 0; n < C.ranks.size(); ++n) {
        P.levels.push_back(AbPres(C.ranks[n]));
        P.diff.push_back(C.d(n));
    }
    return P;
}

HomologyBasis homology_basis(const PresentedComplex& C, size_t n)
{
    // Cycles-mod-relations: v with d(v) in the relation lattice of level n-1.
    size_t g = C.gens(n);
    Mat dn = C.d(n);
    Mat lower_rels = (n == 0) ? Mat(dn.rows(), 0) : C.rels(n - 1);
    Mat K = kernel_basis(dn.hcat(lower_rels));
    Mat Z(g, K.cols());
    for (size_t j = 0; j < K.cols(); ++j)
        for (size_t i = 0; i < g; ++i) Z(i, j) = K(i, j);

    // Boundaries and relations, expressed in the Z-generator coordinates.
    Mat B = C.d(n + 1).hcat(C.rels(n));
    Mat X;
    if (!solve_integer_mat(Z, B, X))
        throw std::runtime_error("homology_basis: boundary not inside cycle subgroup");
    HomologyBasis h;
    h.cycles = Z;
    h.pres = X.hcat(kernel_basis(Z));
    return h;
}

HomologyReport homology(const PresentedComplex& C, size_t through)
{
    HomologyReport rep;
    rep.window = through;
    for (size_t n = 0; n <= through; ++n) {
        HomologyBasis h = homology_basis(C, n);
        CokerShape s = coker_shape(h.pres, h.cycles.cols());
        rep.groups.push_back({s.free_rank, s.torsion});
    }
    return rep;
}

Mat induced_on_homology(const PresentedComplex& A, const HomologyBasis& hA,
                        const PresentedComplex& B, const HomologyBasis& hB,
                        const Mat& f_n, size_t n)
{
    (void)A;
    Mat img = f_n * hA.cycles;
    // Each image column lies in the cycle subgroup of B modulo B's level
    // relations; solve against [cycles | rels].
    Mat Zr = hB.cycles.hcat(B.rels(n));
    Mat X;
    if (!solve_integer_mat(Zr, img, X))
        throw std::runtime_error("induced_on_homology: image not a cycle");
    Mat out(hB.cycles.cols(), img.cols());
    for (size_t j = 0; j < img.cols(); ++j)
        for (size_t i = 0; i < hB.cycles.cols(); ++i) out(i, j) = X(i, j);
    return out;
}

bool exact_at(const AbPres& P, const AbPres& Q, const AbPres& R,
              const Mat& a, const Mat& b)
{
    // b∘a = 0 in R
    Mat ba = b * a;
    Mat X;
    if (!solve_integer_mat(R.rels, ba, X)) return false;
    // |im a| * |im b| = |Q| for finite groups
    Int qo = Q.order();
    if (qo == 0 || P.order() == 0 || R.order() == 0)
        throw std::invalid_argument("exact_at: requires finite groups");
    Int ia = subgroup_order(Q, a);
    Int ib = subgroup_order(R, b);
    return ia * ib == qo;
}

int vanishing_range(const HomologyReport& h)
{
    for (size_t n = 0; n <= h.window; ++n)
        if (!h.at(n).is_zero()) return static_cast<int>(n) - 1;
    return static_cast<int>(h.window) + 1;
}

} // namespace reks
