#ifndef REKS_LINALG_HPP
#define REKS_LINALG_HPP

#include <vector>
#include <string>
#include <stdexcept>
#include <boost/multiprecision/cpp_int.hpp>

namespace reks {

typedef boost::multiprecision::cpp_int Int;
typedef boost::multiprecision::cpp_rational Rat;

// Dense integer matrix with arbitrary-precision entries.  Sizes here are
// desk-scale (a few thousand rows at most), so dense storage is fine;
// exactness is what matters.
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}

    static Mat identity(size_t n);
    static Mat zero(size_t r, size_t c) { return Mat(r, c); }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    Int& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Int& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat transpose() const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void add_row(size_t dst, size_t src, const Int& k);   // row dst += k * row src
    void add_col(size_t dst, size_t src, const Int& k);
    void negate_row(size_t i);
    void negate_col(size_t j);

    Mat col(size_t j) const;
    void set_col(size_t j, const Mat& v);
    // Horizontal concatenation [this | o].
    Mat hcat(const Mat& o) const;
    Mat vcat(const Mat& o) const;

    std::string str() const;

  private:
    size_t r_, c_;
    std::vector<Int> a_;
};

// Smith normal form: U * A * V = D with U, V unimodular and the diagonal of
// D satisfying d1 | d2 | ... ; entries of D are nonnegative.
struct SNF {
    Mat D, U, V;
    size_t rank = 0;                 // number of nonzero diagonal entries
    std::vector<Int> diag() const;
};

SNF smith_normal_form(const Mat& A);

// Basis of the integer kernel lattice {x : Ax = 0}, returned as the columns
// of a matrix (cols(A) x k).
Mat kernel_basis(const Mat& A);

// Solve Ax = b over the integers.  Returns true and fills x on success.
bool solve_integer(const Mat& A, const Mat& b, Mat& x);

// Solve AX = B columnwise; true iff every column is solvable.
bool solve_integer_mat(const Mat& A, const Mat& B, Mat& X);

// Invariant factors of coker(A : Z^c -> Z^r): the nontrivial torsion
// coefficients (each > 1, each dividing the next) followed implicitly by
// `free_rank` copies of Z.
struct CokerShape {
    std::vector<Int> torsion;
    size_t free_rank = 0;
    Int order() const;               // 0 denotes infinite
    bool operator==(const CokerShape& o) const
    {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
};

CokerShape coker_shape(const Mat& A, size_t ambient_rank);

// A finitely generated abelian group presented as coker(rels : Z^k -> Z^gens).
struct AbPres {
    size_t gens = 0;
    Mat rels;                        // gens x k

    AbPres() : rels(0, 0) {}
    explicit AbPres(size_t g) : gens(g), rels(g, 0) {}
    AbPres(size_t g, const Mat& r) : gens(g), rels(r) {}

    static AbPres cyclic_sum(const std::vector<Int>& ds);  // ⊕ Z/d_i, d_i = 0 means Z

    CokerShape shape() const { return coker_shape(rels, gens); }
    Int order() const { return shape().order(); }

    // Does the column vector v lie in the relation lattice (i.e. v == 0 in
    // the group)?
    bool is_zero_elem(const Mat& v) const;
    bool elems_equal(const Mat& v, const Mat& w) const;
};

// Order of the subgroup of `G` generated by the columns of `S`.
Int subgroup_order(const AbPres& G, const Mat& S);

} // namespace reks

#endif
