#include "reks/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace reks {

Mat Mat::identity(size_t n)
{
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const
{
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const
{
    if (c_ != o.r_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat out(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.c_; ++j)
                if (o(k, j) != 0) out(i, j) += x * o(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Mat Mat::transpose() const
{
    Mat out(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

void Mat::swap_rows(size_t i, size_t j)
{
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Mat::swap_cols(size_t i, size_t j)
{
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Mat::add_row(size_t dst, size_t src, const Int& k)
{
    for (size_t j = 0; j < c_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void Mat::add_col(size_t dst, size_t src, const Int& k)
{
    for (size_t i = 0; i < r_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void Mat::negate_row(size_t i)
{
    for (size_t j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void Mat::negate_col(size_t j)
{
    for (size_t i = 0; i < r_; ++i) (*this)(i, j) = -(*this)(i, j);
}

Mat Mat::col(size_t j) const
{
    Mat v(r_, 1);
    for (size_t i = 0; i < r_; ++i) v(i, 0) = (*this)(i, j);
    return v;
}

void Mat::set_col(size_t j, const Mat& v)
{
    for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v(i, 0);
}

Mat Mat::hcat(const Mat& o) const
{
    if (r_ != o.r_) throw std::invalid_argument("Mat::hcat: row mismatch");
    Mat out(r_, c_ + o.c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) out(i, j) = (*this)(i, j);
        for (size_t j = 0; j < o.c_; ++j) out(i, c_ + j) = o(i, j);
    }
    return out;
}

Mat Mat::vcat(const Mat& o) const
{
    if (c_ != o.c_) throw std::invalid_argument("Mat::vcat: col mismatch");
    Mat out(r_ + o.r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out(i, j) = (*this)(i, j);
    for (size_t i = 0; i < o.r_; ++i)
        for (size_t j = 0; j < c_; ++j) out(r_ + i, j) = o(i, j);
    return out;
}

std::string Mat::str() const
{
    std::ostringstream ss;
    for (size_t i = 0; i < r_; ++i) {
        ss << "[";
        for (size_t j = 0; j < c_; ++j) ss << (j ? " " : "") << (*this)(i, j);
        ss << "]\n";
    }
    return ss.str();
}

std::vector<Int> SNF::diag() const
{
    std::vector<Int> d;
    size_t n = std::min(D.rows(), D.cols());
    for (size_t i = 0; i < n; ++i) d.push_back(D(i, i));
    return d;
}

namespace {

// Locate entry of minimal nonzero absolute value in the lower-right block.
bool locate_pivot(const Mat& D, size_t s, size_t& pi, size_t& pj)
{
    bool found = false;
    Int best = 0;
    for (size_t i = s; i < D.rows(); ++i)
        for (size_t j = s; j < D.cols(); ++j) {
            if (D(i, j) == 0) continue;
            Int v = abs(D(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

bool row_col_clear(const Mat& D, size_t s)
{
    for (size_t i = s + 1; i < D.rows(); ++i)
        if (D(i, s) != 0) return false;
    for (size_t j = s + 1; j < D.cols(); ++j)
        if (D(s, j) != 0) return false;
    return true;
}

} // namespace

SNF smith_normal_form(const Mat& A)
{
    SNF out;
    out.D = A;
    out.U = Mat::identity(A.rows());
    out.V = Mat::identity(A.cols());
    Mat& D = out.D;
    Mat& U = out.U;
    Mat& V = out.V;

    size_t n = std::min(A.rows(), A.cols());
    for (size_t s = 0; s < n; ++s) {
        size_t pi, pj;
        if (!locate_pivot(D, s, pi, pj)) break;
        D.swap_rows(s, pi);
        U.swap_rows(s, pi);
        D.swap_cols(s, pj);
        V.swap_cols(s, pj);

        while (!row_col_clear(D, s)) {
            for (size_t i = s + 1; i < D.rows(); ++i) {
                if (D(i, s) == 0) continue;
                Int q = D(i, s) / D(s, s);
                D.add_row(i, s, -q);
                U.add_row(i, s, -q);
            }
            for (size_t j = s + 1; j < D.cols(); ++j) {
                if (D(s, j) == 0) continue;
                Int q = D(s, j) / D(s, s);
                D.add_col(j, s, -q);
                V.add_col(j, s, -q);
            }
            // Remainders may have reappeared below/right; promote the new
            // minimal entry and repeat.
            if (!row_col_clear(D, s)) {
                locate_pivot(D, s, pi, pj);
                D.swap_rows(s, pi);
                U.swap_rows(s, pi);
                D.swap_cols(s, pj);
                V.swap_cols(s, pj);
            }
        }

        // Enforce divisibility d_s | D(i,j) for the rest of the block.
        bool redo = false;
        for (size_t i = s + 1; i < D.rows() && !redo; ++i)
            for (size_t j = s + 1; j < D.cols() && !redo; ++j)
                if (D(i, j) % D(s, s) != 0) {
                    D.add_row(s, i, 1);
                    U.add_row(s, i, 1);
                    redo = true;
                }
        if (redo) {
            --s;
            continue;
        }
        if (D(s, s) < 0) {
            D.negate_row(s);
            U.negate_row(s);
        }
    }

    for (size_t i = 0; i < n; ++i)
        if (out.D(i, i) != 0) out.rank = i + 1;
    return out;
}

Mat kernel_basis(const Mat& A)
{
    if (A.rows() == 0) return Mat::identity(A.cols());
    SNF s = smith_normal_form(A);
    size_t k = A.cols() - s.rank;
    Mat out(A.cols(), k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < A.cols(); ++i) out(i, j) = s.V(i, s.rank + j);
    return out;
}

bool solve_integer(const Mat& A, const Mat& b, Mat& x)
{
    if (b.rows() != A.rows() || b.cols() != 1)
        throw std::invalid_argument("solve_integer: bad rhs shape");
    SNF s = smith_normal_form(A);
    Mat c = s.U * b;
    Mat y(A.cols(), 1);
    size_t n = std::min(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i) {
        Int d = (i < n) ? s.D(i, i) : Int(0);
        if (d == 0) {
            if (c(i, 0) != 0) return false;
        } else {
            if (c(i, 0) % d != 0) return false;
            if (i < A.cols()) y(i, 0) = c(i, 0) / d;
        }
    }
    x = s.V * y;
    return true;
}

bool solve_integer_mat(const Mat& A, const Mat& B, Mat& X)
{
    SNF s = smith_normal_form(A);
    Mat C = s.U * B;
    Mat Y(A.cols(), B.cols());
    size_t n = std::min(A.rows(), A.cols());
    for (size_t j = 0; j < B.cols(); ++j) {
        for (size_t i = 0; i < A.rows(); ++i) {
            Int d = (i < n) ? s.D(i, i) : Int(0);
            if (d == 0) {
                if (C(i, j) != 0) return false;
            } else {
                if (C(i, j) % d != 0) return false;
                if (i < A.cols()) Y(i, j) = C(i, j) / d;
            }
        }
    }
    X = s.V * Y;
    return true;
}

Int CokerShape::order() const
{
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

CokerShape coker_shape(const Mat& A, size_t ambient_rank)
{
    CokerShape out;
    if (A.rows() != ambient_rank) throw std::invalid_argument("coker_shape: rank mismatch");
    SNF s = smith_normal_form(A);
    for (size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) > 1) out.torsion.push_back(s.D(i, i));
    out.free_rank = ambient_rank - s.rank;
    return out;
}

AbPres AbPres::cyclic_sum(const std::vector<Int>& ds)
{
    AbPres p(ds.size());
    size_t k = 0;
    for (const Int& d : ds)
        if (d != 0) ++k;
    p.rels = Mat(ds.size(), k);
    size_t j = 0;
    for (size_t i = 0; i < ds.size(); ++i)
        if (ds[i] != 0) p.rels(i, j++) = ds[i];
    return p;
}

bool AbPres::is_zero_elem(const Mat& v) const
{
    Mat x;
    return solve_integer(rels, v, x);
}

bool AbPres::elems_equal(const Mat& v, const Mat& w) const
{
    return is_zero_elem(v - w);
}

Int subgroup_order(const AbPres& G, const Mat& S)
{
    // |<S>| = |G| / |G / <S>|
    Int total = G.order();
    if (total == 0) throw std::invalid_argument("subgroup_order: infinite ambient group");
    Int quo = coker_shape(G.rels.hcat(S), G.gens).order();
    return total / quo;
}

} // namespace reks
