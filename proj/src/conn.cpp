#include "reks/conn.hpp"

namespace reks {

namespace {

// reduced-chain generator index of a nondegenerate simplex: dim 0 skips the
// basepoint
inline int gen_index(int dim, int nd) { return dim == 0 ? nd - 1 : nd; }

inline int gen_count(const SSet& x, int dim)
{
    int c = x.n_nd(dim);
    return dim == 0 ? c - 1 : c;
}

} // namespace

ChainComplex reduced_chains(const SSet& x)
{
    ChainComplex C;
    int D = x.trunc();
    C.ranks.resize(D + 1);
    C.boundary.resize(D + 1);
    for (int n = 0; n <= D; ++n) C.ranks[n] = gen_count(x, n);
    C.boundary[0] = Mat(0, C.ranks[0]);
    for (int n = 1; n <= D; ++n) {
        Mat d(C.ranks[n - 1], C.ranks[n]);
        for (int id = 0; id < x.n_nd(n); ++id) {
            for (int i = 0; i <= n; ++i) {
                Simplex f = x.face(Simplex{n, {}, id}, i);
                if (f.degenerate()) continue;
                if (f.dim == 0 && f.nd == 0) continue;  // basepoint killed
                int row = gen_index(f.dim, f.nd);
                d(row, gen_index(n, id)) += (i % 2 == 0) ? 1 : -1;
            }
        }
        C.boundary[n] = d;
    }
    C.validate();
    return C;
}

std::vector<Mat> chain_map(const SMap& f)
{
    int D = std::min(f.src->trunc(), f.dst->trunc());
    std::vector<Mat> out(D + 1);
    for (int n = 0; n <= D; ++n) {
        Mat m(gen_count(*f.dst, n), gen_count(*f.src, n));
        for (int id = 0; id < f.src->n_nd(n); ++id) {
            if (n == 0 && id == 0) continue;
            const Simplex& s = f.img[n][id];
            if (s.degenerate()) continue;
            if (s.dim == 0 && s.nd == 0) continue;
            m(gen_index(n, s.nd), gen_index(n, id)) = 1;
        }
        out[n] = m;
    }
    return out;
}

ChainComplex mapping_cone(const SMap& f)
{
    ChainComplex A = reduced_chains(*f.src);
    ChainComplex B = reduced_chains(*f.dst);
    std::vector<Mat> fm = chain_map(f);
    int D = std::min(f.src->trunc(), f.dst->trunc());

    ChainComplex C;
    C.ranks.resize(D + 1);
    C.boundary.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        C.ranks[n] = (n >= 1 ? A.rank(n - 1) : 0) + B.rank(n);
    C.boundary[0] = Mat(0, C.ranks[0]);
    for (int n = 1; n <= D; ++n) {
        size_t ra = A.rank(n - 1), rb = B.rank(n);
        size_t ra_lo = (n >= 2) ? A.rank(n - 2) : 0, rb_lo = B.rank(n - 1);
        Mat d(ra_lo + rb_lo, ra + rb);
        // ∂(a, b) = (−∂a, ∂b − f(a))
        if (n >= 2) {
            Mat da = A.d(n - 1);
            for (size_t i = 0; i < ra_lo; ++i)
                for (size_t j = 0; j < ra; ++j) d(i, j) = -da(i, j);
        }
        Mat db = B.d(n);
        for (size_t i = 0; i < rb_lo; ++i)
            for (size_t j = 0; j < rb; ++j) d(ra_lo + i, ra + j) = db(i, j);
        const Mat& fmat = fm[n - 1];
        for (size_t i = 0; i < rb_lo; ++i)
            for (size_t j = 0; j < ra; ++j) d(ra_lo + i, j) = -fmat(i, j);
        C.boundary[n] = d;
    }
    C.validate();
    return C;
}

ExtInt conn_map(const SMap& f)
{
    ChainComplex cone = mapping_cone(f);
    size_t window = cone.top() >= 1 ? cone.top() - 1 : 0;
    HomologyReport h = homology(as_presented(cone), window);
    int v = vanishing_range(h);
    if (v > (int)window) return ExtInt::infinity();
    return ExtInt(v);
}

SMap restrict_to_fixed(const SMap& f, size_t sub, const FixedResult& fs, const FixedResult& fd)
{
    // reindex: fixed nd id -> ambient id through the inclusions
    SMap out;
    out.src = fs.fixed;
    out.dst = fd.fixed;
    int D = fs.fixed->trunc();
    // ambient nd -> fixed nd in the target
    std::vector<std::vector<int>> back(D + 1);
    for (int n = 0; n <= D; ++n) {
        back[n].assign(f.dst->n_nd(n), -1);
        for (int id = 0; id < fd.fixed->n_nd(n); ++id) back[n][fd.incl.img[n][id].nd] = id;
    }
    out.img.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int id = 0; id < fs.fixed->n_nd(n); ++id) {
            Simplex ambient = f.apply(fs.incl.img[n][id]);
            int core = ambient.dim - (int)ambient.word.size();
            Simplex t = ambient;
            t.nd = back[core][ambient.nd];
            if (t.nd < 0) throw std::runtime_error("restrict_to_fixed: image not fixed");
            out.img[n].push_back(t);
        }
    out.validate(false);
    (void)sub;
    return out;
}

ConnFn equivariant_conn(const SMap& f)
{
    LatticePtr lat = f.src->lattice_ptr();
    ConnFn out(lat, ExtInt(0));
    for (size_t c = 0; c < lat->class_count(); ++c) {
        size_t H = lat->class_rep(c);
        FixedResult fs = fixed_points(f.src, H);
        FixedResult fd = fixed_points(f.dst, H);
        out.set_class(c, conn_map(restrict_to_fixed(f, H, fs, fd)));
    }
    return out;
}

HomologyReport reduced_homology(const SSet& x)
{
    ChainComplex C = reduced_chains(x);
    size_t window = C.top() >= 1 ? C.top() - 1 : 0;
    return homology(as_presented(C), window);
}

ConnFn space_conn(SSetPtr x)
{
    LatticePtr lat = x->lattice_ptr();
    ConnFn out(lat, ExtInt(0));
    for (size_t c = 0; c < lat->class_count(); ++c) {
        size_t H = lat->class_rep(c);
        FixedResult fs = fixed_points(x, H);
        HomologyReport h = reduced_homology(*fs.fixed);
        int v = vanishing_range(h);
        out.set_class(c, v > (int)h.window ? ExtInt::infinity() : ExtInt(v));
    }
    return out;
}

} // namespace reks
