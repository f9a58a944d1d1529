#include "reks/retractive.hpp"

#include <stdexcept>

#include "reks/conn.hpp"

namespace reks {

void Retractive::validate() const
{
    p.validate();
    s.validate();
    if (!compose(p, s).is_identity()) throw std::runtime_error("Retractive: p∘s != id");
    if (!s.levelwise_injective_nd()) throw std::runtime_error("Retractive: section not injective");
}

Retractive over_point(SSetPtr x)
{
    Retractive r;
    r.total = x;
    r.base = point_sset(x->lattice_ptr(), x->trunc());
    r.p = constant_map(x, r.base);
    r.s = constant_map(r.base, x);
    r.validate();
    return r;
}

Retractive base_over_itself(SSetPtr b)
{
    Retractive r;
    r.total = b;
    r.base = b;
    r.p = identity_map(b);
    r.s = identity_map(b);
    return r;
}

SSetPtr gset_to_sset(const FiniteGSet& j, int trunc)
{
    // cells: basepoint (id 0) followed by the points of j
    LatticePtr lat = j.lattice_ptr();
    const FiniteGroup& G = lat->group();
    std::vector<int> n_nd(trunc + 1, 0);
    n_nd[0] = 1 + j.size();
    std::vector<std::vector<std::vector<Simplex>>> faces(trunc + 1);
    std::vector<std::vector<std::vector<int>>> action(G.order());
    for (int g = 0; g < G.order(); ++g) {
        action[g].resize(trunc + 1);
        action[g][0].resize(n_nd[0]);
        action[g][0][0] = 0;
        for (int x = 0; x < j.size(); ++x) action[g][0][1 + x] = 1 + j.act(g, x);
        for (int n = 1; n <= trunc; ++n) action[g][n] = {};
    }
    auto out = std::make_shared<SSet>(lat, trunc, n_nd, faces, action, "J+");
    out->validate();
    return out;
}

Retractive times_base(SSetPtr k, SSetPtr b)
{
    ProductResult pr = product_sset({k, b});
    Retractive r;
    r.total = pr.prod;
    r.base = b;
    r.p = pr.projections[1];
    r.s.src = b;
    r.s.dst = pr.prod;
    r.s.img.resize(pr.prod->trunc() + 1);
    for (int n = 0; n <= pr.prod->trunc(); ++n)
        for (int id = 0; id < b->n_nd(n); ++id) {
            std::vector<Simplex> t = {k->base_simplex(n), Simplex{n, {}, id}};
            r.s.img[n].push_back(Simplex{n, {}, pr.nd_of_tuple(n, t)});
        }
    r.validate();
    return r;
}

Retractive smash_over_base(const Retractive& x, const Retractive& y)
{
    if (x.base != y.base) throw std::invalid_argument("smash_over_base: mismatched bases");
    SSetPtr B = x.base;
    int trunc = std::min(x.total->trunc(), y.total->trunc());

    // fiber product X ×_B Y inside X × Y
    ProductResult pr = product_sset({x.total, y.total});
    std::vector<std::vector<bool>> keep(pr.prod->trunc() + 1);
    for (int n = 0; n <= pr.prod->trunc(); ++n) {
        keep[n].assign(pr.prod->n_nd(n), false);
        for (int id = 0; id < pr.prod->n_nd(n); ++id) {
            const auto& t = pr.parts[n][id];
            keep[n][id] = (x.p.apply(t[0]) == y.p.apply(t[1]));
        }
    }
    SubResult fib = subcomplex_sset(pr.prod, keep, "fibprod");
    // fiber-product nd id -> pair of factor simplices
    std::vector<std::vector<std::vector<Simplex>>> fparts(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
        for (int id = 0; id < fib.sub->n_nd(n); ++id)
            fparts[n].push_back(pr.parts[n][fib.incl.img[n][id].nd]);
    std::vector<std::map<std::vector<Simplex>, int>> fidx(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
        for (int id = 0; id < fib.sub->n_nd(n); ++id) fidx[n][fparts[n][id]] = id;

    auto pair_to_fib = [&](Simplex a, Simplex b) -> Simplex {
        // joint normalization mirrors the ambient product
        std::vector<Simplex> t = {a, b};
        std::vector<int> collected;
        for (;;) {
            std::set<int> wa(t[0].word.begin(), t[0].word.end());
            bool found = false;
            for (int i : t[1].word)
                if (wa.count(i)) {
                    t[0] = x.total->face(t[0], i);
                    t[1] = y.total->face(t[1], i);
                    collected.push_back(i);
                    found = true;
                    break;
                }
            if (!found) break;
        }
        auto it = fidx[t[0].dim].find(t);
        if (it == fidx[t[0].dim].end())
            throw std::runtime_error("smash_over_base: pair not in fiber product");
        Simplex out{t[0].dim, {}, it->second};
        for (size_t k = collected.size(); k-- > 0;) out = fib.sub->degenerate(out, collected[k]);
        return out;
    };

    // wedge X ∨_B Y = pushout of s_X (injective) and s_Y
    PushoutResult w = pushout_sset(x.s, y.s);

    // ι : X ∨_B Y -> X ×_B Y
    SMap iota;
    iota.src = w.po;
    iota.dst = fib.sub;
    iota.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) iota.img[n].resize(w.po->n_nd(n));
    for (int n = 0; n <= trunc; ++n) {
        for (int id = 0; id < x.total->n_nd(n); ++id) {
            const Simplex& in_w = w.from_x.img[n][id];
            if (!in_w.word.empty()) continue;  // lands degenerately; covered by the Y part
            Simplex a{n, {}, id};
            iota.img[n][in_w.nd] = pair_to_fib(a, y.s.apply(x.p.apply(a)));
        }
        for (int id = 0; id < y.total->n_nd(n); ++id) {
            const Simplex& in_w = w.from_y.img[n][id];
            if (!in_w.word.empty()) continue;
            Simplex bsim{n, {}, id};
            iota.img[n][in_w.nd] = pair_to_fib(x.s.apply(y.p.apply(bsim)), bsim);
        }
    }
    iota.validate();
    if (!iota.levelwise_injective_nd())
        throw std::runtime_error("smash_over_base: wedge does not embed in the fiber product");

    // π : X ∨_B Y -> B
    SMap pi;
    pi.src = w.po;
    pi.dst = B;
    pi.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) pi.img[n].resize(w.po->n_nd(n));
    for (int n = 0; n <= trunc; ++n) {
        for (int id = 0; id < x.total->n_nd(n); ++id) {
            const Simplex& in_w = w.from_x.img[n][id];
            if (in_w.word.empty()) pi.img[n][in_w.nd] = x.p.apply(Simplex{n, {}, id});
        }
        for (int id = 0; id < y.total->n_nd(n); ++id) {
            const Simplex& in_w = w.from_y.img[n][id];
            if (in_w.word.empty()) pi.img[n][in_w.nd] = y.p.apply(Simplex{n, {}, id});
        }
    }
    pi.validate();

    PushoutResult sm = pushout_sset(iota, pi);

    Retractive r;
    r.total = sm.po;
    r.base = B;
    r.s = sm.from_y;
    // p : smash -> B; on the fiber-product part both projections agree
    r.p.src = sm.po;
    r.p.dst = B;
    r.p.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) r.p.img[n].resize(sm.po->n_nd(n));
    for (int n = 0; n <= trunc; ++n) {
        for (int id = 0; id < B->n_nd(n); ++id) {
            const Simplex& in_sm = sm.from_y.img[n][id];
            if (in_sm.word.empty()) r.p.img[n][in_sm.nd] = Simplex{n, {}, id};
        }
        for (int id = 0; id < fib.sub->n_nd(n); ++id) {
            const Simplex& in_sm = sm.from_x.img[n][id];
            if (in_sm.word.empty()) r.p.img[n][in_sm.nd] = x.p.apply(fparts[n][id][0]);
        }
    }
    r.p.validate();
    r.validate();
    return r;
}

Retractive suspension_over_base(const Retractive& x, const FiniteGSet& I)
{
    SSetPtr sphere = rep_sphere(I, x.total->trunc());
    return smash_over_base(x, times_base(sphere, x.base));
}

Retractive cylinder_over_base(const Retractive& x)
{
    SSetPtr I = interval_sset(x.total->lattice_ptr(), x.total->trunc());
    return smash_over_base(x, times_base(I, x.base));
}

Retractive indexed_wedge_over_base(const Retractive& x, const FiniteGSet& J)
{
    const FiniteGroup& G = x.total->group();
    size_t k = J.size();
    std::vector<std::vector<int>> perm(G.order(), std::vector<int>(k));
    for (int g = 0; g < G.order(); ++g)
        for (size_t j = 0; j < k; ++j) perm[g][j] = J.act(g, (int)j);

    WedgeResult wb = wedge_sset(std::vector<SSetPtr>(k, x.base), perm);
    WedgeResult wx = wedge_sset(std::vector<SSetPtr>(k, x.total), perm);

    // ∨_J s : ∨_J B -> ∨_J X
    SMap vs;
    vs.src = wb.wedge;
    vs.dst = wx.wedge;
    vs.img.resize(wb.wedge->trunc() + 1);
    for (int n = 0; n <= wb.wedge->trunc(); ++n) vs.img[n].resize(wb.wedge->n_nd(n));
    // fold : ∨_J B -> B
    SMap fold;
    fold.src = wb.wedge;
    fold.dst = x.base;
    fold.img.resize(wb.wedge->trunc() + 1);
    for (int n = 0; n <= wb.wedge->trunc(); ++n) fold.img[n].resize(wb.wedge->n_nd(n));
    for (size_t j = 0; j < k; ++j)
        for (int n = 0; n <= wb.wedge->trunc(); ++n)
            for (int id = 0; id < x.base->n_nd(n); ++id) {
                const Simplex& in_w = wb.inclusions[j].img[n][id];
                vs.img[n][in_w.nd] = wx.inclusions[j].apply(x.s.apply(Simplex{n, {}, id}));
                fold.img[n][in_w.nd] = Simplex{n, {}, id};
            }
    vs.validate();
    fold.validate();

    PushoutResult po = pushout_sset(vs, fold);
    Retractive r;
    r.total = po.po;
    r.base = x.base;
    r.s = po.from_y;
    r.p.src = po.po;
    r.p.dst = x.base;
    r.p.img.resize(po.po->trunc() + 1);
    for (int n = 0; n <= po.po->trunc(); ++n) r.p.img[n].resize(po.po->n_nd(n));
    for (int n = 0; n <= po.po->trunc(); ++n) {
        for (int id = 0; id < x.base->n_nd(n); ++id) {
            const Simplex& t = po.from_y.img[n][id];
            if (t.word.empty()) r.p.img[n][t.nd] = Simplex{n, {}, id};
        }
        for (size_t j = 0; j < k; ++j)
            for (int id = 0; id < x.total->n_nd(n); ++id) {
                Simplex in_wx = wx.inclusions[j].img[n][id];
                Simplex t = po.from_x.apply(in_wx);
                if (t.word.empty() && in_wx.word.empty())
                    r.p.img[n][t.nd] = x.p.apply(Simplex{n, {}, id});
            }
    }
    r.p.validate();
    r.validate();
    return r;
}

ConnFn retractive_conn(const Retractive& x)
{
    return equivariant_conn(x.p);
}

} // namespace reks
