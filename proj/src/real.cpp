#include "reks/real.hpp"

#include <map>
#include <stdexcept>

namespace reks {

RealSSet::RealSSet(SSetPtr underlying, std::vector<std::vector<int>> w_nd)
    : x_(std::move(underlying)), w_(std::move(w_nd))
{
    validate();
}

Simplex RealSSet::w(const Simplex& s) const
{
    if (s.word.empty()) {
        Simplex o = s;
        o.nd = w_[s.dim][s.nd];
        return o;
    }
    int j = s.word[0];
    Simplex rest{s.dim - 1, std::vector<int>(s.word.begin() + 1, s.word.end()), s.nd};
    return x_->degenerate(w(rest), s.dim - 1 - j);
}

void RealSSet::validate() const
{
    if ((int)w_.size() != x_->trunc() + 1)
        throw std::invalid_argument("RealSSet: involution table size mismatch");
    for (int n = 0; n <= x_->trunc(); ++n) {
        if ((int)w_[n].size() != x_->n_nd(n))
            throw std::invalid_argument("RealSSet: involution row mismatch");
        for (int id = 0; id < x_->n_nd(n); ++id)
            if (w_[n][w_[n][id]] != id)
                throw std::runtime_error("RealSSet: w^2 != id");
    }
    if (!w_[0].empty() && w_[0][0] != 0)
        throw std::runtime_error("RealSSet: basepoint not fixed by w");
    // w d_i = d_{p-i} w on nondegenerate simplices
    for (int n = 1; n <= x_->trunc(); ++n)
        for (int id = 0; id < x_->n_nd(n); ++id) {
            Simplex s{n, {}, id};
            for (int i = 0; i <= n; ++i)
                if (!(w(x_->face(s, i)) == x_->face(w(s), n - i)))
                    throw std::runtime_error("RealSSet: w d_i != d_{p-i} w");
        }
}

RealSSet real_circle(int trunc)
{
    SSetPtr s1 = circle_sset(lattice_of(FiniteGroup::trivial()), trunc);
    std::vector<std::vector<int>> w(trunc + 1);
    w[0] = {0};
    if (trunc >= 1) w[1] = {0};
    return RealSSet(s1, std::move(w));
}

RealSSet real_smash(const RealSSet& a, const RealSSet& b)
{
    SmashResult sm = smash_sset({a.sset(), b.sset()});
    int trunc = sm.smash->trunc();
    // smash nd id -> product nd id
    std::vector<std::vector<int>> back(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        back[n].assign(sm.smash->n_nd(n), -1);
        for (int pid = 0; pid < sm.product.prod->n_nd(n); ++pid) {
            const Simplex& im = sm.from_product.img[n][pid];
            if (im.word.empty()) back[n][im.nd] = pid;
        }
    }
    std::vector<std::vector<int>> w(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        w[n].resize(sm.smash->n_nd(n));
        for (int y = 0; y < sm.smash->n_nd(n); ++y) {
            const std::vector<Simplex>& t = sm.product.parts[n][back[n][y]];
            std::vector<Simplex> wt = {a.w(t[0]), b.w(t[1])};
            int wpid = sm.product.nd_of_tuple(n, wt);
            const Simplex& im = sm.from_product.img[n][wpid];
            if (!im.word.empty())
                throw std::runtime_error("real_smash: involution left the smash");
            w[n][y] = im.nd;
        }
    }
    return RealSSet(sm.smash, std::move(w));
}

SubdivResult edgewise_subdivide(const RealSSet& z, int trunc)
{
    const SSet& Z = *z.sset();
    if (2 * trunc + 1 > Z.trunc())
        throw std::invalid_argument("edgewise_subdivide: source truncated too low");

    // levels of the subdivision: all simplices of Z in odd dimensions
    std::vector<std::vector<Simplex>> L(trunc + 1);
    std::vector<std::map<Simplex, int>> idx(trunc + 1);
    for (int p = 0; p <= trunc; ++p) {
        L[p] = Z.level(2 * p + 1);
        for (int k = 0; k < (int)L[p].size(); ++k) idx[p][L[p][k]] = k;
    }

    auto sd_face = [&](int p, const Simplex& s, int i) -> Simplex {
        return Z.face(Z.face(s, 2 * p + 1 - i), i);
    };
    auto sd_degen = [&](int p, const Simplex& s, int i) -> Simplex {
        return Z.degenerate(Z.degenerate(s, 2 * p + 1 - i), i);
    };

    // identify nondegenerate sd-simplices and their normal forms
    std::vector<std::vector<Simplex>> normal(trunc + 1);   // per (p, level index)
    std::vector<int> n_nd(trunc + 1, 0);
    std::vector<std::vector<int>> nd_back(trunc + 1);      // nd id -> level index
    for (int p = 0; p <= trunc; ++p) {
        normal[p].resize(L[p].size());
        // basepoint first in dimension 0
        std::vector<int> order;
        if (p == 0) {
            int base = idx[0].at(Z.base_simplex(1));
            order.push_back(base);
            for (int k = 0; k < (int)L[0].size(); ++k)
                if (k != base) order.push_back(k);
        } else {
            for (int k = 0; k < (int)L[p].size(); ++k) order.push_back(k);
        }
        for (int k : order) {
            const Simplex& s = L[p][k];
            bool degen = false;
            if (p >= 1) {
                for (int i = 0; i < p && !degen; ++i) {
                    Simplex down = sd_face(p, s, i);
                    if (sd_degen(p - 1, down, i) == s) {
                        int down_idx = idx[p - 1].at(down);
                        Simplex nf = normal[p - 1][down_idx];
                        // prepend s_i in sd-coordinates
                        Simplex out = nf;
                        out.dim = p;
                        int val = i;
                        size_t pos = 0;
                        while (pos < out.word.size() && val <= out.word[pos]) {
                            out.word[pos] += 1;
                            ++pos;
                        }
                        out.word.insert(out.word.begin() + pos, val);
                        normal[p][k] = out;
                        degen = true;
                    }
                }
            }
            if (!degen) {
                normal[p][k] = Simplex{p, {}, n_nd[p]};
                ++n_nd[p];
                nd_back[p].push_back(k);
            }
        }
    }

    LatticePtr lat = lattice_of(FiniteGroup::cyclic(2));
    std::vector<std::vector<std::vector<Simplex>>> faces(trunc + 1);
    for (int p = 1; p <= trunc; ++p) {
        faces[p].resize(n_nd[p]);
        for (int id = 0; id < n_nd[p]; ++id) {
            const Simplex& s = L[p][nd_back[p][id]];
            faces[p][id].resize(p + 1);
            for (int i = 0; i <= p; ++i) {
                Simplex f = sd_face(p, s, i);
                faces[p][id][i] = normal[p - 1][idx[p - 1].at(f)];
            }
        }
    }
    std::vector<std::vector<std::vector<int>>> action(2);
    for (int g = 0; g < 2; ++g) {
        action[g].resize(trunc + 1);
        for (int p = 0; p <= trunc; ++p) {
            action[g][p].resize(n_nd[p]);
            for (int id = 0; id < n_nd[p]; ++id) {
                if (g == 0) {
                    action[g][p][id] = id;
                    continue;
                }
                Simplex t = z.w(L[p][nd_back[p][id]]);
                Simplex nf = normal[p][idx[p].at(t)];
                if (!nf.word.empty())
                    throw std::runtime_error("edgewise_subdivide: involution not simplicial");
                action[g][p][id] = nf.nd;
            }
        }
    }

    SubdivResult out;
    std::vector<int> counts(n_nd.begin(), n_nd.end());
    auto sd = std::make_shared<SSet>(lat, trunc, counts, faces, action,
                                     "sd(" + z.sset()->name() + ")");
    sd->validate();
    out.sd = sd;
    out.from_z.resize(trunc + 1);
    for (int p = 0; p <= trunc; ++p)
        for (int id = 0; id < n_nd[p]; ++id) out.from_z[p].push_back(nd_back[p][id]);
    return out;
}

} // namespace reks
