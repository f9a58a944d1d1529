#include "reks/coeff.hpp"

#include <map>
#include <stdexcept>

#include "reks/conn.hpp"

namespace reks {

void CoeffSystem::validate() const
{
    const SSet& S = *s.sset();
    if (S.n_nd(0) != 1 || (S.trunc() >= 1 && S.n_nd(1) != 0))
        throw std::invalid_argument("CoeffSystem: S must be 1-reduced");
    value.validate();
    if (value.lat->group().order() != 2)
        throw std::invalid_argument("CoeffSystem: coefficients must carry a Z/2-structure");
}

BruteResult normalize_brute(const BruteLevels& lv)
{
    int D = lv.trunc;
    const FiniteGroup& G = lv.lat->group();
    BruteResult out;
    out.normal.resize(D + 1);
    std::vector<int> n_nd(D + 1, 0);
    std::vector<std::vector<size_t>> nd_back(D + 1);

    for (int p = 0; p <= D; ++p) {
        out.normal[p].assign(lv.size[p], Simplex{});
        std::vector<size_t> order;
        if (p == 0) {
            order.push_back(lv.base[0]);
            for (size_t e = 0; e < lv.size[0]; ++e)
                if (e != lv.base[0]) order.push_back(e);
        } else {
            for (size_t e = 0; e < lv.size[p]; ++e) order.push_back(e);
        }
        for (size_t e : order) {
            bool degen = false;
            for (int i = 0; i < p && !degen; ++i) {
                size_t down = lv.face(p, i, e);
                if (lv.degen(p - 1, i, down) == e) {
                    Simplex nf = out.normal[p - 1][down];
                    nf.dim = p;
                    int val = i;
                    size_t pos = 0;
                    while (pos < nf.word.size() && val <= nf.word[pos]) {
                        nf.word[pos] += 1;
                        ++pos;
                    }
                    nf.word.insert(nf.word.begin() + pos, val);
                    out.normal[p][e] = nf;
                    degen = true;
                }
            }
            if (!degen) {
                out.normal[p][e] = Simplex{p, {}, n_nd[p]};
                ++n_nd[p];
                nd_back[p].push_back(e);
            }
        }
    }

    std::vector<std::vector<std::vector<Simplex>>> faces(D + 1);
    for (int p = 1; p <= D; ++p) {
        faces[p].resize(n_nd[p]);
        for (int id = 0; id < n_nd[p]; ++id) {
            faces[p][id].resize(p + 1);
            for (int i = 0; i <= p; ++i)
                faces[p][id][i] = out.normal[p - 1][lv.face(p, i, nd_back[p][id])];
        }
    }
    std::vector<std::vector<std::vector<int>>> action(G.order());
    for (int g = 0; g < G.order(); ++g) {
        action[g].resize(D + 1);
        for (int p = 0; p <= D; ++p) {
            action[g][p].resize(n_nd[p]);
            for (int id = 0; id < n_nd[p]; ++id) {
                Simplex nf = out.normal[p][lv.act(g, p, nd_back[p][id])];
                if (!nf.word.empty())
                    throw std::runtime_error("normalize_brute: action not simplicial");
                action[g][p][id] = nf.nd;
            }
        }
    }
    auto ss = std::make_shared<SSet>(lv.lat, D, n_nd, faces, action, "brute");
    ss->validate();
    out.sset = ss;
    return out;
}

namespace {

// finite abelian group elements as mixed-radix integers over the invariant
// factors; all ds must be finite here
struct GroupCodec {
    std::vector<long long> ds;
    size_t order = 1;
    explicit GroupCodec(const GAbelianGroup& m)
    {
        for (const Int& d : m.ds) {
            if (d == 0) throw std::invalid_argument("GroupCodec: infinite coefficients");
            ds.push_back(d.convert_to<long long>());
            order *= (size_t)ds.back();
        }
    }
    std::vector<long long> dec(size_t e) const
    {
        std::vector<long long> v(ds.size());
        for (size_t i = 0; i < ds.size(); ++i) {
            v[i] = (long long)(e % ds[i]);
            e /= ds[i];
        }
        return v;
    }
    size_t enc(const std::vector<long long>& v) const
    {
        size_t e = 0;
        for (size_t i = ds.size(); i-- > 0;) e = e * ds[i] + (size_t)v[i];
        return e;
    }
    size_t add(size_t a, size_t b) const
    {
        auto va = dec(a), vb = dec(b);
        for (size_t i = 0; i < ds.size(); ++i) va[i] = (va[i] + vb[i]) % ds[i];
        return enc(va);
    }
    size_t apply(const Mat& m, size_t a) const
    {
        auto va = dec(a);
        std::vector<long long> out(ds.size(), 0);
        for (size_t i = 0; i < ds.size(); ++i) {
            Int acc = 0;
            for (size_t j = 0; j < ds.size(); ++j) acc += m(i, j) * va[j];
            Int r = acc % ds[i];
            if (r < 0) r += ds[i];
            out[i] = r.convert_to<long long>();
        }
        return enc(out);
    }
};

size_t ipow_sz(size_t b, size_t e)
{
    size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

TraceLevels kr_hr_levels(const CoeffSystem& sys, SSetPtr x, int trunc, size_t size_cap)
{
    sys.validate();
    if (!(x->group() == sys.value.lat->group()))
        throw std::invalid_argument("kr_hr_levels: group mismatch");
    LatticePtr lat = sys.value.lat;
    GroupCodec codec(sys.value);
    size_t q = codec.order;

    SubdivResult sd = edgewise_subdivide(sys.s, trunc);
    const SSet& S = *sd.sd;
    const SSet& X = *x;
    if (X.trunc() < trunc) throw std::invalid_argument("kr_hr_levels: X truncated too low");

    // per level: nonbase simplices of sd S and of X
    struct LevelIdx {
        std::vector<size_t> elems;          // level indices of nonbase simplices
        std::vector<int> pos;               // level index -> position or -1
    };
    auto index_nonbase = [](const SSet& z, int n) {
        LevelIdx li;
        const auto& lv = z.level(n);
        li.pos.assign(lv.size(), -1);
        for (size_t t = 0; t < lv.size(); ++t)
            if (!z.is_base_degenerate(lv[t])) {
                li.pos[t] = (int)li.elems.size();
                li.elems.push_back(t);
            }
        return li;
    };
    std::vector<LevelIdx> sidx(trunc + 1), xidx(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        sidx[n] = index_nonbase(S, n);
        xidx[n] = index_nonbase(X, n);
    }

    // --- the wedge space: elements base ∪ (s, nonzero v: X_n∖* -> M) ---
    BruteLevels W;
    W.lat = lat;
    W.trunc = trunc;
    W.size.resize(trunc + 1);
    W.base.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        size_t vs = ipow_sz(q, xidx[n].elems.size());
        W.size[n] = 1 + sidx[n].elems.size() * (vs - 1);
        W.base[n] = 0;
        if (W.size[n] > size_cap)
            throw std::invalid_argument("kr_hr_levels: wedge level exceeds the size cap");
    }
    // encoding: 0 = base; else 1 + spos * (q^{nx} - 1) + (v - 1)
    auto wenc = [&](int n, int spos, size_t v) -> size_t {
        if (v == 0) return 0;
        size_t vs = ipow_sz(q, xidx[n].elems.size());
        (void)vs;
        return 1 + (size_t)spos * (ipow_sz(q, xidx[n].elems.size()) - 1) + (v - 1);
    };
    auto wdec = [&](int n, size_t e) -> std::pair<int, size_t> {
        size_t block = ipow_sz(q, xidx[n].elems.size()) - 1;
        return {(int)((e - 1) / block), (e - 1) % block + 1};
    };
    // v-codes are functions X_n∖* -> M in base q over xidx positions
    auto v_dec = [&](int n, size_t v) {
        std::vector<size_t> out(xidx[n].elems.size());
        for (size_t t = 0; t < out.size(); ++t) {
            out[t] = v % q;
            v /= q;
        }
        return out;
    };
    auto v_enc = [&](int n, const std::vector<size_t>& f) {
        size_t v = 0;
        for (size_t t = f.size(); t-- > 0;) v = v * q + f[t];
        return v;
    };
    // transfer of a v-code along a simplex-level operator X_n -> X_m
    auto v_transfer = [&](int n, int m, const std::function<Simplex(const Simplex&)>& op,
                          size_t v) -> size_t {
        std::vector<size_t> in = v_dec(n, v), out(xidx[m].elems.size(), 0);
        for (size_t t = 0; t < in.size(); ++t) {
            if (in[t] == 0) continue;
            Simplex tgt = op(X.level(n)[xidx[n].elems[t]]);
            if (X.is_base_degenerate(tgt)) continue;
            int pp = xidx[m].pos[X.index_of(tgt)];
            out[pp] = codec.add(out[pp], in[t]);
        }
        return v_enc(m, out);
    };
    auto v_act = [&](int g, int n, size_t v) -> size_t {
        std::vector<size_t> in = v_dec(n, v), out(in.size(), 0);
        for (size_t t = 0; t < in.size(); ++t) {
            if (in[t] == 0) continue;
            Simplex tgt = X.act(g, X.level(n)[xidx[n].elems[t]]);
            int pp = xidx[n].pos[X.index_of(tgt)];
            out[pp] = codec.add(out[pp], codec.apply(sys.value.action[g], in[t]));
        }
        return v_enc(n, out);
    };
    auto s_op = [&](int n, int m, const std::function<Simplex(const Simplex&)>& op,
                    int spos) -> int {
        Simplex tgt = op(S.level(n)[sidx[n].elems[spos]]);
        if (S.is_base_degenerate(tgt)) return -1;
        return sidx[m].pos[S.index_of(tgt)];
    };

    W.face = [&, wenc, wdec](int n, int i, size_t e) -> size_t {
        if (e == 0) return 0;
        auto [spos, v] = wdec(n, e);
        int sp = s_op(n, n - 1, [&](const Simplex& s) { return S.face(s, i); }, spos);
        if (sp < 0) return 0;
        size_t nv = v_transfer(n, n - 1, [&](const Simplex& s) { return X.face(s, i); }, v);
        return wenc(n - 1, sp, nv);
    };
    W.degen = [&, wenc, wdec](int n, int i, size_t e) -> size_t {
        if (e == 0) return 0;
        auto [spos, v] = wdec(n, e);
        int sp = s_op(n, n + 1, [&](const Simplex& s) { return S.degenerate(s, i); }, spos);
        if (sp < 0) return 0;
        size_t nv = v_transfer(n, n + 1, [&](const Simplex& s) { return X.degenerate(s, i); }, v);
        return wenc(n + 1, sp, nv);
    };
    W.act = [&, wenc, wdec](int g, int n, size_t e) -> size_t {
        if (e == 0 || g == lat->group().id()) return e;
        auto [spos, v] = wdec(n, e);
        int sp = s_op(n, n, [&](const Simplex& s) { return S.act(g, s); }, spos);
        return wenc(n, sp, v_act(g, n, v));
    };

    BruteResult wres = normalize_brute(W);

    // --- the sum space: all functions (s, x) -> M ---
    BruteLevels Z;
    Z.lat = lat;
    Z.trunc = trunc;
    Z.size.resize(trunc + 1);
    Z.base.assign(trunc + 1, 0);
    std::vector<size_t> pairs(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        pairs[n] = sidx[n].elems.size() * xidx[n].elems.size();
        Z.size[n] = ipow_sz(q, pairs[n]);
        if (Z.size[n] > size_cap)
            throw std::invalid_argument("kr_hr_levels: sum level exceeds the size cap");
    }
    auto u_dec = [&](int n, size_t u) {
        std::vector<size_t> out(pairs[n]);
        for (size_t t = 0; t < out.size(); ++t) {
            out[t] = u % q;
            u /= q;
        }
        return out;
    };
    auto u_enc = [&](int n, const std::vector<size_t>& f) {
        size_t u = 0;
        for (size_t t = f.size(); t-- > 0;) u = u * q + f[t];
        return u;
    };
    auto pair_at = [&](int n, int spos, int xpos) { return (size_t)spos * xidx[n].elems.size() + xpos; };

    auto z_map = [&](int n, int m, const std::function<Simplex(const Simplex&)>& sop,
                     const std::function<Simplex(const Simplex&)>& xop, const Mat* twist,
                     size_t u) -> size_t {
        std::vector<size_t> in = u_dec(n, u), out(pairs[m], 0);
        for (size_t sp = 0; sp < sidx[n].elems.size(); ++sp) {
            Simplex stgt = sop(S.level(n)[sidx[n].elems[sp]]);
            if (S.is_base_degenerate(stgt)) continue;
            int sp2 = sidx[m].pos[S.index_of(stgt)];
            for (size_t xp = 0; xp < xidx[n].elems.size(); ++xp) {
                size_t val = in[pair_at(n, (int)sp, (int)xp)];
                if (val == 0) continue;
                Simplex xtgt = xop(X.level(n)[xidx[n].elems[xp]]);
                if (X.is_base_degenerate(xtgt)) continue;
                int xp2 = xidx[m].pos[X.index_of(xtgt)];
                size_t moved = twist ? codec.apply(*twist, val) : val;
                size_t at = pair_at(m, sp2, xp2);
                out[at] = codec.add(out[at], moved);
            }
        }
        return u_enc(m, out);
    };

    Z.face = [&, z_map](int n, int i, size_t u) {
        return z_map(
            n, n - 1, [&](const Simplex& s) { return S.face(s, i); },
            [&](const Simplex& s) { return X.face(s, i); }, nullptr, u);
    };
    Z.degen = [&, z_map](int n, int i, size_t u) {
        return z_map(
            n, n + 1, [&](const Simplex& s) { return S.degenerate(s, i); },
            [&](const Simplex& s) { return X.degenerate(s, i); }, nullptr, u);
    };
    Z.act = [&, z_map](int g, int n, size_t u) {
        if (g == lat->group().id()) return u;
        return z_map(
            n, n, [&](const Simplex& s) { return S.act(g, s); },
            [&](const Simplex& s) { return X.act(g, s); }, &sys.value.action[g], u);
    };

    BruteResult zres = normalize_brute(Z);

    TraceLevels out;
    out.kr = wres.sset;
    out.hr_space = zres.sset;

    // trace: (s, v) -> the function supported on the s-column
    out.trace.src = out.kr;
    out.trace.dst = out.hr_space;
    out.trace.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) out.trace.img[n].resize(out.kr->n_nd(n));
    for (int n = 0; n <= trunc; ++n) {
        // brute element of kr per nd id
        std::vector<size_t> back(out.kr->n_nd(n));
        for (size_t e = 0; e < W.size[n]; ++e) {
            const Simplex& nf = wres.normal[n][e];
            if (nf.word.empty()) back[nf.nd] = e;
        }
        for (int id = 0; id < out.kr->n_nd(n); ++id) {
            size_t e = back[id];
            size_t u = 0;
            if (e != 0) {
                auto [spos, v] = wdec(n, e);
                std::vector<size_t> vf = v_dec(n, v), uf(pairs[n], 0);
                for (size_t t = 0; t < vf.size(); ++t) uf[pair_at(n, spos, (int)t)] = vf[t];
                u = u_enc(n, uf);
            }
            out.trace.img[n][id] = zres.normal[n][u];
        }
    }
    out.trace.validate();
    if (!out.trace.levelwise_injective_nd())
        throw std::runtime_error("kr_hr_levels: trace map not levelwise injective");

    // Moore complex of the sum as a presented complex (unnormalized)
    {
        PresentedComplex pc;
        for (int n = 0; n <= trunc; ++n) {
            std::vector<Int> ds;
            for (size_t t = 0; t < pairs[n]; ++t)
                for (const Int& d : sys.value.ds) ds.push_back(d);
            pc.levels.push_back(AbPres::cyclic_sum(ds));
        }
        size_t mg = sys.value.gens();
        pc.diff.push_back(Mat(pc.levels[0].gens, 0));
        for (int n = 1; n <= trunc; ++n) {
            Mat d(pc.levels[n - 1].gens, pc.levels[n].gens);
            for (int i = 0; i <= n; ++i) {
                int sign = (i % 2 == 0) ? 1 : -1;
                for (size_t sp = 0; sp < sidx[n].elems.size(); ++sp) {
                    Simplex stgt = S.face(S.level(n)[sidx[n].elems[sp]], i);
                    if (S.is_base_degenerate(stgt)) continue;
                    int sp2 = sidx[n - 1].pos[S.index_of(stgt)];
                    for (size_t xp = 0; xp < xidx[n].elems.size(); ++xp) {
                        Simplex xtgt = X.face(X.level(n)[xidx[n].elems[xp]], i);
                        if (X.is_base_degenerate(xtgt)) continue;
                        int xp2 = xidx[n - 1].pos[X.index_of(xtgt)];
                        for (size_t t = 0; t < mg; ++t)
                            d(pair_at(n - 1, sp2, xp2) * mg + t, pair_at(n, (int)sp, (int)xp) * mg + t) +=
                                sign;
                    }
                }
            }
            pc.diff.push_back(d);
        }
        out.hr_moore = pc;
    }
    return out;
}

TraceConnReport verify_trace_conn(const CoeffSystem& sys, SSetPtr x, int trunc, size_t size_cap)
{
    LatticePtr lat = sys.value.lat;
    TraceConnReport rep(lat);
    TraceLevels lv = kr_hr_levels(sys, x, trunc, size_cap);
    rep.measured = equivariant_conn(lv.trace);
    ConnFn xc = space_conn(x);
    ExtInt c1 = xc.at_sub(lat->bottom());
    ExtInt c2 = xc.at_sub(lat->topsub());
    rep.bound = ConnFn::from_pair(lat, c1 + c1 + ExtInt(1),
                                  emin(c2 + c2, c1) + ExtInt(1));
    rep.ok = rep.bound.leq(rep.measured);
    return rep;
}

} // namespace reks
