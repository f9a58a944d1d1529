#include "reks/s21.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace reks {

S21Ctx skeleton_ctx(const ModCatSkeleton& sk)
{
    S21Ctx ctx;
    ctx.cat = sk.cat;
    ctx.zero_obj = 0;
    ModCatSkeleton s = sk;
    ctx.zero_mor = [s](int j, int k) { return s.zero_mor(j, k); };
    ctx.obj_size = [s](int j) {
        int n = 1;
        for (int t = 0; t < j; ++t) n *= s.ring.A.n;
        return n;
    };
    ctx.zero_elem = [](int) { return 0; };
    ctx.apply = [s](int j, int k, int f, int e) {
        // elements of rank j are A-column vectors encoded in base |A|
        const FiniteRing& A = s.ring.A;
        std::vector<int> v(j), out(k, A.zero);
        for (int t = 0; t < j; ++t) {
            v[t] = e % A.n;
            e /= A.n;
        }
        std::vector<int> F = s.mor_entries(j, k, f);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < j; ++c)
                out[r] = A.add[out[r]][A.mul[F[(size_t)c * k + r]][v[c]]];
        int idx = 0;
        for (size_t t = out.size(); t-- > 0;) idx = idx * A.n + out[t];
        return idx;
    };
    if (sk.duality.is_strict(*sk.cat)) {
        StrictDuality d;
        d.obj = sk.duality.obj;
        d.mor = sk.duality.mor;
        ctx.duality = d;
    }
    return ctx;
}

S21Ctx strictified_ctx(const Strictified& ds, const ModCatSkeleton& sk)
{
    S21Ctx ctx;
    ctx.cat = ds.dcat;
    ctx.zero_obj = ds.find_obj(0, 0, sk.cat->id_mor(0));
    if (ctx.zero_obj < 0) throw std::runtime_error("strictified_ctx: zero object missing");
    const Strictified* dsp = &ds;
    ModCatSkeleton s = sk;
    ctx.zero_mor = [dsp, s](int x, int y) {
        auto [cx, dx, px] = dsp->obj_parts[x];
        auto [cy, dy, py] = dsp->obj_parts[y];
        int m = dsp->find_mor(x, y, s.zero_mor(cx, cy), s.zero_mor(dy, dx));
        if (m < 0) throw std::runtime_error("strictified_ctx: zero morphism missing");
        return m;
    };
    S21Ctx base = skeleton_ctx(sk);
    auto base_size = base.obj_size;
    auto base_apply = base.apply;
    ctx.obj_size = [dsp, base_size](int x) { return base_size(dsp->obj_parts[x][0]); };
    ctx.zero_elem = [](int) { return 0; };
    ctx.apply = [dsp, base_apply](int x, int y, int f, int e) {
        return base_apply(dsp->obj_parts[x][0], dsp->obj_parts[y][0],
                          dsp->mor_parts[x][y][f][0], e);
    };
    ctx.duality = ds.duality;
    return ctx;
}

std::vector<Theta> injective_thetas(int p)
{
    std::vector<Theta> out;
    for (int a = 0; a <= p; ++a)
        for (int b = a + 1; b <= p; ++b)
            for (int c = b + 1; c <= p; ++c) out.push_back({a, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

bool theta_leq(const Theta& a, const Theta& b)
{
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

namespace {

int theta_index(const std::vector<Theta>& ts, const Theta& t)
{
    for (size_t i = 0; i < ts.size(); ++i)
        if (ts[i] == t) return (int)i;
    return -1;
}

bool injective(const Theta& t) { return t[0] < t[1] && t[1] < t[2]; }

} // namespace

int s21_value(const S21Ctx& ctx, const S21Obj& x, const Theta& t)
{
    if (!injective(t)) return ctx.zero_obj;
    std::vector<Theta> ts = injective_thetas(x.p);
    return x.vert[theta_index(ts, t)];
}

int s21_map(const S21Ctx& ctx, const S21Obj& x, const Theta& from, const Theta& to)
{
    if (!theta_leq(from, to)) throw std::invalid_argument("s21_map: not comparable");
    if (!injective(from) || !injective(to))
        return ctx.zero_mor(s21_value(ctx, x, from), s21_value(ctx, x, to));
    std::vector<Theta> ts = injective_thetas(x.p);
    return x.map[theta_index(ts, from)][theta_index(ts, to)];
}

namespace {

struct ExactCheck {
    const S21Ctx* ctx;

    bool four_term_exact(int v0, int v1, int v2, int v3, int f, int g, int h,
                         std::string* why) const
    {
        const S21Ctx& c = *ctx;
        // f injective
        std::set<int> imf;
        int z1 = c.zero_elem(v1);
        for (int e = 0; e < c.obj_size(v0); ++e) imf.insert(c.apply(v0, v1, f, e));
        if ((int)imf.size() != c.obj_size(v0)) {
            if (why) *why = "first map not injective";
            return false;
        }
        (void)z1;
        // ker g = im f (inclusion via g∘f = 0 elementwise, then cardinality)
        int z2 = c.zero_elem(v2);
        for (int e : imf)
            if (c.apply(v1, v2, g, e) != z2) {
                if (why) *why = "g∘f != 0";
                return false;
            }
        size_t kerg = 0;
        for (int e = 0; e < c.obj_size(v1); ++e)
            if (c.apply(v1, v2, g, e) == z2) ++kerg;
        if (kerg != imf.size()) {
            if (why) *why = "ker g != im f";
            return false;
        }
        // ker h = im g
        std::set<int> img;
        for (int e = 0; e < c.obj_size(v1); ++e) img.insert(c.apply(v1, v2, g, e));
        int z3 = c.zero_elem(v3);
        for (int e : img)
            if (c.apply(v2, v3, h, e) != z3) {
                if (why) *why = "h∘g != 0";
                return false;
            }
        size_t kerh = 0;
        for (int e = 0; e < c.obj_size(v2); ++e)
            if (c.apply(v2, v3, h, e) == z3) ++kerh;
        if (kerh != img.size()) {
            if (why) *why = "ker h != im g";
            return false;
        }
        // h surjective
        std::set<int> imh;
        for (int e = 0; e < c.obj_size(v2); ++e) imh.insert(c.apply(v2, v3, h, e));
        if ((int)imh.size() != c.obj_size(v3)) {
            if (why) *why = "last map not surjective";
            return false;
        }
        return true;
    }
};

std::vector<std::array<int, 4>> monotone_psis(int p)
{
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a <= p; ++a)
        for (int b = a; b <= p; ++b)
            for (int c = b; c <= p; ++c)
                for (int d = c; d <= p; ++d) out.push_back({a, b, c, d});
    return out;
}

} // namespace

bool s21_valid(const S21Ctx& ctx, const S21Obj& x, std::string* why)
{
    const FinCat& cat = *ctx.cat;
    std::vector<Theta> ts = injective_thetas(x.p);
    size_t n = ts.size();
    // identities and functoriality
    for (size_t i = 0; i < n; ++i)
        if (x.map[i][i] != cat.id_mor(x.vert[i])) {
            if (why) *why = "identity component wrong";
            return false;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (theta_leq(ts[i], ts[j])) {
                if (x.map[i][j] < 0) {
                    if (why) *why = "missing structure map";
                    return false;
                }
                for (size_t k = 0; k < n; ++k)
                    if (theta_leq(ts[j], ts[k]) &&
                        x.map[i][k] !=
                            cat.compose(x.vert[i], x.vert[j], x.vert[k], x.map[i][j], x.map[j][k])) {
                        if (why) *why = "functoriality fails";
                        return false;
                    }
            }
        }
    // exactness for every ψ: [3] -> [p]
    ExactCheck ec{&ctx};
    for (const auto& psi : monotone_psis(x.p)) {
        Theta d3 = {psi[0], psi[1], psi[2]}, d2 = {psi[0], psi[1], psi[3]},
              d1 = {psi[0], psi[2], psi[3]}, d0 = {psi[1], psi[2], psi[3]};
        int v0 = s21_value(ctx, x, d3), v1 = s21_value(ctx, x, d2), v2 = s21_value(ctx, x, d1),
            v3 = s21_value(ctx, x, d0);
        int f = s21_map(ctx, x, d3, d2), g = s21_map(ctx, x, d2, d1), h = s21_map(ctx, x, d1, d0);
        std::string local;
        if (!ec.four_term_exact(v0, v1, v2, v3, f, g, h, &local)) {
            if (why)
                *why = "exactness fails for psi (" + std::to_string(psi[0]) + "," +
                       std::to_string(psi[1]) + "," + std::to_string(psi[2]) + "," +
                       std::to_string(psi[3]) + "): " + local;
            return false;
        }
    }
    return true;
}

std::vector<S21Obj> s21_enumerate(const S21Ctx& ctx, int p)
{
    const FinCat& cat = *ctx.cat;
    std::vector<Theta> ts = injective_thetas(p);
    size_t n = ts.size();
    std::vector<S21Obj> out;
    if (n == 0) {
        S21Obj zero;
        zero.p = p;
        out.push_back(zero);
        return out;
    }

    // per ψ: indices of its injective faces (-1 = zero object) and the step
    // at which each prefix of the exactness check becomes decidable
    struct PsiData {
        std::array<int, 4> face;    // lex index of d3ψ, d2ψ, d1ψ, d0ψ or -1
        std::array<Theta, 4> ft;
        std::array<int, 3> enable;  // step enabling prefix checks 0,1,2
    };
    std::vector<PsiData> psis;
    for (const auto& psi : monotone_psis(p)) {
        PsiData pd;
        pd.ft = {Theta{psi[0], psi[1], psi[2]}, Theta{psi[0], psi[1], psi[3]},
                 Theta{psi[0], psi[2], psi[3]}, Theta{psi[1], psi[2], psi[3]}};
        for (int i = 0; i < 4; ++i)
            pd.face[i] = injective(pd.ft[i]) ? theta_index(ts, pd.ft[i]) : -1;
        auto need = [&](int upto) {
            int step = -1;
            for (int i = 0; i <= upto; ++i) step = std::max(step, pd.face[i]);
            return step;
        };
        pd.enable = {need(1), need(2), need(3)};
        psis.push_back(pd);
    }

    S21Obj cur;
    cur.p = p;
    cur.vert.assign(n, -1);
    cur.map.assign(n, std::vector<int>(n, -1));

    ExactCheck ec{&ctx};
    auto value = [&](int idx) { return idx < 0 ? ctx.zero_obj : cur.vert[idx]; };
    auto mp = [&](const PsiData& pd, int i, int j) {
        // map from face i to face j (faces decrease: d_{i}ψ <= d_{i-1}ψ)
        if (pd.face[i] < 0 || pd.face[j] < 0)
            return ctx.zero_mor(value(pd.face[i]), value(pd.face[j]));
        return cur.map[pd.face[i]][pd.face[j]];
    };

    auto prefix_ok = [&](size_t t) -> bool {
        for (const PsiData& pd : psis) {
            const S21Ctx& c = ctx;
            if (pd.enable[0] == (int)t) {
                // first map injective
                int v0 = value(pd.face[0]), v1 = value(pd.face[1]);
                int f = mp(pd, 0, 1);
                std::set<int> im;
                for (int e = 0; e < c.obj_size(v0); ++e) im.insert(c.apply(v0, v1, f, e));
                if ((int)im.size() != c.obj_size(v0)) return false;
            }
            if (pd.enable[1] == (int)t) {
                int v0 = value(pd.face[0]), v1 = value(pd.face[1]), v2 = value(pd.face[2]);
                int f = mp(pd, 0, 1), g = mp(pd, 1, 2);
                int z2 = c.zero_elem(v2);
                std::set<int> im;
                for (int e = 0; e < c.obj_size(v0); ++e) {
                    int y = c.apply(v0, v1, f, e);
                    im.insert(y);
                    if (c.apply(v1, v2, g, y) != z2) return false;
                }
                size_t ker = 0;
                for (int e = 0; e < c.obj_size(v1); ++e)
                    if (c.apply(v1, v2, g, e) == z2) ++ker;
                if (ker != im.size()) return false;
            }
            if (pd.enable[2] == (int)t) {
                int v0 = value(pd.face[0]), v1 = value(pd.face[1]), v2 = value(pd.face[2]),
                    v3 = value(pd.face[3]);
                if (!ec.four_term_exact(v0, v1, v2, v3, mp(pd, 0, 1), mp(pd, 1, 2), mp(pd, 2, 3),
                                        nullptr))
                    return false;
            }
        }
        return true;
    };

    std::function<void(size_t)> place = [&](size_t t) {
        if (t == n) {
            out.push_back(cur);
            return;
        }
        // predecessors in descending lex order: the largest constrains first
        std::vector<size_t> preds;
        for (size_t s = t; s-- > 0;)
            if (theta_leq(ts[s], ts[t])) preds.push_back(s);
        for (int obj = 0; obj < cat.n_obj(); ++obj) {
            cur.vert[t] = obj;
            cur.map[t][t] = cat.id_mor(obj);
            std::function<void(size_t)> pick = [&](size_t pi) {
                if (pi == preds.size()) {
                    if (prefix_ok(t)) place(t + 1);
                    return;
                }
                size_t s = preds[pi];
                for (int f = 0; f < cat.hom_size(cur.vert[s], obj); ++f) {
                    bool ok = true;
                    for (size_t qi = 0; qi < pi && ok; ++qi) {
                        size_t q = preds[qi];
                        if (theta_leq(ts[s], ts[q]))
                            ok = (cat.compose(cur.vert[s], cur.vert[q], obj, cur.map[s][q],
                                              cur.map[q][t]) == f);
                        else if (theta_leq(ts[q], ts[s]))
                            ok = (cat.compose(cur.vert[q], cur.vert[s], obj, cur.map[q][s], f) ==
                                  cur.map[q][t]);
                    }
                    if (!ok) continue;
                    cur.map[s][t] = f;
                    pick(pi + 1);
                    cur.map[s][t] = -1;
                }
            };
            pick(0);
        }
        cur.vert[t] = -1;
        for (size_t s = 0; s < n; ++s) cur.map[t][s] = cur.map[s][t] = -1;
    };
    place(0);
    return out;
}

std::vector<std::vector<int>> s21_hom(const S21Ctx& ctx, const S21Obj& x, const S21Obj& y)
{
    const FinCat& cat = *ctx.cat;
    std::vector<Theta> ts = injective_thetas(x.p);
    size_t n = ts.size();
    std::vector<std::vector<int>> out;
    std::vector<int> comp(n, -1);
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == n) {
            out.push_back(comp);
            return;
        }
        for (int f = 0; f < cat.hom_size(x.vert[t], y.vert[t]); ++f) {
            bool ok = true;
            for (size_t s = 0; s < t && ok; ++s) {
                if (theta_leq(ts[s], ts[t]))
                    ok = (cat.compose(x.vert[s], x.vert[t], y.vert[t], x.map[s][t], f) ==
                          cat.compose(x.vert[s], y.vert[s], y.vert[t], comp[s], y.map[s][t]));
                else if (theta_leq(ts[t], ts[s]))
                    ok = (cat.compose(x.vert[t], x.vert[s], y.vert[s], x.map[t][s], comp[s]) ==
                          cat.compose(x.vert[t], y.vert[t], y.vert[s], f, y.map[t][s]));
            }
            if (!ok) continue;
            comp[t] = f;
            rec(t + 1);
            comp[t] = -1;
        }
    };
    if (x.p != y.p) throw std::invalid_argument("s21_hom: level mismatch");
    rec(0);
    return out;
}

std::vector<std::vector<int>> s21_isos(const S21Ctx& ctx, const S21Obj& x, const S21Obj& y)
{
    std::vector<std::vector<int>> out;
    for (auto& f : s21_hom(ctx, x, y)) {
        bool iso = true;
        for (size_t t = 0; t < f.size() && iso; ++t)
            iso = ctx.cat->is_iso(x.vert[t], y.vert[t], f[t]);
        if (iso) out.push_back(f);
    }
    return out;
}

std::optional<std::vector<int>> s21_iso_exists(const S21Ctx& ctx, const S21Obj& x,
                                               const S21Obj& y)
{
    const FinCat& cat = *ctx.cat;
    std::vector<Theta> ts = injective_thetas(x.p);
    size_t n = ts.size();
    std::vector<std::vector<int>> candidates(n);
    for (size_t t = 0; t < n; ++t) {
        candidates[t] = cat.isos(x.vert[t], y.vert[t]);
        if (candidates[t].empty()) return std::nullopt;
    }
    std::vector<int> comp(n, -1);
    std::function<bool(size_t)> rec = [&](size_t t) -> bool {
        if (t == n) return true;
        for (int f : candidates[t]) {
            bool ok = true;
            for (size_t s = 0; s < t && ok; ++s) {
                if (theta_leq(ts[s], ts[t]))
                    ok = (cat.compose(x.vert[s], x.vert[t], y.vert[t], x.map[s][t], f) ==
                          cat.compose(x.vert[s], y.vert[s], y.vert[t], comp[s], y.map[s][t]));
                else if (theta_leq(ts[t], ts[s]))
                    ok = (cat.compose(x.vert[t], x.vert[s], y.vert[s], x.map[t][s], comp[s]) ==
                          cat.compose(x.vert[t], y.vert[t], y.vert[s], f, y.map[t][s]));
            }
            if (!ok) continue;
            comp[t] = f;
            if (rec(t + 1)) return true;
            comp[t] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return comp;
}

S21Obj s21_restrict(const S21Ctx& ctx, const S21Obj& x, const std::vector<int>& alpha)
{
    int q = (int)alpha.size() - 1;
    for (int t = 0; t + 1 <= q; ++t)
        if (alpha[t] > alpha[t + 1]) throw std::invalid_argument("s21_restrict: not monotone");
    std::vector<Theta> ts = injective_thetas(q);
    S21Obj out;
    out.p = q;
    out.vert.resize(ts.size());
    out.map.assign(ts.size(), std::vector<int>(ts.size(), -1));
    auto push = [&](const Theta& t) -> Theta {
        return {alpha[t[0]], alpha[t[1]], alpha[t[2]]};
    };
    for (size_t i = 0; i < ts.size(); ++i) out.vert[i] = s21_value(ctx, x, push(ts[i]));
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = 0; j < ts.size(); ++j)
            if (theta_leq(ts[i], ts[j])) out.map[i][j] = s21_map(ctx, x, push(ts[i]), push(ts[j]));
    return out;
}

S21Obj s21_duality(const S21Ctx& ctx, const S21Obj& x)
{
    if (!ctx.duality) throw std::invalid_argument("s21_duality: no duality on the context");
    const StrictDuality& d = *ctx.duality;
    std::vector<Theta> ts = injective_thetas(x.p);
    auto star = [&](const Theta& t) -> Theta {
        return {x.p - t[2], x.p - t[1], x.p - t[0]};
    };
    S21Obj out;
    out.p = x.p;
    out.vert.resize(ts.size());
    out.map.assign(ts.size(), std::vector<int>(ts.size(), -1));
    for (size_t i = 0; i < ts.size(); ++i) {
        int si = theta_index(ts, star(ts[i]));
        out.vert[i] = d.dobj(x.vert[si]);
    }
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = 0; j < ts.size(); ++j) {
            if (!theta_leq(ts[i], ts[j])) continue;
            int si = theta_index(ts, star(ts[i])), sj = theta_index(ts, star(ts[j]));
            // θ_i <= θ_j gives θ_j* <= θ_i*; D of that map
            out.map[i][j] = d.dmor(x.vert[sj], x.vert[si], x.map[sj][si]);
        }
    return out;
}

std::vector<Theta> surjections_p2(int p)
{
    // block lengths (i, j, l), all >= 1, i + j + l = p + 1
    std::vector<Theta> out;
    for (int i = 1; i <= p - 1; ++i)
        for (int j = 1; i + j <= p; ++j) out.push_back({i, j, p + 1 - i - j});
    return out;
}

bool retraction_of(int p, const Theta& rho, const Theta& theta)
{
    (void)p;
    int i = rho[0], j = rho[1];
    return theta[0] < i && i <= theta[1] && theta[1] < i + j && i + j <= theta[2];
}

S21Obj splitting_oracle_object(const ModCatSkeleton& sk, int p, const std::vector<int>& ranks)
{
    std::vector<Theta> ts = injective_thetas(p);
    std::vector<Theta> rhos = surjections_p2(p);
    S21Obj out;
    out.p = p;
    out.vert.resize(ts.size());
    out.map.assign(ts.size(), std::vector<int>(ts.size(), -1));
    // block layout per θ: constituents ρ in list order
    std::vector<std::vector<int>> blocks(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        int total = 0;
        for (size_t r = 0; r < rhos.size(); ++r)
            if (retraction_of(p, rhos[r], ts[i])) {
                blocks[i].push_back((int)r);
                total += ranks[r];
            }
        out.vert[i] = total;
    }
    const FiniteRing& A = sk.ring.A;
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = 0; j < ts.size(); ++j) {
            if (!theta_leq(ts[i], ts[j])) continue;
            int rows = out.vert[j], cols = out.vert[i];
            std::vector<int> entries((size_t)rows * cols, A.zero);
            // identity on shared constituents
            int coff = 0;
            for (int rb : blocks[i]) {
                int roff = 0;
                for (int sb : blocks[j]) {
                    if (sb == rb)
                        for (int t = 0; t < ranks[rb]; ++t)
                            entries[(size_t)(coff + t) * rows + (roff + t)] = A.one;
                    roff += ranks[sb];
                }
                coff += ranks[rb];
            }
            out.map[i][j] = sk.mor_index(cols, rows, entries);
        }
    return out;
}

std::vector<std::vector<int>> splitting_oracle_ranks(const ModCatSkeleton& sk, int p)
{
    std::vector<Theta> ts = injective_thetas(p);
    std::vector<Theta> rhos = surjections_p2(p);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(rhos.size(), 0);
    std::function<void(size_t)> rec = [&](size_t r) {
        if (r == rhos.size()) {
            for (const Theta& t : ts) {
                int total = 0;
                for (size_t q = 0; q < rhos.size(); ++q)
                    if (retraction_of(p, rhos[q], t)) total += cur[q];
                if (total > sk.rank_bound) return;
            }
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= sk.rank_bound; ++v) {
            cur[r] = v;
            rec(r + 1);
        }
        cur[r] = 0;
    };
    rec(0);
    return out;
}

std::vector<int> constituent_ranks(const S21Ctx& ctx, const ModCatSkeleton& sk, const S21Obj& x)
{
    std::vector<Theta> rhos = surjections_p2(x.p);
    std::vector<int> out;
    for (const Theta& rho : rhos) {
        int i = rho[0], j = rho[1];
        Theta from = {i - 1, i + j - 1, i + j}, to = {i, i + j - 1, i + j};
        int v0 = s21_value(ctx, x, from), v1 = s21_value(ctx, x, to);
        int f = s21_map(ctx, x, from, to);
        size_t ker = 0;
        int z = ctx.zero_elem(v1);
        for (int e = 0; e < ctx.obj_size(v0); ++e)
            if (ctx.apply(v0, v1, f, e) == z) ++ker;
        // rank via |A|^r
        int r = 0;
        size_t acc = 1;
        while (acc < ker) {
            acc *= sk.ring.A.n;
            ++r;
        }
        if (acc != ker) return {};
        out.push_back(r);
    }
    return out;
}

std::vector<std::vector<int>> extend_bimodule(const S21Ctx& ctx, const Bimodule& m,
                                              const S21Obj& x, const S21Obj& y)
{
    std::vector<Theta> ts = injective_thetas(x.p);
    size_t n = ts.size();
    std::vector<std::vector<int>> out;
    std::vector<int> fam(n, -1);
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == n) {
            out.push_back(fam);
            return;
        }
        for (int mm = 0; mm < m.size(x.vert[t], y.vert[t]); ++mm) {
            bool ok = true;
            for (size_t s = 0; s < t && ok; ++s) {
                if (theta_leq(ts[s], ts[t])) {
                    // X(ψ)^* m_θ = Y(ψ)_* m_ρ in M(X_ρ, Y_θ)
                    int lhs = m.pull(x.vert[t], y.vert[t], x.vert[s], x.map[s][t], mm);
                    int rhs = m.push(x.vert[s], y.vert[s], y.vert[t], y.map[s][t], fam[s]);
                    ok = (lhs == rhs);
                } else if (theta_leq(ts[t], ts[s])) {
                    int lhs = m.pull(x.vert[s], y.vert[s], x.vert[t], x.map[t][s], fam[s]);
                    int rhs = m.push(x.vert[t], y.vert[t], y.vert[s], y.map[t][s], mm);
                    ok = (lhs == rhs);
                }
            }
            if (!ok) continue;
            fam[t] = mm;
            rec(t + 1);
            fam[t] = -1;
        }
    };
    if (n == 0) {
        out.push_back({});
        return out;
    }
    rec(0);
    return out;
}

std::vector<int> extend_bimodule_J(const S21Ctx& ctx, const Bimodule& m,
                                   const BimoduleDuality& j, const S21Obj& x, const S21Obj& y,
                                   const std::vector<int>& fam)
{
    std::vector<Theta> ts = injective_thetas(x.p);
    auto star = [&](const Theta& t) -> Theta {
        return {x.p - t[2], x.p - t[1], x.p - t[0]};
    };
    std::vector<int> out(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        int si = theta_index(ts, star(ts[i]));
        out[i] = j.J(x.vert[si], y.vert[si], fam[si]);
    }
    // assert compatibility of the result for (DY, DX)
    S21Obj dx = s21_duality(ctx, x), dy = s21_duality(ctx, y);
    for (size_t s = 0; s < ts.size(); ++s)
        for (size_t t = 0; t < ts.size(); ++t) {
            if (!theta_leq(ts[s], ts[t])) continue;
            int lhs = m.pull(dy.vert[t], dx.vert[t], dy.vert[s], dy.map[s][t], out[t]);
            int rhs = m.push(dy.vert[s], dx.vert[s], dx.vert[t], dx.map[s][t], out[s]);
            if (lhs != rhs)
                throw std::runtime_error("extend_bimodule_J: image family incompatible");
        }
    return out;
}

} // namespace reks
