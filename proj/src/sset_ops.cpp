#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "reks/sset.hpp"

namespace reks {

namespace {

// degeneracy-word prepend without an ambient SSet
Simplex deg_word(const Simplex& s, int i)
{
    Simplex out = s;
    out.dim = s.dim + 1;
    int val = i;
    size_t pos = 0;
    while (pos < out.word.size() && val <= out.word[pos]) {
        out.word[pos] += 1;
        ++pos;
    }
    out.word.insert(out.word.begin() + pos, val);
    return out;
}

Simplex apply_word_outermost_first(Simplex core, const std::vector<int>& w)
{
    for (size_t k = w.size(); k-- > 0;) core = deg_word(core, w[k]);
    return core;
}

std::vector<int> common_word_index(const std::vector<Simplex>& t)
{
    std::set<int> common(t[0].word.begin(), t[0].word.end());
    for (size_t j = 1; j < t.size() && !common.empty(); ++j) {
        std::set<int> w(t[j].word.begin(), t[j].word.end());
        std::set<int> inter;
        for (int i : common)
            if (w.count(i)) inter.insert(i);
        common = inter;
    }
    return std::vector<int>(common.begin(), common.end());
}

struct Builder {
    LatticePtr lat;
    int trunc;
    std::vector<int> n_nd;
    std::vector<std::vector<std::vector<Simplex>>> faces;
    std::vector<std::vector<std::vector<int>>> action;
    std::string name;

    Builder(LatticePtr l, int t, std::string nm = "")
        : lat(std::move(l)), trunc(t), name(std::move(nm))
    {
        n_nd.assign(trunc + 1, 0);
        faces.resize(trunc + 1);
        action.resize(lat->group().order());
        for (auto& a : action) a.resize(trunc + 1);
    }

    SSetPtr finish()
    {
        auto p = std::make_shared<SSet>(lat, trunc, n_nd, faces, action, name);
        p->validate();
        return p;
    }
};

void check_same_lattice(const std::vector<SSetPtr>& xs)
{
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i]->group() == xs[0]->group()))
            throw std::invalid_argument("construction: factors over different groups");
}

std::vector<std::vector<int>> trivial_perm(LatticePtr lat, size_t k)
{
    std::vector<std::vector<int>> p(lat->group().order(), std::vector<int>(k));
    for (auto& row : p)
        for (size_t j = 0; j < k; ++j) row[j] = (int)j;
    return p;
}

Simplex base_degen(int dim)
{
    Simplex bs;
    bs.dim = dim;
    bs.nd = 0;
    for (int j = dim - 1; j >= 0; --j) bs.word.push_back(j);
    return bs;
}

} // namespace

int ProductResult::nd_of_tuple(int dim, const std::vector<Simplex>& t) const
{
    auto it = tuple_idx[dim].find(t);
    if (it == tuple_idx[dim].end())
        throw std::invalid_argument("ProductResult: unknown tuple");
    return it->second;
}

SSetPtr point_sset(LatticePtr lat, int trunc)
{
    Builder b(std::move(lat), trunc, "pt");
    b.n_nd[0] = 1;
    for (auto& a : b.action) a[0] = {0};
    return b.finish();
}

SSetPtr circle_sset(LatticePtr lat, int trunc)
{
    Builder b(std::move(lat), trunc, "S1");
    b.n_nd[0] = 1;
    if (trunc >= 1) {
        b.n_nd[1] = 1;
        b.faces[1] = {{Simplex{0, {}, 0}, Simplex{0, {}, 0}}};
    }
    for (auto& a : b.action) {
        a[0] = {0};
        if (trunc >= 1) a[1] = {0};
    }
    return b.finish();
}

SSetPtr sphere_sset(LatticePtr lat, int n, int trunc)
{
    if (n == 1) return circle_sset(std::move(lat), trunc);
    Builder b(std::move(lat), trunc, "S" + std::to_string(n));
    b.n_nd[0] = (n == 0) ? 2 : 1;
    if (n >= 1 && n <= trunc) {
        b.n_nd[n] = 1;
        b.faces[n].push_back(std::vector<Simplex>(n + 1, base_degen(n - 1)));
    }
    for (auto& a : b.action)
        for (int d = 0; d <= trunc; ++d) {
            a[d].resize(b.n_nd[d]);
            for (int x = 0; x < b.n_nd[d]; ++x) a[d][x] = x;
        }
    return b.finish();
}

SSetPtr interval_sset(LatticePtr lat, int trunc)
{
    // Δ[1]; nondegenerate vertices: 0 = endpoint 1 (the basepoint), 1 = endpoint 0
    Builder b(std::move(lat), trunc, "I");
    b.n_nd[0] = 2;
    if (trunc >= 1) {
        b.n_nd[1] = 1;
        b.faces[1] = {{Simplex{0, {}, 0}, Simplex{0, {}, 1}}};
    }
    for (auto& a : b.action) {
        a[0] = {0, 1};
        if (trunc >= 1) a[1] = {0};
    }
    return b.finish();
}

ProductResult product_sset(const std::vector<SSetPtr>& factors,
                           const std::vector<std::vector<int>>& factor_perm)
{
    if (factors.empty()) throw std::invalid_argument("product_sset: no factors");
    check_same_lattice(factors);
    LatticePtr lat = factors[0]->lattice_ptr();
    const FiniteGroup& G = lat->group();
    std::vector<std::vector<int>> perm =
        factor_perm.empty() ? trivial_perm(lat, factors.size()) : factor_perm;
    if (!factor_perm.empty())
        for (size_t j = 1; j < factors.size(); ++j)
            if (factors[j] != factors[0])
                throw std::invalid_argument("product_sset: permuted factors must coincide");

    int trunc = factors[0]->trunc();
    for (const auto& f : factors) trunc = std::min(trunc, f->trunc());

    size_t k = factors.size();
    Builder b(lat, trunc, "prod");
    std::vector<std::map<std::vector<Simplex>, int>> idx(trunc + 1);
    std::vector<std::vector<std::vector<Simplex>>> parts(trunc + 1);

    for (int n = 0; n <= trunc; ++n) {
        std::vector<std::vector<Simplex>> tuples;
        std::vector<Simplex> cur(k);
        std::function<void(size_t)> rec = [&](size_t j) {
            if (j == k) {
                if (common_word_index(cur).empty()) tuples.push_back(cur);
                return;
            }
            for (const Simplex& s : factors[j]->level(n)) {
                cur[j] = s;
                rec(j + 1);
            }
        };
        rec(0);
        std::sort(tuples.begin(), tuples.end());
        parts[n] = tuples;
        b.n_nd[n] = (int)tuples.size();
        for (int x = 0; x < (int)tuples.size(); ++x) idx[n][tuples[x]] = x;
    }

    auto normalize_tuple = [&](std::vector<Simplex> t) -> Simplex {
        std::vector<int> collected;
        for (;;) {
            std::vector<int> common = common_word_index(t);
            if (common.empty()) break;
            int i = common[0];
            for (size_t j = 0; j < k; ++j) t[j] = factors[j]->face(t[j], i);
            collected.push_back(i);
        }
        int core_dim = t[0].dim;
        auto it = idx[core_dim].find(t);
        if (it == idx[core_dim].end())
            throw std::runtime_error("product_sset: core tuple not found");
        return apply_word_outermost_first(Simplex{core_dim, {}, it->second}, collected);
    };

    for (int n = 1; n <= trunc; ++n) {
        b.faces[n].resize(b.n_nd[n]);
        for (int x = 0; x < b.n_nd[n]; ++x) {
            b.faces[n][x].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                std::vector<Simplex> t = parts[n][x];
                for (size_t j = 0; j < k; ++j) t[j] = factors[j]->face(t[j], i);
                b.faces[n][x][i] = normalize_tuple(t);
            }
        }
    }

    for (int g = 0; g < G.order(); ++g) {
        int ginv = G.inv(g);
        for (int n = 0; n <= trunc; ++n) {
            b.action[g][n].resize(b.n_nd[n]);
            for (int x = 0; x < b.n_nd[n]; ++x) {
                std::vector<Simplex> t(k);
                for (size_t j = 0; j < k; ++j)
                    t[j] = factors[j]->act(g, parts[n][x][perm[ginv][j]]);
                b.action[g][n][x] = idx[n].at(t);
            }
        }
    }

    ProductResult out;
    out.prod = b.finish();
    out.parts = parts;
    out.tuple_idx = idx;
    for (size_t j = 0; j < k; ++j) {
        SMap pr;
        pr.src = out.prod;
        pr.dst = factors[j];
        pr.img.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n)
            for (int x = 0; x < out.prod->n_nd(n); ++x) pr.img[n].push_back(parts[n][x][j]);
        pr.validate(false);
        out.projections.push_back(std::move(pr));
    }
    return out;
}

WedgeResult wedge_sset(const std::vector<SSetPtr>& summands,
                       const std::vector<std::vector<int>>& summand_perm)
{
    if (summands.empty()) throw std::invalid_argument("wedge_sset: no summands");
    check_same_lattice(summands);
    LatticePtr lat = summands[0]->lattice_ptr();
    const FiniteGroup& G = lat->group();
    std::vector<std::vector<int>> perm =
        summand_perm.empty() ? trivial_perm(lat, summands.size()) : summand_perm;
    if (!summand_perm.empty())
        for (size_t j = 1; j < summands.size(); ++j)
            if (summands[j] != summands[0])
                throw std::invalid_argument("wedge_sset: permuted summands must coincide");

    int trunc = summands[0]->trunc();
    for (const auto& s : summands) trunc = std::min(trunc, s->trunc());
    size_t k = summands.size();

    Builder b(lat, trunc, "wedge");
    std::vector<std::vector<std::vector<int>>> gid(k);
    for (size_t j = 0; j < k; ++j) {
        gid[j].resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n) gid[j][n].assign(summands[j]->n_nd(n), -1);
    }
    b.n_nd[0] = 1;
    for (size_t j = 0; j < k; ++j) {
        gid[j][0][0] = 0;
        for (int x = 1; x < summands[j]->n_nd(0); ++x) gid[j][0][x] = b.n_nd[0]++;
        for (int n = 1; n <= trunc; ++n)
            for (int x = 0; x < summands[j]->n_nd(n); ++x) gid[j][n][x] = b.n_nd[n]++;
    }
    std::vector<std::vector<std::pair<int, int>>> owner(trunc + 1);
    for (int n = 0; n <= trunc; ++n) owner[n].assign(b.n_nd[n], {-1, -1});
    for (size_t j = 0; j < k; ++j)
        for (int n = 0; n <= trunc; ++n)
            for (int x = 0; x < summands[j]->n_nd(n); ++x)
                if (!(n == 0 && x == 0)) owner[n][gid[j][n][x]] = {(int)j, x};

    auto remap = [&](size_t j, const Simplex& s) -> Simplex {
        Simplex out = s;
        out.nd = gid[j][s.dim - (int)s.word.size()][s.nd];
        return out;
    };

    for (int n = 1; n <= trunc; ++n) {
        b.faces[n].resize(b.n_nd[n]);
        for (int x = 0; x < b.n_nd[n]; ++x) {
            auto [j, xj] = owner[n][x];
            b.faces[n][x].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                b.faces[n][x][i] = remap(j, summands[j]->face(Simplex{n, {}, xj}, i));
        }
    }
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n <= trunc; ++n) {
            b.action[g][n].resize(b.n_nd[n]);
            if (n == 0) b.action[g][0][0] = 0;
            for (int x = 0; x < b.n_nd[n]; ++x) {
                auto [j, xj] = owner[n][x];
                if (j < 0) continue;
                b.action[g][n][x] = gid[perm[g][j]][n][summands[j]->act_nd(g, n, xj)];
            }
        }

    WedgeResult out;
    out.wedge = b.finish();
    for (size_t j = 0; j < k; ++j) {
        SMap inc;
        inc.src = summands[j];
        inc.dst = out.wedge;
        inc.img.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n)
            for (int x = 0; x < summands[j]->n_nd(n); ++x)
                inc.img[n].push_back(Simplex{n, {}, gid[j][n][x]});
        inc.validate(false);
        out.inclusions.push_back(std::move(inc));
    }
    return out;
}

QuotientResult quotient_sset(SSetPtr x, const std::vector<std::vector<int>>& kill)
{
    int trunc = x->trunc();
    const FiniteGroup& G = x->group();
    std::vector<std::vector<bool>> dead(trunc + 1);
    for (int n = 0; n <= trunc; ++n) dead[n].assign(x->n_nd(n), false);
    for (int n = 0; n < (int)kill.size() && n <= trunc; ++n)
        for (int id : kill[n]) dead[n][id] = true;
    // the basepoint belongs to every pointed subcomplex; collapsing it is a no-op
    if (!dead[0].empty()) dead[0][0] = false;

    for (int n = 1; n <= trunc; ++n)
        for (int id = 0; id < x->n_nd(n); ++id) {
            if (!dead[n][id]) continue;
            for (int i = 0; i <= n; ++i) {
                Simplex f = x->face(Simplex{n, {}, id}, i);
                int core = f.dim - (int)f.word.size();
                if (!(dead[core][f.nd] || (core == 0 && f.nd == 0)))
                    throw std::invalid_argument("quotient_sset: kill set not face-closed");
            }
        }
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n <= trunc; ++n)
            for (int id = 0; id < x->n_nd(n); ++id)
                if (dead[n][id] != dead[n][x->act_nd(g, n, id)])
                    throw std::invalid_argument("quotient_sset: kill set not G-stable");

    Builder b(x->lattice_ptr(), trunc, x->name() + "/~");
    std::vector<std::vector<int>> gid(trunc + 1), back(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        gid[n].assign(x->n_nd(n), -1);
        for (int id = 0; id < x->n_nd(n); ++id)
            if (!dead[n][id]) {
                gid[n][id] = b.n_nd[n]++;
                back[n].push_back(id);
            }
    }

    auto push_through = [&](const Simplex& s) -> Simplex {
        int core = s.dim - (int)s.word.size();
        if (dead[core][s.nd]) return base_degen(s.dim);
        Simplex out = s;
        out.nd = gid[core][s.nd];
        return out;
    };

    for (int n = 1; n <= trunc; ++n) {
        b.faces[n].resize(b.n_nd[n]);
        for (int y = 0; y < b.n_nd[n]; ++y) {
            b.faces[n][y].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                b.faces[n][y][i] = push_through(x->face(Simplex{n, {}, back[n][y]}, i));
        }
    }
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n <= trunc; ++n) {
            b.action[g][n].resize(b.n_nd[n]);
            for (int y = 0; y < b.n_nd[n]; ++y)
                b.action[g][n][y] = gid[n][x->act_nd(g, n, back[n][y])];
        }

    QuotientResult out;
    out.quot = b.finish();
    out.proj.src = x;
    out.proj.dst = out.quot;
    out.proj.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
        for (int id = 0; id < x->n_nd(n); ++id)
            out.proj.img[n].push_back(push_through(Simplex{n, {}, id}));
    out.proj.validate();
    return out;
}

SmashResult smash_sset(const std::vector<SSetPtr>& factors,
                       const std::vector<std::vector<int>>& factor_perm)
{
    SmashResult out;
    out.product = product_sset(factors, factor_perm);
    const SSetPtr& p = out.product.prod;
    std::vector<std::vector<int>> kill(p->trunc() + 1);
    for (int n = 0; n <= p->trunc(); ++n)
        for (int x = 0; x < p->n_nd(n); ++x)
            for (size_t j = 0; j < factors.size(); ++j)
                if (factors[j]->is_base_degenerate(out.product.parts[n][x][j])) {
                    kill[n].push_back(x);
                    break;
                }
    QuotientResult q = quotient_sset(p, kill);
    out.smash = q.quot;
    out.from_product = q.proj;
    return out;
}

PushoutResult pushout_sset(const SMap& f, const SMap& g)
{
    if (f.src != g.src) throw std::invalid_argument("pushout_sset: domains differ");
    if (!f.levelwise_injective_nd())
        throw std::invalid_argument("pushout_sset: first leg must be levelwise injective");
    SSetPtr a = f.src, x = f.dst, y = g.dst;
    int trunc = std::min(x->trunc(), y->trunc());
    const FiniteGroup& G = a->group();

    std::vector<std::vector<int>> pre(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        pre[n].assign(x->n_nd(n), -1);
        for (int id = 0; id < a->n_nd(n) && n <= a->trunc(); ++id)
            pre[n][f.img[n][id].nd] = id;
    }

    Builder b(x->lattice_ptr(), trunc, "pushout");
    std::vector<std::vector<int>> gy(trunc + 1), gx(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        gy[n].assign(y->n_nd(n), -1);
        gx[n].assign(x->n_nd(n), -1);
        for (int id = 0; id < y->n_nd(n); ++id) gy[n][id] = b.n_nd[n]++;
        for (int id = 0; id < x->n_nd(n); ++id)
            if (pre[n][id] < 0) gx[n][id] = b.n_nd[n]++;
    }

    auto fromY = [&](const Simplex& s) -> Simplex {
        Simplex out = s;
        out.nd = gy[s.dim - (int)s.word.size()][s.nd];
        return out;
    };
    auto fromX = [&](const Simplex& s) -> Simplex {
        int core = s.dim - (int)s.word.size();
        if (pre[core][s.nd] >= 0)
            return apply_word_outermost_first(fromY(g.img[core][pre[core][s.nd]]), s.word);
        Simplex out = s;
        out.nd = gx[core][s.nd];
        return out;
    };

    for (int n = 1; n <= trunc; ++n) {
        b.faces[n].resize(b.n_nd[n]);
        for (int id = 0; id < y->n_nd(n); ++id) {
            auto& row = b.faces[n][gy[n][id]];
            row.resize(n + 1);
            for (int i = 0; i <= n; ++i) row[i] = fromY(y->face(Simplex{n, {}, id}, i));
        }
        for (int id = 0; id < x->n_nd(n); ++id) {
            if (gx[n][id] < 0) continue;
            auto& row = b.faces[n][gx[n][id]];
            row.resize(n + 1);
            for (int i = 0; i <= n; ++i) row[i] = fromX(x->face(Simplex{n, {}, id}, i));
        }
    }
    for (int gg = 0; gg < G.order(); ++gg)
        for (int n = 0; n <= trunc; ++n) {
            b.action[gg][n].resize(b.n_nd[n]);
            for (int id = 0; id < y->n_nd(n); ++id)
                b.action[gg][n][gy[n][id]] = gy[n][y->act_nd(gg, n, id)];
            for (int id = 0; id < x->n_nd(n); ++id)
                if (gx[n][id] >= 0) b.action[gg][n][gx[n][id]] = gx[n][x->act_nd(gg, n, id)];
        }

    PushoutResult out;
    out.po = b.finish();
    out.from_x.src = x;
    out.from_x.dst = out.po;
    out.from_x.img.resize(trunc + 1);
    out.from_y.src = y;
    out.from_y.dst = out.po;
    out.from_y.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        for (int id = 0; id < x->n_nd(n); ++id) out.from_x.img[n].push_back(fromX(Simplex{n, {}, id}));
        for (int id = 0; id < y->n_nd(n); ++id) out.from_y.img[n].push_back(fromY(Simplex{n, {}, id}));
    }
    out.from_x.validate();
    out.from_y.validate();
    return out;
}

ConeResult cone_sset(SSetPtr x)
{
    SSetPtr I = interval_sset(x->lattice_ptr(), x->trunc());
    SmashResult sm = smash_sset({x, I});
    ConeResult out;
    out.cone = sm.smash;
    SMap into_prod;
    into_prod.src = x;
    into_prod.dst = sm.product.prod;
    into_prod.img.resize(x->trunc() + 1);
    for (int n = 0; n <= x->trunc(); ++n)
        for (int id = 0; id < x->n_nd(n); ++id) {
            Simplex v0 = base_degen(n);
            v0.nd = 1;  // the free endpoint of the interval
            std::vector<Simplex> t = {Simplex{n, {}, id}, v0};
            into_prod.img[n].push_back(Simplex{n, {}, sm.product.nd_of_tuple(n, t)});
        }
    out.incl = compose(sm.from_product, into_prod);
    out.incl.validate();
    return out;
}

SSetPtr suspension_sset(SSetPtr x)
{
    SSetPtr s1 = circle_sset(x->lattice_ptr(), x->trunc());
    return smash_sset({x, s1}).smash;
}

SubResult subcomplex_sset(SSetPtr x, const std::vector<std::vector<bool>>& keep,
                          const std::string& name)
{
    int trunc = x->trunc();
    const FiniteGroup& G = x->group();
    if (!keep[0][0]) throw std::invalid_argument("subcomplex_sset: basepoint must be kept");
    for (int n = 1; n <= trunc; ++n)
        for (int id = 0; id < x->n_nd(n); ++id) {
            if (!keep[n][id]) continue;
            for (int i = 0; i <= n; ++i) {
                Simplex f = x->face(Simplex{n, {}, id}, i);
                if (!keep[f.dim - (int)f.word.size()][f.nd])
                    throw std::invalid_argument("subcomplex_sset: not face-closed");
            }
        }
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n <= trunc; ++n)
            for (int id = 0; id < x->n_nd(n); ++id)
                if (keep[n][id] != keep[n][x->act_nd(g, n, id)])
                    throw std::invalid_argument("subcomplex_sset: not G-stable");

    Builder b(x->lattice_ptr(), trunc, name);
    std::vector<std::vector<int>> gid(trunc + 1), back(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        gid[n].assign(x->n_nd(n), -1);
        for (int id = 0; id < x->n_nd(n); ++id)
            if (keep[n][id]) {
                gid[n][id] = b.n_nd[n]++;
                back[n].push_back(id);
            }
    }
    auto remap = [&](const Simplex& s) -> Simplex {
        Simplex o = s;
        o.nd = gid[s.dim - (int)s.word.size()][s.nd];
        return o;
    };
    for (int n = 1; n <= trunc; ++n) {
        b.faces[n].resize(b.n_nd[n]);
        for (int y = 0; y < b.n_nd[n]; ++y) {
            b.faces[n][y].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                b.faces[n][y][i] = remap(x->face(Simplex{n, {}, back[n][y]}, i));
        }
    }
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n <= trunc; ++n) {
            b.action[g][n].resize(b.n_nd[n]);
            for (int y = 0; y < b.n_nd[n]; ++y)
                b.action[g][n][y] = gid[n][x->act_nd(g, n, back[n][y])];
        }

    SubResult out;
    out.sub = b.finish();
    out.incl.src = out.sub;
    out.incl.dst = x;
    out.incl.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
        for (int y = 0; y < b.n_nd[n]; ++y) out.incl.img[n].push_back(Simplex{n, {}, back[n][y]});
    out.incl.validate();
    return out;
}

FixedResult fixed_points(SSetPtr x, size_t sub)
{
    std::vector<int> elems = x->lattice().elements(sub);
    int trunc = x->trunc();
    LatticePtr triv = lattice_of(FiniteGroup::trivial());
    Builder b(triv, trunc, x->name() + "^H");
    std::vector<std::vector<int>> gid(trunc + 1), back(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        gid[n].assign(x->n_nd(n), -1);
        for (int id = 0; id < x->n_nd(n); ++id) {
            bool fix = true;
            for (int h : elems)
                if (x->act_nd(h, n, id) != id) { fix = false; break; }
            if (fix) {
                gid[n][id] = b.n_nd[n]++;
                back[n].push_back(id);
            }
        }
    }
    for (int n = 1; n <= trunc; ++n) {
        b.faces[n].resize(b.n_nd[n]);
        for (int y = 0; y < b.n_nd[n]; ++y) {
            b.faces[n][y].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                Simplex fs = x->face(Simplex{n, {}, back[n][y]}, i);
                int core = fs.dim - (int)fs.word.size();
                Simplex out = fs;
                out.nd = gid[core][fs.nd];
                if (out.nd < 0) throw std::runtime_error("fixed_points: face not fixed");
                b.faces[n][y][i] = out;
            }
        }
    }
    for (auto& a : b.action)
        for (int n = 0; n <= trunc; ++n) {
            a[n].resize(b.n_nd[n]);
            for (int y = 0; y < b.n_nd[n]; ++y) a[n][y] = y;
        }

    FixedResult out;
    out.fixed = b.finish();
    out.incl.src = out.fixed;
    out.incl.dst = x;
    out.incl.img.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
        for (int y = 0; y < b.n_nd[n]; ++y) out.incl.img[n].push_back(Simplex{n, {}, back[n][y]});
    out.incl.validate(false);
    return out;
}

IndexedResult indexed_wedge_product(SSetPtr x, const FiniteGSet& J)
{
    if (!(J.lattice().group() == x->group()))
        throw std::invalid_argument("indexed_wedge_product: group mismatch");
    size_t k = J.size();
    const FiniteGroup& G = x->group();
    std::vector<std::vector<int>> perm(G.order(), std::vector<int>(k));
    for (int g = 0; g < G.order(); ++g)
        for (size_t j = 0; j < k; ++j) perm[g][j] = J.act(g, (int)j);

    std::vector<SSetPtr> copies(k, x);
    WedgeResult w = wedge_sset(copies, perm);
    ProductResult p = product_sset(copies, perm);

    IndexedResult out;
    out.wedge = w.wedge;
    out.prod = p.prod;
    out.comparison.src = out.wedge;
    out.comparison.dst = out.prod;
    out.comparison.img.resize(out.wedge->trunc() + 1);
    for (int n = 0; n <= out.wedge->trunc(); ++n)
        out.comparison.img[n].resize(out.wedge->n_nd(n));
    // basepoint
    {
        std::vector<Simplex> t(k, Simplex{0, {}, 0});
        out.comparison.img[0][0] = Simplex{0, {}, p.nd_of_tuple(0, t)};
    }
    for (size_t j = 0; j < k; ++j)
        for (int n = 0; n <= out.wedge->trunc(); ++n)
            for (int z = 0; z < x->n_nd(n); ++z) {
                const Simplex& in_wedge = w.inclusions[j].img[n][z];
                if (n == 0 && z == 0) continue;
                std::vector<Simplex> t(k);
                for (size_t l = 0; l < k; ++l) t[l] = x->base_simplex(n);
                t[j] = Simplex{n, {}, z};
                out.comparison.img[n][in_wedge.nd] = Simplex{n, {}, p.nd_of_tuple(n, t)};
            }
    out.comparison.validate();
    return out;
}

SSetPtr rep_sphere(const FiniteGSet& I, int trunc)
{
    if (I.size() == 0) throw std::invalid_argument("rep_sphere: empty index set");
    LatticePtr lat = I.lattice_ptr();
    const FiniteGroup& G = lat->group();
    SSetPtr s1 = circle_sset(lat, trunc);
    std::vector<SSetPtr> factors(I.size(), s1);
    std::vector<std::vector<int>> perm(G.order(), std::vector<int>(I.size()));
    for (int g = 0; g < G.order(); ++g)
        for (int j = 0; j < I.size(); ++j) perm[g][j] = I.act(g, j);
    return smash_sset(factors, perm).smash;
}

GCube build_cocartesian_cube(const std::vector<SMap>& es)
{
    if (es.empty()) throw std::invalid_argument("build_cocartesian_cube: no initial maps");
    SSetPtr a = es[0].src;
    for (const SMap& e : es) {
        if (e.src != a) throw std::invalid_argument("build_cocartesian_cube: domains differ");
        if (!e.levelwise_injective_nd())
            throw std::invalid_argument("build_cocartesian_cube: initial maps must be injective");
    }
    size_t n = es.size();
    int trunc = a->trunc();
    for (const SMap& e : es) trunc = std::min(trunc, e.dst->trunc());
    const FiniteGroup& G = a->group();

    // vertex S = A ⊔ ⊔_{i∈S} (X_i \ e_i(A)); every 2-face is a pushout on
    // the nose because the pieces are disjoint.
    std::vector<std::vector<std::vector<int>>> pre(n);
    for (size_t i = 0; i < n; ++i) {
        pre[i].resize(trunc + 1);
        for (int d = 0; d <= trunc; ++d) {
            pre[i][d].assign(es[i].dst->n_nd(d), -1);
            for (int id = 0; id < a->n_nd(d); ++id) pre[i][d][es[i].img[d][id].nd] = id;
        }
    }

    GCube cube;
    cube.initial = es;
    cube.vertex.resize(1u << n);
    cube.edge.assign(1u << n, std::vector<SMap>(n));

    // per vertex: global ids for the A-part and each X_i-part
    std::vector<std::vector<std::vector<int>>> ga(1u << n);
    std::vector<std::vector<std::vector<std::vector<int>>>> gx(1u << n);

    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        Builder b(a->lattice_ptr(), trunc, "cube" + std::to_string(mask));
        auto& gaM = ga[mask];
        auto& gxM = gx[mask];
        gaM.resize(trunc + 1);
        gxM.assign(n, {});
        for (int d = 0; d <= trunc; ++d) {
            gaM[d].resize(a->n_nd(d));
            for (int id = 0; id < a->n_nd(d); ++id) gaM[d][id] = b.n_nd[d]++;
        }
        for (size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            gxM[i].resize(trunc + 1);
            for (int d = 0; d <= trunc; ++d) {
                gxM[i][d].assign(es[i].dst->n_nd(d), -1);
                for (int id = 0; id < es[i].dst->n_nd(d); ++id)
                    if (pre[i][d][id] < 0) gxM[i][d][id] = b.n_nd[d]++;
            }
        }

        auto fromA = [&](const Simplex& s) -> Simplex {
            Simplex out = s;
            out.nd = gaM[s.dim - (int)s.word.size()][s.nd];
            return out;
        };
        auto fromXi = [&](size_t i, const Simplex& s) -> Simplex {
            int core = s.dim - (int)s.word.size();
            if (pre[i][core][s.nd] >= 0) {
                Simplex t = fromA(Simplex{core, {}, pre[i][core][s.nd]});
                return apply_word_outermost_first(t, s.word);
            }
            Simplex out = s;
            out.nd = gxM[i][core][s.nd];
            return out;
        };

        for (int d = 1; d <= trunc; ++d) {
            b.faces[d].resize(b.n_nd[d]);
            for (int id = 0; id < a->n_nd(d); ++id) {
                auto& row = b.faces[d][gaM[d][id]];
                row.resize(d + 1);
                for (int i2 = 0; i2 <= d; ++i2) row[i2] = fromA(a->face(Simplex{d, {}, id}, i2));
            }
            for (size_t i = 0; i < n; ++i) {
                if (!(mask >> i & 1)) continue;
                for (int id = 0; id < es[i].dst->n_nd(d); ++id) {
                    if (gxM[i][d][id] < 0) continue;
                    auto& row = b.faces[d][gxM[i][d][id]];
                    row.resize(d + 1);
                    for (int i2 = 0; i2 <= d; ++i2)
                        row[i2] = fromXi(i, es[i].dst->face(Simplex{d, {}, id}, i2));
                }
            }
        }
        for (int g = 0; g < G.order(); ++g)
            for (int d = 0; d <= trunc; ++d) {
                b.action[g][d].resize(b.n_nd[d]);
                for (int id = 0; id < a->n_nd(d); ++id)
                    b.action[g][d][gaM[d][id]] = gaM[d][a->act_nd(g, d, id)];
                for (size_t i = 0; i < n; ++i) {
                    if (!(mask >> i & 1)) continue;
                    for (int id = 0; id < es[i].dst->n_nd(d); ++id)
                        if (gxM[i][d][id] >= 0)
                            b.action[g][d][gxM[i][d][id]] = gxM[i][d][es[i].dst->act_nd(g, d, id)];
                }
            }
        cube.vertex[mask] = b.finish();
    }

    // edges: identity on the A-part and on each retained X_i-part
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        for (uint32_t j = 0; j < n; ++j) {
            if (mask >> j & 1) continue;
            uint32_t big = mask | (1u << j);
            SMap e;
            e.src = cube.vertex[mask];
            e.dst = cube.vertex[big];
            e.img.resize(trunc + 1);
            for (int d = 0; d <= trunc; ++d) e.img[d].resize(e.src->n_nd(d));
            for (int d = 0; d <= trunc; ++d) {
                for (int id = 0; id < a->n_nd(d); ++id)
                    e.img[d][ga[mask][d][id]] = Simplex{d, {}, ga[big][d][id]};
                for (size_t i = 0; i < n; ++i) {
                    if (!(mask >> i & 1)) continue;
                    for (int id = 0; id < es[i].dst->n_nd(d); ++id)
                        if (gx[mask][i][d][id] >= 0)
                            e.img[d][gx[mask][i][d][id]] = Simplex{d, {}, gx[big][i][d][id]};
                }
            }
            e.validate();
            cube.edge[mask][j] = std::move(e);
        }
    return cube;
}

} // namespace reks
