#include "reks/category.hpp"

#include <map>
#include <stdexcept>

namespace reks {

FinCat::FinCat(int n_obj, std::vector<std::vector<int>> hom_size, std::vector<int> id_idx,
               std::function<int(int, int, int, int, int)> comp, std::string name, bool lazy)
    : n_obj_(n_obj), hom_size_(std::move(hom_size)), id_idx_(std::move(id_idx)),
      comp_fn_(std::move(comp)), lazy_(lazy), name_(std::move(name))
{
    comp_.resize(n_obj_);
    for (int c = 0; c < n_obj_; ++c) {
        comp_[c].resize(n_obj_);
        for (int d = 0; d < n_obj_; ++d) comp_[c][d].resize(n_obj_);
    }
    if (!lazy_) {
        for (int c = 0; c < n_obj_; ++c)
            for (int d = 0; d < n_obj_; ++d)
                for (int e = 0; e < n_obj_; ++e) {
                    auto& t = comp_[c][d][e];
                    t.resize((size_t)hom_size_[c][d] * hom_size_[d][e]);
                    for (int g = 0; g < hom_size_[c][d]; ++g)
                        for (int f = 0; f < hom_size_[d][e]; ++f)
                            t[(size_t)g * hom_size_[d][e] + f] = comp_fn_(c, d, e, g, f);
                }
    }
    inv_cache_.assign(n_obj_, {});
    if (!lazy_) validate();
}

int FinCat::compose(int c, int d, int e, int g, int f) const
{
    auto& t = comp_[c][d][e];
    if (lazy_ && t.empty()) {
        if (hom_size_[c][d] > 0 && hom_size_[d][e] > 0 &&
            (size_t)hom_size_[c][d] * hom_size_[d][e] > 4'000'000)
            return comp_fn_(c, d, e, g, f);  // too big to cache
        t.assign((size_t)hom_size_[c][d] * hom_size_[d][e], -1);
    }
    if (t.empty()) return comp_fn_(c, d, e, g, f);
    int& slot = t[(size_t)g * hom_size_[d][e] + f];
    if (lazy_ && slot < 0) slot = comp_fn_(c, d, e, g, f);
    return slot;
}

bool FinCat::is_iso(int c, int d, int f) const { return inverse(c, d, f) >= 0; }

int FinCat::inverse(int c, int d, int f) const
{
    if (inv_cache_[c].empty()) inv_cache_[c].resize(n_obj_);
    if (inv_cache_[c][d].empty()) inv_cache_[c][d].assign(hom_size_[c][d], -2);
    int& slot = inv_cache_[c][d][f];
    if (slot != -2) return slot;
    for (int g = 0; g < hom_size_[d][c]; ++g)
        if (compose(c, d, c, f, g) == id_mor(c) && compose(d, c, d, g, f) == id_mor(d)) {
            slot = g;
            return g;
        }
    slot = -1;
    return -1;
}

std::vector<int> FinCat::isos(int c, int d) const
{
    std::vector<int> out;
    for (int f = 0; f < hom_size_[c][d]; ++f)
        if (is_iso(c, d, f)) out.push_back(f);
    return out;
}

void FinCat::validate() const
{
    for (int c = 0; c < n_obj_; ++c) {
        if (id_idx_[c] < 0 || id_idx_[c] >= hom_size_[c][c])
            throw std::runtime_error("FinCat: bad identity index");
        for (int d = 0; d < n_obj_; ++d) {
            for (int f = 0; f < hom_size_[c][d]; ++f) {
                if (compose(c, c, d, id_idx_[c], f) != f)
                    throw std::runtime_error("FinCat: right unit law fails");
                if (compose(c, d, d, f, id_idx_[d]) != f)
                    throw std::runtime_error("FinCat: left unit law fails");
            }
        }
    }
    for (int b = 0; b < n_obj_; ++b)
        for (int c = 0; c < n_obj_; ++c)
            for (int d = 0; d < n_obj_; ++d)
                for (int e = 0; e < n_obj_; ++e)
                    for (int h = 0; h < hom_size_[b][c]; ++h)
                        for (int g = 0; g < hom_size_[c][d]; ++g)
                            for (int f = 0; f < hom_size_[d][e]; ++f) {
                                int fg = compose(c, d, e, g, f);
                                int gh = compose(b, c, d, h, g);
                                if (compose(b, c, e, h, fg) != compose(b, d, e, gh, f))
                                    throw std::runtime_error("FinCat: associativity fails");
                            }
}

size_t FinCat::total_morphisms() const
{
    size_t t = 0;
    for (int c = 0; c < n_obj_; ++c)
        for (int d = 0; d < n_obj_; ++d) t += hom_size_[c][d];
    return t;
}

void StrictDuality::validate(const FinCat& cat) const
{
    int n = cat.n_obj();
    for (int c = 0; c < n; ++c)
        if (obj[obj[c]] != c) throw std::runtime_error("StrictDuality: D^2 != id on objects");
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            for (int f = 0; f < cat.hom_size(c, d); ++f) {
                if (mor[obj[d]][obj[c]][mor[c][d][f]] != f)
                    throw std::runtime_error("StrictDuality: D^2 != id on morphisms");
            }
    for (int c = 0; c < n; ++c)
        if (mor[c][c][cat.id_mor(c)] != cat.id_mor(obj[c]))
            throw std::runtime_error("StrictDuality: D(id) != id");
    long long budget = 2'000'000;
    for (int c = 0; c < n && budget > 0; ++c)
        for (int d = 0; d < n && budget > 0; ++d)
            for (int e = 0; e < n && budget > 0; ++e)
                for (int g = 0; g < cat.hom_size(c, d) && budget > 0; ++g)
                    for (int f = 0; f < cat.hom_size(d, e) && budget > 0; ++f) {
                        --budget;
                        int lhs = mor[c][e][cat.compose(c, d, e, g, f)];
                        int rhs = cat.compose(obj[e], obj[d], obj[c], mor[d][e][f], mor[c][d][g]);
                        if (lhs != rhs)
                            throw std::runtime_error("StrictDuality: not contravariant");
                    }
}

void DualityData::validate(const FinCat& cat) const
{
    int n = cat.n_obj();
    // contravariance and unit preservation
    for (int c = 0; c < n; ++c)
        if (mor[c][c][cat.id_mor(c)] != cat.id_mor(obj[c]))
            throw std::runtime_error("DualityData: D(id) != id");
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
                for (int g = 0; g < cat.hom_size(c, d); ++g)
                    for (int f = 0; f < cat.hom_size(d, e); ++f) {
                        int lhs = mor[c][e][cat.compose(c, d, e, g, f)];
                        int rhs = cat.compose(obj[e], obj[d], obj[c], mor[d][e][f], mor[c][d][g]);
                        if (lhs != rhs) throw std::runtime_error("DualityData: not contravariant");
                    }
    // eta: natural isomorphism id => D^2 with D(eta_c) ∘ eta_{Dc} = id
    for (int c = 0; c < n; ++c) {
        int dd = obj[obj[c]];
        if (!cat.is_iso(c, dd, eta[c])) throw std::runtime_error("DualityData: eta not iso");
    }
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            for (int f = 0; f < cat.hom_size(c, d); ++f) {
                // naturality: D^2(f) ∘ eta_c = eta_d ∘ f
                int ddf = mor[obj[d]][obj[c]][mor[c][d][f]];
                int lhs = cat.compose(c, obj[obj[c]], obj[obj[d]], eta[c], ddf);
                int rhs = cat.compose(c, d, obj[obj[d]], f, eta[d]);
                if (lhs != rhs) throw std::runtime_error("DualityData: eta not natural");
            }
    for (int c = 0; c < n; ++c) {
        // D(eta_c) ∘ eta_{Dc} = id_{Dc}
        int dc = obj[c];
        int deta = mor[c][obj[obj[c]]][eta[c]];   // hom(D^3 c, D c)
        int lhs = cat.compose(dc, obj[obj[dc]], dc, eta[dc], deta);
        if (lhs != cat.id_mor(dc)) throw std::runtime_error("DualityData: coherence fails");
    }
}

bool DualityData::is_strict(const FinCat& cat) const
{
    for (int c = 0; c < cat.n_obj(); ++c) {
        if (obj[obj[c]] != c) return false;
        if (eta[c] != cat.id_mor(c)) return false;
    }
    for (int c = 0; c < cat.n_obj(); ++c)
        for (int d = 0; d < cat.n_obj(); ++d)
            for (int f = 0; f < cat.hom_size(c, d); ++f)
                if (mor[obj[d]][obj[c]][mor[c][d][f]] != f) return false;
    return true;
}

DualityData DualityData::from_strict(const FinCat& cat, const StrictDuality& d)
{
    DualityData out;
    out.obj = d.obj;
    out.mor = d.mor;
    out.eta.resize(cat.n_obj());
    for (int c = 0; c < cat.n_obj(); ++c) out.eta[c] = cat.id_mor(c);
    out.validate(cat);
    return out;
}

void Functor::validate() const
{
    const FinCat& a = *src;
    const FinCat& b = *dst;
    for (int c = 0; c < a.n_obj(); ++c)
        if (fmor(c, c, a.id_mor(c)) != b.id_mor(fobj(c)))
            throw std::runtime_error("Functor: identities not preserved");
    for (int c = 0; c < a.n_obj(); ++c)
        for (int d = 0; d < a.n_obj(); ++d)
            for (int e = 0; e < a.n_obj(); ++e)
                for (int g = 0; g < a.hom_size(c, d); ++g)
                    for (int f = 0; f < a.hom_size(d, e); ++f) {
                        int lhs = fmor(c, e, a.compose(c, d, e, g, f));
                        int rhs = b.compose(fobj(c), fobj(d), fobj(e), fmor(c, d, g), fmor(d, e, f));
                        if (lhs != rhs) throw std::runtime_error("Functor: composition not preserved");
                    }
}

bool Functor::is_identity() const
{
    if (src != dst) return false;
    for (int c = 0; c < src->n_obj(); ++c)
        if (obj[c] != c) return false;
    for (int c = 0; c < src->n_obj(); ++c)
        for (int d = 0; d < src->n_obj(); ++d)
            for (int f = 0; f < src->hom_size(c, d); ++f)
                if (mor[c][d][f] != f) return false;
    return true;
}

Functor identity_functor(FinCatPtr c)
{
    Functor f;
    f.src = c;
    f.dst = c;
    f.obj.resize(c->n_obj());
    f.mor.resize(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
        f.obj[a] = a;
        f.mor[a].resize(c->n_obj());
        for (int b = 0; b < c->n_obj(); ++b) {
            f.mor[a][b].resize(c->hom_size(a, b));
            for (int m = 0; m < c->hom_size(a, b); ++m) f.mor[a][b][m] = m;
        }
    }
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f)
{
    if (f.dst != g.src) throw std::invalid_argument("compose_functors: middle mismatch");
    Functor out;
    out.src = f.src;
    out.dst = g.dst;
    out.obj.resize(f.src->n_obj());
    out.mor.resize(f.src->n_obj());
    for (int c = 0; c < f.src->n_obj(); ++c) {
        out.obj[c] = g.fobj(f.fobj(c));
        out.mor[c].resize(f.src->n_obj());
        for (int d = 0; d < f.src->n_obj(); ++d)
            for (int m = 0; m < f.src->hom_size(c, d); ++m)
                out.mor[c][d].push_back(g.fmor(f.fobj(c), f.fobj(d), f.fmor(c, d, m)));
    }
    return out;
}

void NatIso::validate(const Functor& f, const Functor& g) const
{
    if (f.src != g.src || f.dst != g.dst) throw std::invalid_argument("NatIso: functor mismatch");
    const FinCat& b = *f.dst;
    for (int c = 0; c < f.src->n_obj(); ++c)
        if (!b.is_iso(f.fobj(c), g.fobj(c), comp[c]))
            throw std::runtime_error("NatIso: component not an isomorphism");
    for (int c = 0; c < f.src->n_obj(); ++c)
        for (int d = 0; d < f.src->n_obj(); ++d)
            for (int m = 0; m < f.src->hom_size(c, d); ++m) {
                // g(m) ∘ comp_c = comp_d ∘ f(m)
                int lhs = b.compose(f.fobj(c), g.fobj(c), g.fobj(d), comp[c], g.fmor(c, d, m));
                int rhs = b.compose(f.fobj(c), f.fobj(d), g.fobj(d), f.fmor(c, d, m), comp[d]);
                if (lhs != rhs) throw std::runtime_error("NatIso: not natural");
            }
}

EquivalenceVerdict check_equivalence(const Functor& f)
{
    EquivalenceVerdict v;
    const FinCat& a = *f.src;
    const FinCat& b = *f.dst;
    v.fully_faithful = true;
    for (int c = 0; c < a.n_obj() && v.fully_faithful; ++c)
        for (int d = 0; d < a.n_obj() && v.fully_faithful; ++d) {
            std::vector<bool> hit(b.hom_size(f.fobj(c), f.fobj(d)), false);
            for (int m = 0; m < a.hom_size(c, d); ++m) {
                int im = f.fmor(c, d, m);
                if (hit[im]) {
                    v.fully_faithful = false;
                    v.detail = "not faithful";
                    break;
                }
                hit[im] = true;
            }
            for (bool h : hit)
                if (!h) {
                    v.fully_faithful = false;
                    v.detail = "not full";
                    break;
                }
        }
    v.essentially_surjective = true;
    for (int y = 0; y < b.n_obj(); ++y) {
        bool found = false;
        for (int c = 0; c < a.n_obj() && !found; ++c)
            found = !b.isos(f.fobj(c), y).empty();
        if (!found) {
            v.essentially_surjective = false;
            v.detail = "object " + std::to_string(y) + " not hit";
            break;
        }
    }
    return v;
}

CatBuilder::CatBuilder(int n_obj, std::string name) : n_obj_(n_obj), name_(std::move(name))
{
    hom_size_.assign(n_obj_, std::vector<int>(n_obj_, 0));
    id_idx_.assign(n_obj_, -1);
}

void CatBuilder::set_hom(int c, int d, int size) { hom_size_[c][d] = size; }
void CatBuilder::set_id(int c, int idx) { id_idx_[c] = idx; }
void CatBuilder::set_comp(std::function<int(int, int, int, int, int)> comp)
{
    comp_ = std::move(comp);
}

FinCatPtr CatBuilder::finish(bool lazy)
{
    return std::make_shared<FinCat>(n_obj_, hom_size_, id_idx_, comp_, name_, lazy);
}

FinCatPtr group_category(const std::vector<std::vector<int>>& mul, const std::string& name)
{
    int n = (int)mul.size();
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (mul[e][a] != a || mul[a][e] != a) { ok = false; break; }
        if (ok) id = e;
    }
    CatBuilder b(1, name);
    b.set_hom(0, 0, n);
    b.set_id(0, id);
    b.set_comp([mul](int, int, int, int g, int f) { return mul[f][g]; });
    return b.finish();
}

FinCatPtr pair_groupoid(int n)
{
    CatBuilder b(n, "pair" + std::to_string(n));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) b.set_hom(c, d, 1);
    for (int c = 0; c < n; ++c) b.set_id(c, 0);
    b.set_comp([](int, int, int, int, int) { return 0; });
    return b.finish();
}

int Strictified::find_obj(int c, int d, int phi) const
{
    for (size_t i = 0; i < obj_parts.size(); ++i)
        if (obj_parts[i] == std::array<int, 3>{c, d, phi}) return (int)i;
    return -1;
}

int Strictified::find_mor(int x, int y, int a, int b) const
{
    // morphisms are indexed by their first component
    if (a < 0 || a >= (int)mor_parts[x][y].size()) return -1;
    return mor_parts[x][y][a] == std::array<int, 2>{a, b} ? a : -1;
}

Strictified strictify(FinCatPtr cptr, const DualityData& dd)
{
    const FinCat& c = *cptr;
    dd.validate(c);
    Strictified out;
    out.base = cptr;
    out.base_duality = dd;

    for (int a = 0; a < c.n_obj(); ++a)
        for (int b = 0; b < c.n_obj(); ++b)
            for (int phi : c.isos(b, dd.dobj(a))) out.obj_parts.push_back({a, b, phi});

    int n = (int)out.obj_parts.size();
    out.mor_parts.assign(n, std::vector<std::vector<std::array<int, 2>>>(n));
    std::vector<std::vector<int>> hom(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [cx, dx, px] = out.obj_parts[x];
            auto [cy, dy, py] = out.obj_parts[y];
            // φ is invertible, so b is determined: b = φ_x^{-1} ∘ D(a) ∘ φ_y
            int pxinv = c.inverse(dx, dd.dobj(cx), px);
            for (int a = 0; a < c.hom_size(cx, cy); ++a) {
                int t = c.compose(dy, dd.dobj(cy), dd.dobj(cx), py, dd.dmor(cx, cy, a));
                int b = c.compose(dy, dd.dobj(cx), dx, t, pxinv);
                out.mor_parts[x][y].push_back({a, b});
            }
            hom[x][y] = (int)out.mor_parts[x][y].size();
        }

    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) {
        auto [cx, dx, px] = out.obj_parts[x];
        ids[x] = out.find_mor(x, x, c.id_mor(cx), c.id_mor(dx));
        if (ids[x] < 0) throw std::runtime_error("strictify: identity missing");
    }
    // local copy for the composition closure; morphisms are indexed by
    // their first component, so composition is index arithmetic in C
    auto parts = out.obj_parts;
    auto mors = out.mor_parts;
    CatBuilder builder(n, "D(" + c.name() + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) builder.set_hom(x, y, hom[x][y]);
    for (int x = 0; x < n; ++x) builder.set_id(x, ids[x]);
    builder.set_comp([parts, mors, cptr](int x, int y, int z, int g, int f) {
        const FinCat& c = *cptr;
        auto [cx, dx, px] = parts[x];
        auto [cy, dy, py] = parts[y];
        auto [cz, dz, pz] = parts[z];
        auto [a1, b1] = mors[x][y][g];
        auto [a2, b2] = mors[y][z][f];
        int a = c.compose(cx, cy, cz, a1, a2);
        (void)b1;
        (void)b2;
        return a;   // mor_parts[x][z][a] has first component a by construction
    });
    size_t total = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) total += (size_t)hom[x][y] * hom[x][y];
    bool lazy = total > 2'000'000;
    out.dcat = builder.finish(lazy);
    if (lazy) {
        // spot-validate what the full validation would cover
        for (int x = 0; x < std::min(n, 4); ++x)
            for (int y = 0; y < std::min(n, 4); ++y)
                for (int g = 0; g < std::min(hom[x][y], 8); ++g) {
                    auto [a1, b1] = out.mor_parts[x][y][g];
                    auto [cx, dx, px2] = out.obj_parts[x];
                    auto [cy, dy, py2] = out.obj_parts[y];
                    int lhs = c.compose(dy, dx, dd.dobj(cx), b1, px2);
                    int rhs = c.compose(dy, dd.dobj(cy), dd.dobj(cx), py2, dd.dmor(cx, cy, a1));
                    if (lhs != rhs) throw std::runtime_error("strictify: morphism condition fails");
                }
    }

    // strict duality: (c,d,φ) -> (d, c, D(φ)∘η_c), (a,b) -> (b,a)
    out.duality.obj.resize(n);
    for (int x = 0; x < n; ++x) {
        auto [cx, dx, px] = out.obj_parts[x];
        // D(φ): D^2 c -> D d, precomposed with η_c: c -> D^2 c
        int dphi = dd.dmor(dx, dd.dobj(cx), px);
        int psi = c.compose(cx, dd.dobj(dd.dobj(cx)), dd.dobj(dx), dd.eta[cx], dphi);
        out.duality.obj[x] = out.find_obj(dx, cx, psi);
        if (out.duality.obj[x] < 0) throw std::runtime_error("strictify: dual object missing");
    }
    out.duality.mor.assign(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (auto [a, b] : out.mor_parts[x][y]) {
                int dm = out.find_mor(out.duality.obj[y], out.duality.obj[x], b, a);
                if (dm < 0) throw std::runtime_error("strictify: dual morphism missing");
                out.duality.mor[x][y].push_back(dm);
            }
    out.duality.validate(*out.dcat);

    // projection to C
    out.projection.src = out.dcat;
    out.projection.dst = cptr;
    out.projection.obj.resize(n);
    out.projection.mor.assign(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x) {
        out.projection.obj[x] = out.obj_parts[x][0];
        for (int y = 0; y < n; ++y)
            for (auto [a, b] : out.mor_parts[x][y]) out.projection.mor[x][y].push_back(a);
    }
    if (!lazy) out.projection.validate();
    return out;
}

SymCat sym_category(FinCatPtr aptr, const StrictDuality& d)
{
    const FinCat& a = *aptr;
    SymCat out;
    for (int x = 0; x < a.n_obj(); ++x)
        for (int k : a.isos(x, d.dobj(x)))
            if (d.dmor(x, d.dobj(x), k) == k) out.obj_parts.push_back({x, k});

    int n = (int)out.obj_parts.size();
    out.mor_back.assign(n, std::vector<std::vector<int>>(n));
    std::vector<std::vector<int>> hom(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [x, k] = out.obj_parts[i];
            auto [y, kp] = out.obj_parts[j];
            for (int f = 0; f < a.hom_size(x, y); ++f) {
                // k = D(f) ∘ k' ∘ f
                int kf = a.compose(x, y, d.dobj(y), f, kp);
                int full = a.compose(x, d.dobj(y), d.dobj(x), kf, d.dmor(x, y, f));
                if (full == k) out.mor_back[i][j].push_back(f);
            }
            hom[i][j] = (int)out.mor_back[i][j].size();
        }
    auto parts = out.obj_parts;
    auto backs = out.mor_back;
    CatBuilder b(n, "sym(" + a.name() + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.set_hom(i, j, hom[i][j]);
    for (int i = 0; i < n; ++i) {
        auto [x, k] = out.obj_parts[i];
        int idi = -1;
        for (size_t t = 0; t < out.mor_back[i][i].size(); ++t)
            if (out.mor_back[i][i][t] == a.id_mor(x)) idi = (int)t;
        if (idi < 0) throw std::runtime_error("sym_category: identity not symmetric");
        b.set_id(i, idi);
    }
    b.set_comp([parts, backs, aptr](int i, int j, int l, int g, int f) {
        const FinCat& a = *aptr;
        int x = parts[i][0], y = parts[j][0], z = parts[l][0];
        int comp = a.compose(x, y, z, backs[i][j][g], backs[j][l][f]);
        for (size_t t = 0; t < backs[i][l].size(); ++t)
            if (backs[i][l][t] == comp) return (int)t;
        throw std::runtime_error("sym_category: composition left sym");
    });
    out.cat = b.finish();
    return out;
}

int SymCat::find_obj(int a, int k) const
{
    for (size_t i = 0; i < obj_parts.size(); ++i)
        if (obj_parts[i] == std::array<int, 2>{a, k}) return (int)i;
    return -1;
}

SymEquivalences sym_equivalences(FinCatPtr aptr, const StrictDuality& d, const Strictified& da)
{
    const FinCat& a = *aptr;
    SymEquivalences out;
    out.sym_a = sym_category(aptr, d);
    out.sym_da = sym_category(da.dcat, da.duality);

    const SymCat& sa = out.sym_a;
    const SymCat& sda = out.sym_da;
    int nda = (int)sda.obj_parts.size();
    int na = (int)sa.obj_parts.size();

    // p : sym 𝒟A -> sym A,  ((c,d,φ), k=(a,a)) -> (c, φ∘a)
    out.p.src = sda.cat;
    out.p.dst = sa.cat;
    out.p.obj.resize(nda);
    out.p.mor.assign(nda, std::vector<std::vector<int>>(nda));
    for (int i = 0; i < nda; ++i) {
        auto [xobj, k] = sda.obj_parts[i];
        auto [c, dvar, phi] = da.obj_parts[xobj];
        auto [ka, kb] = da.mor_parts[xobj][da.duality.obj[xobj]][k];
        if (ka != kb) throw std::runtime_error("sym_equivalences: self-dual map not diagonal");
        int pk = a.compose(c, dvar, d.dobj(c), ka, phi);
        out.p.obj[i] = sa.find_obj(c, pk);
        if (out.p.obj[i] < 0) throw std::runtime_error("sym_equivalences: p image missing");
    }
    for (int i = 0; i < nda; ++i)
        for (int j = 0; j < nda; ++j)
            for (int m = 0; m < sda.cat->hom_size(i, j); ++m) {
                int dm = sda.mor_back[i][j][m];   // 𝒟A morphism (f,g)
                auto [f, g] = da.mor_parts[sda.obj_parts[i][0]][sda.obj_parts[j][0]][dm];
                (void)g;
                // image is f as a morphism of sym A
                int pi = out.p.obj[i], pj = out.p.obj[j];
                int idx = -1;
                for (size_t t = 0; t < sa.mor_back[pi][pj].size(); ++t)
                    if (sa.mor_back[pi][pj][t] == f) idx = (int)t;
                if (idx < 0) throw std::runtime_error("sym_equivalences: p not defined on morphism");
                out.p.mor[i][j].push_back(idx);
            }
    out.p.validate();

    // s : sym A -> sym 𝒟A,  (x, k) -> ((x, Dx, id), (k,k))
    out.s.src = sa.cat;
    out.s.dst = sda.cat;
    out.s.obj.resize(na);
    out.s.mor.assign(na, std::vector<std::vector<int>>(na));
    for (int i = 0; i < na; ++i) {
        auto [x, k] = sa.obj_parts[i];
        int ob = da.find_obj(x, d.dobj(x), a.id_mor(d.dobj(x)));
        if (ob < 0) throw std::runtime_error("sym_equivalences: (x, Dx, id) missing");
        int km = da.find_mor(ob, da.duality.obj[ob], k, k);
        if (km < 0) throw std::runtime_error("sym_equivalences: (k,k) not a 𝒟-morphism");
        out.s.obj[i] = sda.find_obj(ob, km);
        if (out.s.obj[i] < 0) throw std::runtime_error("sym_equivalences: s image missing");
    }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int m = 0; m < sa.cat->hom_size(i, j); ++m) {
                int f = sa.mor_back[i][j][m];
                auto [x, kx] = sa.obj_parts[i];
                auto [y, ky] = sa.obj_parts[j];
                (void)kx;
                (void)ky;
                int df = d.dmor(x, y, f);
                int si = out.s.obj[i], sj = out.s.obj[j];
                int dm = da.find_mor(sda.obj_parts[si][0], sda.obj_parts[sj][0], f, df);
                if (dm < 0) throw std::runtime_error("sym_equivalences: (f, Df) missing");
                int idx = -1;
                for (size_t t = 0; t < sda.mor_back[si][sj].size(); ++t)
                    if (sda.mor_back[si][sj][t] == dm) idx = (int)t;
                if (idx < 0) throw std::runtime_error("sym_equivalences: s morphism not symmetric");
                out.s.mor[i][j].push_back(idx);
            }
    out.s.validate();

    if (!compose_functors(out.p, out.s).is_identity())
        throw std::runtime_error("sym_equivalences: p∘s != id");

    // natural isomorphism id => s∘p with component (id_c, φ^{-1})
    out.sp_to_id.comp.resize(nda);
    Functor sp = compose_functors(out.s, out.p);
    for (int i = 0; i < nda; ++i) {
        auto [xobj, k] = sda.obj_parts[i];
        (void)k;
        auto [c, dvar, phi] = da.obj_parts[xobj];
        int phinv = a.inverse(dvar, d.dobj(c), phi);
        int target = sda.obj_parts[sp.fobj(i)][0];
        int dm = da.find_mor(xobj, target, a.id_mor(c), phinv);
        if (dm < 0) throw std::runtime_error("sym_equivalences: witness not a 𝒟-morphism");
        int idx = -1;
        for (size_t t = 0; t < sda.mor_back[i][sp.fobj(i)].size(); ++t)
            if (sda.mor_back[i][sp.fobj(i)][t] == dm) idx = (int)t;
        if (idx < 0) throw std::runtime_error("sym_equivalences: witness not symmetric");
        out.sp_to_id.comp[i] = idx;
    }
    out.sp_to_id.validate(identity_functor(sda.cat), sp);
    return out;
}

DualizedInverse dualized_inverse(const Functor& f, const StrictDuality& da,
                                 const StrictDuality& db, const Strictified& sa,
                                 const Strictified& sb)
{
    const FinCat& A = *f.src;
    const FinCat& B = *f.dst;
    DualizedInverse out;

    // the input must commute strictly with the dualities
    for (int a = 0; a < A.n_obj(); ++a)
        if (f.fobj(da.dobj(a)) != db.dobj(f.fobj(a)))
            throw std::invalid_argument("dualized_inverse: F does not commute with D on objects");
    for (int a1 = 0; a1 < A.n_obj(); ++a1)
        for (int a2 = 0; a2 < A.n_obj(); ++a2)
            for (int m = 0; m < A.hom_size(a1, a2); ++m)
                if (f.fmor(da.dobj(a2), da.dobj(a1), da.dmor(a1, a2, m)) !=
                    db.dmor(f.fobj(a1), f.fobj(a2), f.fmor(a1, a2, m)))
                    throw std::invalid_argument("dualized_inverse: F does not commute with D");

    // choices: lexicographically first preimage object and isomorphism
    std::vector<int> ao(B.n_obj(), -1), eps(B.n_obj(), -1);
    for (int b = 0; b < B.n_obj(); ++b)
        for (int a = 0; a < A.n_obj() && ao[b] < 0; ++a) {
            auto is = B.isos(f.fobj(a), b);
            if (!is.empty()) {
                ao[b] = a;
                eps[b] = is[0];
            }
        }
    for (int b = 0; b < B.n_obj(); ++b)
        if (ao[b] < 0) throw std::runtime_error("dualized_inverse: not essentially surjective");

    auto preimage = [&](int a1, int a2, int g) {
        for (int m = 0; m < A.hom_size(a1, a2); ++m)
            if (f.fmor(a1, a2, m) == g) return m;
        throw std::runtime_error("dualized_inverse: not full");
    };

    out.f_prime.src = f.dst;
    out.f_prime.dst = f.src;
    out.f_prime.obj = ao;
    out.f_prime.mor.assign(B.n_obj(), std::vector<std::vector<int>>(B.n_obj()));
    for (int b1 = 0; b1 < B.n_obj(); ++b1)
        for (int b2 = 0; b2 < B.n_obj(); ++b2)
            for (int g = 0; g < B.hom_size(b1, b2); ++g) {
                int t = B.compose(f.fobj(ao[b1]), b1, b2, eps[b1], g);
                t = B.compose(f.fobj(ao[b1]), b2, f.fobj(ao[b2]), t,
                              B.inverse(f.fobj(ao[b2]), b2, eps[b2]));
                out.f_prime.mor[b1][b2].push_back(preimage(ao[b1], ao[b2], t));
            }
    out.f_prime.validate();

    // ξ_b = F^{-1}( D_B(ε_b) ∘ ε_{D_B b} ) : F'(D_B b) -> D_A F'(b)
    out.xi.resize(B.n_obj());
    for (int b = 0; b < B.n_obj(); ++b) {
        int dbb = db.dobj(b);
        int m = B.compose(f.fobj(ao[dbb]), dbb, db.dobj(f.fobj(ao[b])), eps[dbb],
                          db.dmor(f.fobj(ao[b]), b, eps[b]));
        // D_B F(a_b) = F(D_A a_b) because F commutes strictly
        out.xi[b] = preimage(ao[dbb], da.dobj(ao[b]), m);
    }

    // 𝒟(F', ξ): (b, d, φ) -> (F'b, F'd, ξ_b ∘ F'(φ)), (f, g) -> (F'f, F'g)
    out.d_inverse.src = sb.dcat;
    out.d_inverse.dst = sa.dcat;
    int nb = sb.dcat->n_obj();
    out.d_inverse.obj.resize(nb);
    out.d_inverse.mor.assign(nb, std::vector<std::vector<int>>(nb));
    for (int x = 0; x < nb; ++x) {
        auto [b, dvar, phi] = sb.obj_parts[x];
        int fp = out.f_prime.fmor(dvar, db.dobj(b), phi);
        int psi = A.compose(ao[dvar], ao[db.dobj(b)], da.dobj(ao[b]), fp, out.xi[b]);
        out.d_inverse.obj[x] = sa.find_obj(ao[b], ao[dvar], psi);
        if (out.d_inverse.obj[x] < 0)
            throw std::runtime_error("dualized_inverse: strictified image missing");
    }
    for (int x = 0; x < nb; ++x)
        for (int y = 0; y < nb; ++y)
            for (auto [ff, gg] : sb.mor_parts[x][y]) {
                auto [bx, dx, px] = sb.obj_parts[x];
                auto [by, dy, py] = sb.obj_parts[y];
                int fa = out.f_prime.fmor(bx, by, ff);
                int ga = out.f_prime.fmor(dy, dx, gg);
                int m = sa.find_mor(out.d_inverse.obj[x], out.d_inverse.obj[y], fa, ga);
                if (m < 0) throw std::runtime_error("dualized_inverse: morphism image missing");
                out.d_inverse.mor[x][y].push_back(m);
            }
    out.d_inverse.validate();

    // strict commutation with the dualities
    for (int x = 0; x < nb; ++x)
        if (out.d_inverse.fobj(sb.duality.obj[x]) != sa.duality.obj[out.d_inverse.fobj(x)])
            throw std::runtime_error("dualized_inverse: object dualities do not commute");
    for (int x = 0; x < nb; ++x)
        for (int y = 0; y < nb; ++y)
            for (int m = 0; m < sb.dcat->hom_size(x, y); ++m) {
                int lhs = out.d_inverse.fmor(sb.duality.obj[y], sb.duality.obj[x],
                                             sb.duality.mor[x][y][m]);
                int rhs = sa.duality.mor[out.d_inverse.fobj(x)][out.d_inverse.fobj(y)]
                                        [out.d_inverse.fmor(x, y, m)];
                if (lhs != rhs)
                    throw std::runtime_error("dualized_inverse: morphism dualities do not commute");
            }
    return out;
}

} // namespace reks
