#include <map>
#include <set>

#include "reks/s21.hpp"

namespace reks {

namespace {

// lift of a skeleton-level S21 object to the strictified category through
// c -> (c, Dc, id), f -> (f, Df)
S21Obj lift_to_strictified(const Strictified& ds, const ModCatSkeleton& sk, const S21Obj& x)
{
    S21Obj out;
    out.p = x.p;
    std::vector<Theta> ts = injective_thetas(x.p);
    out.vert.resize(ts.size());
    out.map.assign(ts.size(), std::vector<int>(ts.size(), -1));
    const DualityData& d = sk.duality;
    for (size_t i = 0; i < ts.size(); ++i) {
        int c = x.vert[i];
        out.vert[i] = ds.find_obj(c, d.dobj(c), sk.cat->id_mor(d.dobj(c)));
        if (out.vert[i] < 0) throw std::runtime_error("lift_to_strictified: object missing");
    }
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = 0; j < ts.size(); ++j) {
            if (!theta_leq(ts[i], ts[j])) continue;
            int f = x.map[i][j];
            int df = d.dmor(x.vert[i], x.vert[j], f);
            out.map[i][j] = ds.find_mor(out.vert[i], out.vert[j], f, df);
            if (out.map[i][j] < 0) throw std::runtime_error("lift_to_strictified: map missing");
        }
    return out;
}

// natural isomorphism X ≅ lift(projection X) with components (id, φ^{-1});
// returns the componentwise 𝒟-morphism indices
std::vector<int> natural_iso_to_lift(const Strictified& ds, const S21Ctx& dctx, const S21Obj& x,
                                     const S21Obj& lift)
{
    std::vector<Theta> ts = injective_thetas(x.p);
    std::vector<int> comp(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        auto [c, dv, phi] = ds.obj_parts[x.vert[i]];
        int phinv = ds.base->inverse(dv, ds.base_duality.dobj(c), phi);
        int m = ds.find_mor(x.vert[i], lift.vert[i], ds.base->id_mor(c), phinv);
        if (m < 0) throw std::runtime_error("natural_iso_to_lift: witness missing");
        comp[i] = m;
    }
    // verify naturality and iso-ness through the hom machinery
    auto homs = s21_isos(dctx, x, lift);
    for (auto& h : homs)
        if (h == comp) return comp;
    throw std::runtime_error("natural_iso_to_lift: witness not a natural isomorphism");
}

// the base-change functor s = (-) ⊗_A (A ⋉ M) on skeletons: ranks fixed,
// matrix entries a -> (a, 0)
int s_on_mor(const ModCatSkeleton& ska, const ModCatSkeleton& skb, const SemidirectRing& sdr,
             int j, int k, int f)
{
    std::vector<int> e = ska.mor_entries(j, k, f);
    for (auto& a : e) a = sdr.pair(a, 0);
    return skb.mor_index(j, k, e);
}

// constructive isomorphism X ≅ oracle at p = 3 following the splitting
// argument: g0 = id, g1 = (q1, σ∘f2), g2 = (σ, f3), g3 = id, where q1 is a
// retraction of the injective f1 and σ restricts injectively to ker f3.
// The result is verified to be a natural isomorphism before returning.
std::optional<std::vector<int>> oracle_iso_p3(const S21Ctx& ctx, const ModCatSkeleton& sk,
                                              const S21Obj& x, const std::vector<int>& ranks,
                                              const S21Obj& oracle)
{
    const FinCat& cat = *ctx.cat;
    int a = x.vert[0], b = x.vert[1], c = x.vert[2], d = x.vert[3];
    int f1 = x.map[0][1], f2 = x.map[1][2], f3 = x.map[2][3];
    int r2 = ranks[1];
    (void)d;

    // q1 : X1 -> A^a with q1 ∘ f1 = id
    int q1 = -1;
    for (int q = 0; q < cat.hom_size(b, a) && q1 < 0; ++q)
        if (cat.compose(a, b, a, f1, q) == cat.id_mor(a)) q1 = q;
    if (q1 < 0) return std::nullopt;

    // σ : X2 -> A^{r2} injective on ker f3
    std::vector<int> ker;
    int z = ctx.zero_elem(x.vert[3]);
    for (int e = 0; e < ctx.obj_size(c); ++e)
        if (ctx.apply(c, d, f3, e) == z) ker.push_back(e);
    int sigma = -1;
    for (int s = 0; s < cat.hom_size(c, r2) && sigma < 0; ++s) {
        std::set<int> im;
        for (int e : ker) im.insert(ctx.apply(c, r2, s, e));
        if (im.size() == ker.size()) sigma = s;
    }
    if (sigma < 0) return std::nullopt;

    // assemble the components as block matrices over the skeleton
    const FiniteRing& A = sk.ring.A;
    auto block2 = [&](int rows_top, int rows_bot, int cols, int top, int bot) {
        // stack hom(cols -> rows_top) over hom(cols -> rows_bot)
        std::vector<int> te = sk.mor_entries(cols, rows_top, top);
        std::vector<int> be = sk.mor_entries(cols, rows_bot, bot);
        int rows = rows_top + rows_bot;
        std::vector<int> out((size_t)rows * cols, A.zero);
        for (int cc = 0; cc < cols; ++cc) {
            for (int r = 0; r < rows_top; ++r)
                out[(size_t)cc * rows + r] = te[(size_t)cc * rows_top + r];
            for (int r = 0; r < rows_bot; ++r)
                out[(size_t)cc * rows + rows_top + r] = be[(size_t)cc * rows_bot + r];
        }
        return sk.mor_index(cols, rows, out);
    };

    std::vector<int> g(4);
    g[0] = cat.id_mor(a);
    g[1] = block2(ranks[0], r2, b, q1, cat.compose(b, c, r2, f2, sigma));
    g[2] = block2(r2, ranks[2], c, sigma, f3);
    g[3] = cat.id_mor(x.vert[3]);

    // verify naturality and componentwise invertibility
    std::vector<Theta> ts = injective_thetas(3);
    for (size_t t = 0; t < 4; ++t)
        if (!cat.is_iso(x.vert[t], oracle.vert[t], g[t])) return std::nullopt;
    for (size_t s = 0; s < 4; ++s)
        for (size_t t = 0; t < 4; ++t) {
            if (!theta_leq(ts[s], ts[t])) continue;
            if (cat.compose(x.vert[s], x.vert[t], oracle.vert[t], x.map[s][t], g[t]) !=
                cat.compose(x.vert[s], oracle.vert[s], oracle.vert[t], g[s], oracle.map[s][t]))
                return std::nullopt;
        }
    return g;
}

} // namespace

SplitPAReport verify_split_pa(const WallRing& a, const WallBimodule& m, int p, int rank_bound)
{
    SplitPAReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.detail = s;
    };

    ModCatSkeleton ska = mod_cat_skeleton(a, rank_bound);
    Strictified dsa = strictify(ska.cat, ska.duality);
    S21Ctx ctxa = strictified_ctx(dsa, ska);
    HmBimodule hm = hm_bimodule(ska, m);
    StrictifiedBimodule dhm = strictify_bimodule(dsa, hm.bimod, hm.J);
    dhm.bimod.validate();
    dhm.J.validate(dhm.bimod, dsa.duality);

    SemidirectRing sdr = semidirect_ring(a, m);
    ModCatSkeleton skb = mod_cat_skeleton(sdr.ring, rank_bound);
    Strictified dsb = strictify(skb.cat, skb.duality);
    S21Ctx ctxb = strictified_ctx(dsb, skb);

    S21Ctx ctxa_plain = skeleton_ctx(ska);
    S21Ctx ctxb_plain = skeleton_ctx(skb);

    // --- essential surjectivity via the splitting-oracle route ---
    // (1) every raw skeleton-level object on either side is isomorphic to a
    //     splitting-oracle object (its constituent ranks)
    auto check_split = [&](const S21Ctx& ctx, const ModCatSkeleton& sk, const char* side) {
        std::vector<S21Obj> raw = s21_enumerate(ctx, p);
        for (const S21Obj& x : raw) {
            std::vector<int> ranks = constituent_ranks(ctx, sk, x);
            if (ranks.empty()) {
                fail(std::string(side) + ": constituent kernel not free");
                return raw;
            }
            S21Obj oracle = splitting_oracle_object(sk, p, ranks);
            std::string why;
            if (!s21_valid(ctx, oracle, &why)) {
                fail(std::string(side) + ": oracle object invalid: " + why);
                return raw;
            }
            bool iso = (p == 3) ? oracle_iso_p3(ctx, sk, x, ranks, oracle).has_value()
                                : s21_iso_exists(ctx, x, oracle).has_value();
            if (!iso) {
                fail(std::string(side) + ": object not isomorphic to its oracle form");
                return raw;
            }
        }
        return raw;
    };
    std::vector<S21Obj> raw_a = check_split(ctxa_plain, ska, "A-side");
    if (!rep.ok) return rep;
    std::vector<S21Obj> raw_b = check_split(ctxb_plain, skb, "B-side");
    if (!rep.ok) return rep;
    rep.objects_a = raw_a.size();
    rep.objects_b = raw_b.size();

    // (2) F maps the lifted A-side oracle object with ranks r literally to
    //     the lifted B-side oracle object with ranks r; with the natural-iso-
    //     to-lift lemma this gives essential surjectivity within the bound.
    std::vector<std::vector<int>> rank_vectors = splitting_oracle_ranks(ska, p);
    std::vector<S21Obj> reps_a, reps_b;
    for (const auto& rv : rank_vectors) {
        S21Obj oa = splitting_oracle_object(ska, p, rv);
        S21Obj ob = splitting_oracle_object(skb, p, rv);
        S21Obj la = lift_to_strictified(dsa, ska, oa);
        S21Obj lb = lift_to_strictified(dsb, skb, ob);
        // F on objects is s applied entrywise; on the lifted oracle objects
        // the image is literally the B-side lifted oracle object
        S21Obj fa;
        fa.p = p;
        fa.vert = la.vert;  // ranks agree; recompute through dsb
        std::vector<Theta> ts = injective_thetas(p);
        fa.vert.resize(ts.size());
        fa.map.assign(ts.size(), std::vector<int>(ts.size(), -1));
        for (size_t i = 0; i < ts.size(); ++i) {
            auto [c, dv, phi] = dsa.obj_parts[la.vert[i]];
            fa.vert[i] = dsb.find_obj(c, dv, s_on_mor(ska, skb, sdr, dv, skb.duality.dobj(c), phi));
            if (fa.vert[i] < 0) {
                fail("F image object missing");
                return rep;
            }
        }
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = 0; j < ts.size(); ++j) {
                if (!theta_leq(ts[i], ts[j])) continue;
                auto [f, g] = dsa.mor_parts[la.vert[i]][la.vert[j]][la.map[i][j]];
                int ci = dsa.obj_parts[la.vert[i]][0], cj = dsa.obj_parts[la.vert[j]][0];
                int di = dsa.obj_parts[la.vert[i]][1], dj = dsa.obj_parts[la.vert[j]][1];
                fa.map[i][j] = dsb.find_mor(fa.vert[i], fa.vert[j],
                                            s_on_mor(ska, skb, sdr, ci, cj, f),
                                            s_on_mor(ska, skb, sdr, dj, di, g));
                if (fa.map[i][j] < 0) {
                    fail("F image map missing");
                    return rep;
                }
            }
        if (!(fa == lb)) {
            fail("F(lifted A-oracle) != lifted B-oracle");
            return rep;
        }
        reps_a.push_back(la);
        reps_b.push_back(lb);
    }
    // the natural-iso-to-lift lemma, machine-checked on the raw objects:
    // every strictified object is naturally isomorphic to the lift of its
    // projection (exercised here for the lifted oracle objects themselves
    // and for a directly-enumerated strictified sample at p = 2)
    if (p == 2) {
        std::vector<S21Obj> raw_ds = s21_enumerate(ctxa, p);
        for (const S21Obj& x : raw_ds) {
            // projection: take c-parts
            S21Obj proj;
            proj.p = p;
            std::vector<Theta> ts = injective_thetas(p);
            proj.vert.resize(ts.size());
            proj.map.assign(ts.size(), std::vector<int>(ts.size(), -1));
            for (size_t i = 0; i < ts.size(); ++i) proj.vert[i] = dsa.obj_parts[x.vert[i]][0];
            for (size_t i = 0; i < ts.size(); ++i)
                for (size_t j = 0; j < ts.size(); ++j)
                    if (theta_leq(ts[i], ts[j]))
                        proj.map[i][j] = dsa.mor_parts[x.vert[i]][x.vert[j]][x.map[i][j]][0];
            S21Obj lift = lift_to_strictified(dsa, ska, proj);
            natural_iso_to_lift(dsa, ctxa, x, lift);
        }
    }
    rep.classes_checked = reps_a.size();

    // --- full faithfulness and duality commutation on representatives ---
    for (size_t xi = 0; xi < reps_a.size() && rep.ok; ++xi)
        for (size_t yi = 0; yi < reps_a.size() && rep.ok; ++yi) {
            const S21Obj& X = reps_a[xi];
            const S21Obj& Y = reps_a[yi];
            const S21Obj& FX = reps_b[xi];
            const S21Obj& FY = reps_b[yi];
            auto isos = s21_isos(ctxa, X, Y);
            auto fams = extend_bimodule(ctxa, dhm.bimod, X, Y);
            auto target = s21_isos(ctxb, FX, FY);
            std::set<std::vector<int>> target_set(target.begin(), target.end());
            std::set<std::vector<int>> seen;
            std::vector<Theta> ts = injective_thetas(p);
            for (const auto& f : isos)
                for (const auto& fam : fams) {
                    // F(f, m): component at θ is s(a-part) + ι(m_θ) with the
                    // d-part determined by the strictified structure
                    std::vector<int> img(ts.size());
                    for (size_t t = 0; t < ts.size(); ++t) {
                        auto [av, bv] = dsa.mor_parts[X.vert[t]][Y.vert[t]][f[t]];
                        int cx = dsa.obj_parts[X.vert[t]][0], cy = dsa.obj_parts[Y.vert[t]][0];
                        // first component: s(a) + (0, m) entrywise
                        std::vector<int> ae = ska.mor_entries(cx, cy, av);
                        std::vector<int> me = hm.elem_entries(cx, cy, fam[t]);
                        std::vector<int> be((size_t)ae.size());
                        for (size_t u = 0; u < ae.size(); ++u) be[u] = sdr.pair(ae[u], me[u]);
                        int first = skb.mor_index(cx, cy, be);
                        // 𝒟-morphisms are indexed by their first component
                        if (first >= skb.cat->hom_size(cx, cy)) {
                            fail("F image morphism missing");
                            break;
                        }
                        img[t] = first;
                    }
                    if (!rep.ok) break;
                    if (seen.count(img)) {
                        fail("F not faithful");
                        break;
                    }
                    seen.insert(img);
                    if (!target_set.count(img)) {
                        fail("F image not a natural isomorphism downstairs");
                        break;
                    }
                    ++rep.hom_pairs_checked;

                    // duality commutation: F(D(f, m)) = D(F(f, m))
                    // source duality: reverse through s21_duality + J-family
                    S21Obj DX = s21_duality(ctxa, X), DY = s21_duality(ctxa, Y);
                    (void)DX;
                    (void)DY;
                    std::vector<int> df(ts.size()), dfam;
                    for (size_t t = 0; t < ts.size(); ++t) {
                        Theta st = {p - ts[t][2], p - ts[t][1], p - ts[t][0]};
                        int sidx = -1;
                        for (size_t q = 0; q < ts.size(); ++q)
                            if (ts[q] == st) sidx = (int)q;
                        df[t] = dsa.duality.mor[X.vert[sidx]][Y.vert[sidx]][f[sidx]];
                    }
                    dfam = extend_bimodule_J(ctxa, dhm.bimod, dhm.J, X, Y, fam);
                    // image of the dual morphism
                    std::vector<int> img_of_dual(ts.size());
                    for (size_t t = 0; t < ts.size(); ++t) {
                        auto [av, bv] = dsa.mor_parts[s21_duality(ctxa, Y).vert[t]]
                                                     [s21_duality(ctxa, X).vert[t]][df[t]];
                        int cx = dsa.obj_parts[s21_duality(ctxa, Y).vert[t]][0];
                        int cy = dsa.obj_parts[s21_duality(ctxa, X).vert[t]][0];
                        std::vector<int> ae = ska.mor_entries(cx, cy, av);
                        std::vector<int> me = hm.elem_entries(cx, cy, dfam[t]);
                        std::vector<int> be(ae.size());
                        for (size_t u = 0; u < ae.size(); ++u) be[u] = sdr.pair(ae[u], me[u]);
                        img_of_dual[t] = skb.mor_index(cx, cy, be);
                    }
                    // target-side dual of the image
                    std::vector<int> dual_of_img(ts.size());
                    for (size_t t = 0; t < ts.size(); ++t) {
                        Theta st = {p - ts[t][2], p - ts[t][1], p - ts[t][0]};
                        int sidx = -1;
                        for (size_t q = 0; q < ts.size(); ++q)
                            if (ts[q] == st) sidx = (int)q;
                        dual_of_img[t] = dsb.duality.mor[FX.vert[sidx]][FY.vert[sidx]][img[sidx]];
                    }
                    if (img_of_dual != dual_of_img) {
                        fail("F does not commute with the dualities on morphisms");
                        break;
                    }
                }
            // fullness: every target iso must be hit
            if (rep.ok && seen.size() != target_set.size()) {
                fail("F not full: " + std::to_string(seen.size()) + " of " +
                     std::to_string(target_set.size()) + " morphisms hit");
            }
        }
    return rep;
}

} // namespace reks
