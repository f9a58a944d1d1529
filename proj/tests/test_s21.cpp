#include "doctest.h"

#include "reks/s21.hpp"

using namespace reks;

TEST_CASE("theta combinatorics")
{
    CHECK(injective_thetas(2).size() == 1);
    CHECK(injective_thetas(3).size() == 4);
    CHECK(injective_thetas(4).size() == 10);
    CHECK(surjections_p2(2).size() == 1);
    CHECK(surjections_p2(3).size() == 3);
    // retractions of θ = (0,1,2) in [3]: need θ0 < i <= θ1 < i+j <= θ2
    int count = 0;
    for (const Theta& rho : surjections_p2(3))
        if (retraction_of(3, rho, {0, 1, 2})) ++count;
    CHECK(count == 1);
}

TEST_CASE("S^{2,1}_2 of the F2 skeleton recovers the objects of the category")
{
    WallRing f2 = WallRing::preset("F2");
    ModCatSkeleton sk = mod_cat_skeleton(f2, 2);
    S21Ctx ctx = skeleton_ctx(sk);
    std::vector<S21Obj> objs = s21_enumerate(ctx, 2);
    // single θ, no exactness constraints beyond degenerate ψ's: one object
    // per object of the category
    CHECK(objs.size() == 3);
    for (const S21Obj& x : objs) CHECK(s21_valid(ctx, x));
}

TEST_CASE("p <= 1 levels carry only the zero object")
{
    WallRing f2 = WallRing::preset("F2");
    ModCatSkeleton sk = mod_cat_skeleton(f2, 2);
    S21Ctx ctx = skeleton_ctx(sk);
    CHECK(s21_enumerate(ctx, 1).size() == 1);
    CHECK(s21_enumerate(ctx, 0).size() == 1);
}

TEST_CASE("S^{2,1}_3 over F2 rank 1: enumeration matches the splitting oracle")
{
    WallRing f2 = WallRing::preset("F2");
    ModCatSkeleton sk = mod_cat_skeleton(f2, 1);
    S21Ctx ctx = skeleton_ctx(sk);
    std::vector<S21Obj> objs = s21_enumerate(ctx, 3);
    // rank vectors (r1, r2, r3) with vertex sums <= 1: each θ contains 1-2
    // of the constituents; admissible vectors: 000, 100, 010, 001 and the
    // exact diagram (1,1,1,1) needs... count oracle objects instead:
    std::vector<std::vector<int>> rvs = splitting_oracle_ranks(sk, 3);
    // every oracle object passes the exactness checks
    for (const auto& rv : rvs) {
        S21Obj o = splitting_oracle_object(sk, 3, rv);
        CHECK(s21_valid(ctx, o));
    }
    // every enumerated object is isomorphic to an oracle object, and the
    // constituent ranks identify which one
    size_t matched = 0;
    for (const S21Obj& x : objs) {
        std::vector<int> cr = constituent_ranks(ctx, sk, x);
        REQUIRE(!cr.empty());
        S21Obj o = splitting_oracle_object(sk, 3, cr);
        if (s21_iso_exists(ctx, x, o)) ++matched;
    }
    CHECK(matched == objs.size());
    // oracle rank-vectors biject with iso classes: distinct vectors give
    // non-isomorphic objects
    for (size_t i = 0; i < rvs.size(); ++i)
        for (size_t j = i + 1; j < rvs.size(); ++j) {
            S21Obj a = splitting_oracle_object(sk, 3, rvs[i]);
            S21Obj b = splitting_oracle_object(sk, 3, rvs[j]);
            CHECK(s21_isos(ctx, a, b).empty());
        }
}

TEST_CASE("simplicial restriction of S21 objects stays valid")
{
    WallRing f2 = WallRing::preset("F2");
    ModCatSkeleton sk = mod_cat_skeleton(f2, 1);
    S21Ctx ctx = skeleton_ctx(sk);
    for (const S21Obj& x : s21_enumerate(ctx, 3)) {
        // faces [2] -> [3]
        for (int drop = 0; drop <= 3; ++drop) {
            std::vector<int> alpha;
            for (int t = 0; t <= 3; ++t)
                if (t != drop) alpha.push_back(t);
            S21Obj y = s21_restrict(ctx, x, alpha);
            CHECK(s21_valid(ctx, y));
        }
        // a degeneracy [4] -> [3]
        S21Obj z = s21_restrict(ctx, x, {0, 1, 1, 2, 3});
        CHECK(s21_valid(ctx, z));
    }
}

TEST_CASE("duality on S21 objects is a strict involution")
{
    WallRing f2 = WallRing::preset("F2");
    ModCatSkeleton sk = mod_cat_skeleton(f2, 1);
    Strictified ds = strictify(sk.cat, sk.duality);
    S21Ctx ctx = strictified_ctx(ds, sk);
    std::vector<S21Obj> objs = s21_enumerate(ctx, 3);
    for (const S21Obj& x : objs) {
        S21Obj dx = s21_duality(ctx, x);
        CHECK(s21_valid(ctx, dx));
        CHECK(s21_duality(ctx, dx) == x);
    }
    // p = 2: duality agrees with D of the category under S^{2,1}_2 C = C
    for (const S21Obj& x : s21_enumerate(ctx, 2)) {
        S21Obj dx = s21_duality(ctx, x);
        CHECK(dx.vert[0] == ds.duality.obj[x.vert[0]]);
    }
}

TEST_CASE("extend_bimodule at p = 2 is the bimodule itself; p = 3 two-route check")
{
    WallRing f2 = WallRing::preset("F2");
    ModCatSkeleton sk = mod_cat_skeleton(f2, 1);
    WallBimodule m = WallBimodule::preset(f2, "A");
    HmBimodule hm = hm_bimodule(sk, m);
    Strictified ds = strictify(sk.cat, sk.duality);
    StrictifiedBimodule dhm = strictify_bimodule(ds, hm.bimod, hm.J);
    S21Ctx ctx = strictified_ctx(ds, sk);

    auto objs2 = s21_enumerate(ctx, 2);
    for (const S21Obj& x : objs2)
        for (const S21Obj& y : objs2) {
            auto fams = extend_bimodule(ctx, dhm.bimod, x, y);
            CHECK(fams.size() == (size_t)dhm.bimod.size(x.vert[0], y.vert[0]));
        }

    // p = 3: compatible families counted two ways: pruned product search
    // against a direct filter of the full product
    auto objs3 = s21_enumerate(ctx, 3);
    REQUIRE(objs3.size() >= 2);
    size_t checked = 0;
    for (size_t xi = 0; xi < objs3.size() && checked < 6; ++xi)
        for (size_t yi = 0; yi < objs3.size() && checked < 6; ++yi) {
            const S21Obj& x = objs3[xi];
            const S21Obj& y = objs3[yi];
            auto fams = extend_bimodule(ctx, dhm.bimod, x, y);
            // independent route: filter the full product by all constraints
            std::vector<Theta> ts = injective_thetas(3);
            size_t direct = 0;
            std::vector<int> cur(ts.size(), 0);
            std::function<void(size_t)> rec = [&](size_t t) {
                if (t == ts.size()) {
                    for (size_t s = 0; s < ts.size(); ++s)
                        for (size_t u = 0; u < ts.size(); ++u) {
                            if (!theta_leq(ts[s], ts[u])) continue;
                            int lhs = dhm.bimod.pull(x.vert[u], y.vert[u], x.vert[s], x.map[s][u],
                                                     cur[u]);
                            int rhs = dhm.bimod.push(x.vert[s], y.vert[s], y.vert[u], y.map[s][u],
                                                     cur[s]);
                            if (lhs != rhs) return;
                        }
                    ++direct;
                    return;
                }
                for (int mm = 0; mm < dhm.bimod.size(x.vert[t], y.vert[t]); ++mm) {
                    cur[t] = mm;
                    rec(t + 1);
                }
            };
            rec(0);
            CHECK(fams.size() == direct);
            // duality restriction lands in the compatible subgroup (asserted
            // inside extend_bimodule_J)
            for (const auto& fam : fams) extend_bimodule_J(ctx, dhm.bimod, dhm.J, x, y, fam);
            ++checked;
        }
}

TEST_CASE("Prop 3.20 at p = 2 for (F2, F2)")
{
    WallRing f2 = WallRing::preset("F2");
    WallBimodule m = WallBimodule::preset(f2, "A");
    SplitPAReport rep = verify_split_pa(f2, m, 2, 2);
    CHECK(rep.ok);
    if (!rep.ok) MESSAGE(rep.detail);
    MESSAGE("p=2 rank 2: objects A/B = ", rep.objects_a, "/", rep.objects_b,
            ", hom pairs = ", rep.hom_pairs_checked);
}

TEST_CASE("Prop 3.20 with the zero bimodule is identity-like")
{
    WallRing f2 = WallRing::preset("F2");
    // M = 0: use the zero subgroup of A as a bimodule
    WallBimodule zero;
    zero.n = 1;
    zero.add = {{0}};
    zero.zero = 0;
    zero.neg = {0};
    zero.left.assign(2, {0});
    zero.right = {{0, 0}};
    zero.h = {0};
    SplitPAReport rep = verify_split_pa(f2, zero, 2, 1);
    CHECK(rep.ok);
}
