#include "doctest.h"

#include "reks/bimodule.hpp"
#include "reks/category.hpp"
#include "reks/swallow.hpp"

using namespace reks;

namespace {

// one-object category with morphisms {1, t}, t^2 = 1, trivial duality
FinCatPtr z2_category()
{
    return group_category({{0, 1}, {1, 0}}, "BZ2");
}

StrictDuality trivial_duality(const FinCat& c)
{
    StrictDuality d;
    d.obj.resize(c.n_obj());
    d.mor.assign(c.n_obj(), std::vector<std::vector<int>>(c.n_obj()));
    for (int a = 0; a < c.n_obj(); ++a) {
        d.obj[a] = a;
        for (int b = 0; b < c.n_obj(); ++b)
            for (int f = 0; f < c.hom_size(a, b); ++f) d.mor[a][b].push_back(f);
    }
    d.validate(c);
    return d;
}

StrictDuality inversion_duality(const FinCat& c)
{
    StrictDuality d;
    d.obj.resize(c.n_obj());
    d.mor.assign(c.n_obj(), std::vector<std::vector<int>>(c.n_obj()));
    for (int a = 0; a < c.n_obj(); ++a) {
        d.obj[a] = a;
        for (int b = 0; b < c.n_obj(); ++b)
            for (int f = 0; f < c.hom_size(a, b); ++f)
                d.mor[a][b].push_back(c.inverse(a, b, f));
    }
    d.validate(c);
    return d;
}

StrictDuality swap_duality_pair(const FinCat& c)
{
    // pair groupoid on 2 objects, duality swapping them
    StrictDuality d;
    d.obj = {1, 0};
    d.mor.assign(2, std::vector<std::vector<int>>(2));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int f = 0; f < c.hom_size(a, b); ++f) d.mor[a][b].push_back(0);
    d.validate(c);
    return d;
}

// rank-one bimodule: M(c,d) = Z/q with transparent actions, J = identity
Bimodule rank_one_bimodule(FinCatPtr c, int q)
{
    int n = c->n_obj();
    std::vector<std::vector<int>> sizes(n, std::vector<int>(n, q));
    return Bimodule(
        c, sizes, [q](int, int, int m1, int m2) { return (m1 + m2) % q; },
        [](int, int) { return 0; }, [q](int, int, int m) { return (q - m) % q; },
        [](int, int, int, int, int m) { return m; },
        [](int, int, int, int, int m) { return m; });
}

} // namespace

TEST_CASE("strictify the one-object Z/2 category with trivial duality")
{
    FinCatPtr c = z2_category();
    DualityData d = DualityData::from_strict(*c, trivial_duality(*c));
    Strictified s = strictify(c, d);
    // objects: isos φ: * ≅ * — both morphisms are isos
    CHECK(s.dcat->n_obj() == 2);
    // duality squares to the identity (validated at construction); check the
    // projection is an equivalence
    EquivalenceVerdict v = check_equivalence(s.projection);
    CHECK(v.ok());
    // strict input: projection hits every object via (c, Dc, id)
    CHECK(s.find_obj(0, 0, c->id_mor(0)) >= 0);
}

TEST_CASE("strictify with the inversion duality on a noncommutative group")
{
    FinCatPtr c = group_category(
        // S3 multiplication table
        [] {
            std::vector<std::vector<int>> m(6, std::vector<int>(6));
            std::vector<std::array<int, 3>> perms = {
                {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
            auto comp = [&](int a, int b) {
                std::array<int, 3> r{};
                for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
                for (size_t k = 0; k < perms.size(); ++k)
                    if (perms[k] == r) return (int)k;
                return -1;
            };
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b) m[a][b] = comp(a, b);
            return m;
        }(),
        "BS3");
    StrictDuality d = inversion_duality(*c);
    DualityData dd = DualityData::from_strict(*c, d);
    Strictified s = strictify(c, dd);
    CHECK(check_equivalence(s.projection).ok());
    CHECK(s.dcat->n_obj() == 6);
}

TEST_CASE("sym of the trivial category is trivial; sym of BZ2 has two objects")
{
    FinCatPtr triv = pair_groupoid(1);
    SymCat st = sym_category(triv, trivial_duality(*triv));
    CHECK(st.cat->n_obj() == 1);

    FinCatPtr c = z2_category();
    SymCat s = sym_category(c, trivial_duality(*c));
    // objects: k ∈ {1, t} with D(k) = k — both qualify
    CHECK(s.cat->n_obj() == 2);
    // hom((*,1),(*,1)) = {f : f·1·f = 1} = {t? 1?}: f with f^2 = 1 — both
    CHECK(s.cat->hom_size(s.find_obj(0, 0), s.find_obj(0, 0)) == 2);
}

TEST_CASE("sym equivalences: p∘s = id and s∘p ≅ id with verified witness")
{
    for (int which = 0; which < 3; ++which) {
        FinCatPtr c;
        StrictDuality d;
        if (which == 0) {
            c = pair_groupoid(1);
            d = trivial_duality(*c);
        } else if (which == 1) {
            c = z2_category();
            d = trivial_duality(*c);
        } else {
            c = pair_groupoid(2);
            d = swap_duality_pair(*c);
        }
        Strictified da = strictify(c, DualityData::from_strict(*c, d));
        SymEquivalences se = sym_equivalences(c, d, da);
        CHECK(compose_functors(se.p, se.s).is_identity());
        CHECK(check_equivalence(se.p).ok());
        CHECK(check_equivalence(se.s).ok());
        // the witness was validated inside; re-validate here for visibility
        se.sp_to_id.validate(identity_functor(se.sym_da.cat), compose_functors(se.s, se.p));
    }
}

TEST_CASE("dualized inverse of a duality-commuting equivalence")
{
    for (int which = 0; which < 3; ++which) {
        FinCatPtr c;
        StrictDuality d;
        if (which == 0) {
            c = pair_groupoid(1);
            d = trivial_duality(*c);
        } else if (which == 1) {
            c = z2_category();
            d = trivial_duality(*c);
        } else {
            c = pair_groupoid(2);
            d = swap_duality_pair(*c);
        }
        Strictified sc = strictify(c, DualityData::from_strict(*c, d));
        // canonical equivalence A -> 𝒟A, a -> (D a, a, id)
        Functor f;
        f.src = c;
        f.dst = sc.dcat;
        f.obj.resize(c->n_obj());
        f.mor.assign(c->n_obj(), std::vector<std::vector<int>>(c->n_obj()));
        for (int a = 0; a < c->n_obj(); ++a) {
            f.obj[a] = sc.find_obj(d.dobj(a), a, c->id_mor(d.dobj(a)));
            REQUIRE(f.obj[a] >= 0);
        }
        for (int a = 0; a < c->n_obj(); ++a)
            for (int b = 0; b < c->n_obj(); ++b)
                for (int m = 0; m < c->hom_size(a, b); ++m) {
                    int fm = sc.find_mor(f.obj[a], f.obj[b], d.dmor(a, b, m), m);
                    REQUIRE(fm >= 0);
                    f.mor[a][b].push_back(fm);
                }
        f.validate();
        CHECK(check_equivalence(f).ok());
        Strictified sda = strictify(sc.dcat, DualityData::from_strict(*sc.dcat, sc.duality));
        // 𝒟(F', ξ) is built and strict commutation is machine-checked inside
        DualizedInverse di = dualized_inverse(f, d, sc.duality, sc, sda);
        CHECK(check_equivalence(di.d_inverse).ok());
    }
}

TEST_CASE("semidirect product composition law and duality")
{
    FinCatPtr c = pair_groupoid(2);
    Bimodule m = rank_one_bimodule(c, 4);
    m.validate();
    SemidirectCat sd = semidirect_cat(m);
    // (id,m)∘(id,n) = (id, m+n)
    int a = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int lhs = sd.cat->compose(a, a, a, sd.pair_index(a, a, c->id_mor(a), y),
                                      sd.pair_index(a, a, c->id_mor(a), x));
            CHECK(lhs == sd.pair_index(a, a, c->id_mor(a), (x + y) % 4));
        }
    // (f,0)∘(g,0) = (f∘g, 0)
    for (int f = 0; f < c->hom_size(1, 0); ++f)
        for (int g = 0; g < c->hom_size(0, 1); ++g) {
            int lhs = sd.cat->compose(0, 1, 0, sd.pair_index(0, 1, g, 0),
                                      sd.pair_index(1, 0, f, 0));
            CHECK(lhs == sd.pair_index(0, 0, c->compose(0, 1, 0, g, f), 0));
        }
    // M = 0 gives C back
    Bimodule z = Bimodule::zero_bimodule(c);
    SemidirectCat sdz = semidirect_cat(z);
    CHECK(sdz.cat->total_morphisms() == c->total_morphisms());

    StrictDuality d = swap_duality_pair(*c);
    BimoduleDuality j{[](int, int, int mm) { return mm; }};
    j.validate(m, d);
    StrictDuality dj = semidirect_duality(sd, d, j);
    dj.validate(*sd.cat);
}

TEST_CASE("coproduct groupoid embedding")
{
    FinCatPtr c = pair_groupoid(2);
    Bimodule m = rank_one_bimodule(c, 2);
    StrictDuality d = swap_duality_pair(*c);
    BimoduleDuality j{[](int, int, int mm) { return mm; }};
    CoprodGroupoid cg = coprod_groupoid(m, d, j);
    SemidirectCat sd = semidirect_cat(m);
    IsoCat iso = iso_subcategory(sd.cat);
    cg.validate_embedding(sd, iso);
    // M = 0 gives the discrete category
    Bimodule z = Bimodule::zero_bimodule(c);
    CoprodGroupoid cgz = coprod_groupoid(z, d, j);
    CHECK(cgz.cat->total_morphisms() == 2);
}

TEST_CASE("classify split extension: identity case and semidirect case")
{
    FinCatPtr c = pair_groupoid(2);
    // B = C, p = s = id: ker = 0, F = identity-like equivalence
    AbEnrichment enr{[](int, int, int, int) { return 0; }, [](int, int) { return 0; },
                     [](int, int, int) { return 0; }};
    NatIso u;
    u.comp = {0, 0};
    SplitExtension se = classify_split_extension(identity_functor(c), identity_functor(c), u, enr);
    CHECK(se.equivalence);
    CHECK(se.comparison.obj == std::vector<int>{0, 1});

    // ring case: B = F2[x]/x^2 as a one-object Ab-category, C = F2,
    // p = reduction mod x, s = inclusion; classification recovers ker p ≅ F2
    // elements of B: 0, 1, x, 1+x encoded as bit pairs (a + b·x -> a + 2b)
    auto mul = [](int u, int v) {
        int a = u & 1, b = u >> 1, cc = v & 1, dd = v >> 1;
        return (a & cc) | (((a & dd) ^ (b & cc)) << 1);
    };
    CatBuilder bb(1, "F2[x]/x2");
    bb.set_hom(0, 0, 4);
    bb.set_id(0, 1);
    bb.set_comp([mul](int, int, int, int g, int f) { return mul(f, g); });
    FinCatPtr B = bb.finish();
    CatBuilder cb(1, "F2");
    cb.set_hom(0, 0, 2);
    cb.set_id(0, 1);
    cb.set_comp([](int, int, int, int g, int f) { return f & g; });
    FinCatPtr C2 = cb.finish();

    Functor p;
    p.src = B;
    p.dst = C2;
    p.obj = {0};
    p.mor = {{{0, 1, 0, 1}}};
    p.validate();
    Functor s;
    s.src = C2;
    s.dst = B;
    s.obj = {0};
    s.mor = {{{0, 1}}};
    s.validate();
    AbEnrichment enr_b{[](int, int, int f1, int f2) { return f1 ^ f2; },
                       [](int, int) { return 0; }, [](int, int, int f) { return f; }};
    NatIso u2;
    u2.comp = {1};
    SplitExtension se2 = classify_split_extension(p, s, u2, enr_b);
    CHECK(se2.equivalence);
    CHECK(se2.ker.size(0, 0) == 2);
}

TEST_CASE("swallow identities: pair groupoid with swap duality, rank-one Z/2 bimodule")
{
    FinCatPtr c = pair_groupoid(2);
    StrictDuality d = swap_duality_pair(*c);
    Bimodule m = rank_one_bimodule(c, 2);
    BimoduleDuality j{[](int, int, int mm) { return mm; }};
    m.validate();
    j.validate(m, d);

    // identity diagram sanity: all maps identities leaves m̄ unchanged
    SwallowEngine eng(c, d, m, j, discrete_shape(0), 1);
    auto elems = eng.enumerate_coprod(true);
    for (const CoprodElem& e : elems) {
        SwallowString s = eng.embed(e);
        CHECK(eng.retract(s) == e);
        CHECK(eng.homotopy(s, {1}) == s);  // already at the contracted end
    }

    SwallowReport r0 = verify_swallow_simplified(c, d, m, j, 0, 1);
    CHECK(r0.ok);
    if (!r0.ok) MESSAGE(r0.detail);
    SwallowReport r1 = verify_swallow_simplified(c, d, m, j, 1, 1);
    CHECK(r1.ok);
    if (!r1.ok) MESSAGE(r1.detail);
    MESSAGE("k=1 p=1 strings checked: ", r1.strings_checked);
}

TEST_CASE("swallow identities with a nontrivial J (negation on Z/4)")
{
    FinCatPtr c = pair_groupoid(2);
    StrictDuality d = swap_duality_pair(*c);
    Bimodule m = rank_one_bimodule(c, 4);
    BimoduleDuality j{[](int, int, int mm) { return (4 - mm) % 4; }};
    m.validate();
    j.validate(m, d);
    SwallowReport r = verify_swallow_simplified(c, d, m, j, 1, 0);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(r.detail);
}
