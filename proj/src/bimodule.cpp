#include "reks/bimodule.hpp"

#include <stdexcept>

namespace reks {

Bimodule::Bimodule(FinCatPtr cat, std::vector<std::vector<int>> sizes,
                   std::function<int(int, int, int, int)> add, std::function<int(int, int)> zero,
                   std::function<int(int, int, int)> neg,
                   std::function<int(int, int, int, int, int)> push,
                   std::function<int(int, int, int, int, int)> pull)
    : cat_(std::move(cat)), sizes_(std::move(sizes)), add_(std::move(add)),
      zero_(std::move(zero)), neg_(std::move(neg)), push_(std::move(push)),
      pull_(std::move(pull))
{
}

void Bimodule::validate() const
{
    const FinCat& c = *cat_;
    int n = c.n_obj();
    // abelian group laws per pair
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int z = zero(a, b);
            for (int m1 = 0; m1 < size(a, b); ++m1) {
                if (add(a, b, z, m1) != m1 || add(a, b, m1, z) != m1)
                    throw std::runtime_error("Bimodule: zero law fails");
                if (add(a, b, m1, neg(a, b, m1)) != z)
                    throw std::runtime_error("Bimodule: negation fails");
                for (int m2 = 0; m2 < size(a, b); ++m2) {
                    if (add(a, b, m1, m2) != add(a, b, m2, m1))
                        throw std::runtime_error("Bimodule: not commutative");
                    for (int m3 = 0; m3 < size(a, b); ++m3)
                        if (add(a, b, add(a, b, m1, m2), m3) != add(a, b, m1, add(a, b, m2, m3)))
                            throw std::runtime_error("Bimodule: not associative");
                }
            }
        }
    // functoriality and additivity of the actions
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int m = 0; m < size(a, b); ++m) {
                if (push(a, b, b, c.id_mor(b), m) != m)
                    throw std::runtime_error("Bimodule: push by id fails");
                if (pull(a, b, a, c.id_mor(a), m) != m)
                    throw std::runtime_error("Bimodule: pull by id fails");
            }
            for (int bp = 0; bp < n; ++bp)
                for (int f = 0; f < c.hom_size(b, bp); ++f) {
                    for (int m1 = 0; m1 < size(a, b); ++m1)
                        for (int m2 = 0; m2 < size(a, b); ++m2)
                            if (push(a, b, bp, f, add(a, b, m1, m2)) !=
                                add(a, bp, push(a, b, bp, f, m1), push(a, b, bp, f, m2)))
                                throw std::runtime_error("Bimodule: push not additive");
                    for (int bpp = 0; bpp < n; ++bpp)
                        for (int g = 0; g < c.hom_size(bp, bpp); ++g)
                            for (int m = 0; m < size(a, b); ++m)
                                if (push(a, bp, bpp, g, push(a, b, bp, f, m)) !=
                                    push(a, b, bpp, c.compose(b, bp, bpp, f, g), m))
                                    throw std::runtime_error("Bimodule: push not functorial");
                }
            for (int ap = 0; ap < n; ++ap)
                for (int g = 0; g < c.hom_size(ap, a); ++g) {
                    for (int m1 = 0; m1 < size(a, b); ++m1)
                        for (int m2 = 0; m2 < size(a, b); ++m2)
                            if (pull(a, b, ap, g, add(a, b, m1, m2)) !=
                                add(ap, b, pull(a, b, ap, g, m1), pull(a, b, ap, g, m2)))
                                throw std::runtime_error("Bimodule: pull not additive");
                    for (int app = 0; app < n; ++app)
                        for (int h = 0; h < c.hom_size(app, ap); ++h)
                            for (int m = 0; m < size(a, b); ++m)
                                if (pull(ap, b, app, h, pull(a, b, ap, g, m)) !=
                                    pull(a, b, app, c.compose(app, ap, a, h, g), m))
                                    throw std::runtime_error("Bimodule: pull not functorial");
                    // push and pull commute
                    for (int bp = 0; bp < n; ++bp)
                        for (int f = 0; f < c.hom_size(b, bp); ++f)
                            for (int m = 0; m < size(a, b); ++m)
                                if (push(ap, b, bp, f, pull(a, b, ap, g, m)) !=
                                    pull(a, bp, ap, g, push(a, b, bp, f, m)))
                                    throw std::runtime_error("Bimodule: actions do not commute");
                }
        }
}

Bimodule Bimodule::zero_bimodule(FinCatPtr cat)
{
    int n = cat->n_obj();
    std::vector<std::vector<int>> sizes(n, std::vector<int>(n, 1));
    return Bimodule(
        cat, sizes, [](int, int, int, int) { return 0; }, [](int, int) { return 0; },
        [](int, int, int) { return 0; }, [](int, int, int, int, int) { return 0; },
        [](int, int, int, int, int) { return 0; });
}

void BimoduleDuality::validate(const Bimodule& m, const StrictDuality& d) const
{
    const FinCat& c = m.cat();
    int n = c.n_obj();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int da = d.dobj(a), dbo = d.dobj(b);
            for (int x = 0; x < m.size(a, b); ++x) {
                // additive involution (J^2 = id by strictness)
                if (J(dbo, da, J(a, b, x)) != x)
                    throw std::runtime_error("BimoduleDuality: J^2 != id");
                for (int y = 0; y < m.size(a, b); ++y)
                    if (J(a, b, m.add(a, b, x, y)) != m.add(dbo, da, J(a, b, x), J(a, b, y)))
                        throw std::runtime_error("BimoduleDuality: J not additive");
            }
            // naturality: J(f_* m) = D(f)^* J(m), J(g^* m) = D(g)_* J(m)
            for (int bp = 0; bp < n; ++bp)
                for (int f = 0; f < c.hom_size(b, bp); ++f)
                    for (int x = 0; x < m.size(a, b); ++x) {
                        int lhs = J(a, bp, m.push(a, b, bp, f, x));
                        int rhs = m.pull(dbo, da, d.dobj(bp), d.dmor(b, bp, f), J(a, b, x));
                        if (lhs != rhs)
                            throw std::runtime_error("BimoduleDuality: J not natural in the 2nd slot");
                    }
            for (int ap = 0; ap < n; ++ap)
                for (int g = 0; g < c.hom_size(ap, a); ++g)
                    for (int x = 0; x < m.size(a, b); ++x) {
                        int lhs = J(ap, b, m.pull(a, b, ap, g, x));
                        int rhs = m.push(dbo, da, d.dobj(ap), d.dmor(ap, a, g), J(a, b, x));
                        if (lhs != rhs)
                            throw std::runtime_error("BimoduleDuality: J not natural in the 1st slot");
                    }
        }
}

SemidirectCat semidirect_cat(const Bimodule& m)
{
    const FinCat& c = m.cat();
    int n = c.n_obj();
    SemidirectCat out;
    out.base = m.cat_ptr();
    out.m = &m;
    out.msize.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.msize[a][b] = m.size(a, b);

    CatBuilder builder(n, c.name() + "⋉M");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) builder.set_hom(a, b, c.hom_size(a, b) * m.size(a, b));
    for (int a = 0; a < n; ++a) builder.set_id(a, c.id_mor(a) * m.size(a, a) + m.zero(a, a));
    const Bimodule* mp = &m;
    auto msz = out.msize;
    builder.set_comp([mp, msz](int a, int b, int cc, int gidx, int fidx) {
        const FinCat& cat = mp->cat();
        int g = gidx / msz[a][b], nn = gidx % msz[a][b];
        int f = fidx / msz[b][cc], mm = fidx % msz[b][cc];
        int fg = cat.compose(a, b, cc, g, f);
        // f_* n + g^* m
        int fn = mp->push(a, b, cc, f, nn);
        int gm = mp->pull(b, cc, a, g, mm);
        return fg * msz[a][cc] + mp->add(a, cc, fn, gm);
    });
    out.cat = builder.finish();

    out.project.src = out.cat;
    out.project.dst = out.base;
    out.project.obj.resize(n);
    out.project.mor.assign(n, std::vector<std::vector<int>>(n));
    out.section.src = out.base;
    out.section.dst = out.cat;
    out.section.obj.resize(n);
    out.section.mor.assign(n, std::vector<std::vector<int>>(n));
    for (int a = 0; a < n; ++a) {
        out.project.obj[a] = a;
        out.section.obj[a] = a;
        for (int b = 0; b < n; ++b) {
            for (int idx = 0; idx < out.cat->hom_size(a, b); ++idx)
                out.project.mor[a][b].push_back(out.f_part(a, b, idx));
            for (int f = 0; f < c.hom_size(a, b); ++f)
                out.section.mor[a][b].push_back(out.pair_index(a, b, f, m.zero(a, b)));
        }
    }
    out.project.validate();
    out.section.validate();
    return out;
}

StrictDuality semidirect_duality(const SemidirectCat& sd, const StrictDuality& d,
                                 const BimoduleDuality& j)
{
    const FinCat& c = *sd.base;
    int n = c.n_obj();
    StrictDuality out;
    out.obj = d.obj;
    out.mor.assign(n, std::vector<std::vector<int>>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int idx = 0; idx < sd.cat->hom_size(a, b); ++idx) {
                int f = sd.f_part(a, b, idx), mm = sd.m_part(a, b, idx);
                out.mor[a][b].push_back(
                    sd.pair_index(d.dobj(b), d.dobj(a), d.dmor(a, b, f), j.J(a, b, mm)));
            }
    out.validate(*sd.cat);
    return out;
}

IsoCat iso_subcategory(FinCatPtr cptr)
{
    const FinCat& c = *cptr;
    int n = c.n_obj();
    IsoCat out;
    out.back.assign(n, std::vector<std::vector<int>>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.back[a][b] = c.isos(a, b);
    CatBuilder builder(n, "i(" + c.name() + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) builder.set_hom(a, b, (int)out.back[a][b].size());
    for (int a = 0; a < n; ++a) {
        int idi = -1;
        for (size_t t = 0; t < out.back[a][a].size(); ++t)
            if (out.back[a][a][t] == c.id_mor(a)) idi = (int)t;
        builder.set_id(a, idi);
    }
    auto back = out.back;
    builder.set_comp([back, cptr](int a, int b, int cc, int g, int f) {
        int comp = cptr->compose(a, b, cc, back[a][b][g], back[b][cc][f]);
        for (size_t t = 0; t < back[a][cc].size(); ++t)
            if (back[a][cc][t] == comp) return (int)t;
        throw std::runtime_error("iso_subcategory: composite not iso");
    });
    out.cat = builder.finish();
    return out;
}

int IsoCat::find(int c, int d, int orig) const
{
    for (size_t t = 0; t < back[c][d].size(); ++t)
        if (back[c][d][t] == orig) return (int)t;
    return -1;
}

CoprodGroupoid coprod_groupoid(const Bimodule& m, const StrictDuality& d,
                               const BimoduleDuality& j)
{
    const FinCat& c = m.cat();
    int n = c.n_obj();
    CoprodGroupoid out;
    out.m = &m;
    CatBuilder builder(n, "∐M");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) builder.set_hom(a, b, a == b ? m.size(a, a) : 0);
    for (int a = 0; a < n; ++a) builder.set_id(a, m.zero(a, a));
    const Bimodule* mp = &m;
    builder.set_comp([mp](int a, int, int, int g, int f) { return mp->add(a, a, g, f); });
    out.cat = builder.finish();

    out.duality.obj = d.obj;
    out.duality.mor.assign(n, std::vector<std::vector<int>>(n));
    for (int a = 0; a < n; ++a)
        for (int mm = 0; mm < m.size(a, a); ++mm)
            out.duality.mor[a][a].push_back(j.J(a, a, mm));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) out.duality.mor[a][b] = {};
    out.duality.validate(*out.cat);
    return out;
}

void CoprodGroupoid::validate_embedding(const SemidirectCat& sd, const IsoCat& iso) const
{
    const Bimodule& mm = *m;
    const FinCat& c = mm.cat();
    for (int a = 0; a < c.n_obj(); ++a) {
        for (int x = 0; x < mm.size(a, a); ++x) {
            int pair = sd.pair_index(a, a, c.id_mor(a), x);
            if (iso.find(a, a, pair) < 0)
                throw std::runtime_error("coprod embedding: (id, m) not an isomorphism");
            for (int y = 0; y < mm.size(a, a); ++y) {
                // e(m)∘e(n) = e(m+n)
                int lhs = sd.cat->compose(a, a, a, sd.pair_index(a, a, c.id_mor(a), y),
                                          sd.pair_index(a, a, c.id_mor(a), x));
                if (lhs != sd.pair_index(a, a, c.id_mor(a), mm.add(a, a, x, y)))
                    throw std::runtime_error("coprod embedding: not additive");
            }
        }
    }
}

void AbEnrichment::validate(const FinCat& cat) const
{
    int n = cat.n_obj();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int z = zero(a, b);
            for (int m1 = 0; m1 < cat.hom_size(a, b); ++m1) {
                if (add(a, b, z, m1) != m1) throw std::runtime_error("AbEnrichment: zero fails");
                if (add(a, b, m1, neg(a, b, m1)) != z)
                    throw std::runtime_error("AbEnrichment: negation fails");
                for (int m2 = 0; m2 < cat.hom_size(a, b); ++m2)
                    if (add(a, b, m1, m2) != add(a, b, m2, m1))
                        throw std::runtime_error("AbEnrichment: not commutative");
            }
        }
    // bilinearity of composition (bounded sweep on large categories)
    long long budget = 2'000'000;
    for (int a = 0; a < n && budget > 0; ++a)
        for (int b = 0; b < n && budget > 0; ++b)
            for (int cc = 0; cc < n && budget > 0; ++cc)
                for (int g = 0; g < cat.hom_size(a, b) && budget > 0; ++g)
                    for (int f1 = 0; f1 < cat.hom_size(b, cc) && budget > 0; ++f1)
                        for (int f2 = 0; f2 < cat.hom_size(b, cc) && budget > 0; ++f2) {
                            --budget;
                            int lhs = cat.compose(a, b, cc, g, add(b, cc, f1, f2));
                            int rhs = add(a, cc, cat.compose(a, b, cc, g, f1),
                                          cat.compose(a, b, cc, g, f2));
                            if (lhs != rhs)
                                throw std::runtime_error("AbEnrichment: composition not left-additive");
                            lhs = cat.compose(a, cc, b, add(a, cc, f1, f2), g);
                            (void)lhs;
                        }
    budget = 2'000'000;
    for (int a = 0; a < n && budget > 0; ++a)
        for (int b = 0; b < n && budget > 0; ++b)
            for (int cc = 0; cc < n && budget > 0; ++cc)
                for (int g1 = 0; g1 < cat.hom_size(a, b) && budget > 0; ++g1)
                    for (int g2 = 0; g2 < cat.hom_size(a, b) && budget > 0; ++g2)
                        for (int f = 0; f < cat.hom_size(b, cc) && budget > 0; ++f) {
                            --budget;
                            int lhs = cat.compose(a, b, cc, add(a, b, g1, g2), f);
                            int rhs = add(a, cc, cat.compose(a, b, cc, g1, f),
                                          cat.compose(a, b, cc, g2, f));
                            if (lhs != rhs)
                                throw std::runtime_error("AbEnrichment: composition not right-additive");
                        }
}

SplitExtension classify_split_extension(const Functor& p, const Functor& s, const NatIso& u,
                                        const AbEnrichment& enr_b)
{
    SplitExtension out;
    FinCatPtr B = p.src, C = p.dst;
    if (s.src != C || s.dst != B) throw std::invalid_argument("classify_split_extension: bad section");
    u.validate(compose_functors(p, s), identity_functor(C));
    enr_b.validate(*B);
    int n = C->n_obj();

    // ker p as a bimodule over C, elements enumerated per pair
    std::vector<std::vector<std::vector<int>>> ker(n, std::vector<std::vector<int>>(n));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            int sc = s.fobj(c), sd = s.fobj(d);
            int zero_im = enr_b.zero(sc, sd);
            // kernel of hom_B(s c, s d) -> hom_C(ps c, ps d): the maps whose
            // image is the zero morphism
            int zc = -1;
            // zero of hom_C(ps c, ps d): transport the zero of hom_B through p
            zc = p.fmor(sc, sd, zero_im);
            for (int f = 0; f < B->hom_size(sc, sd); ++f)
                if (p.fmor(sc, sd, f) == zc) ker[c][d].push_back(f);
        }

    // composite-vanishing precondition
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
                for (int f : ker[d][e])
                    for (int g : ker[c][d]) {
                        int comp = B->compose(s.fobj(c), s.fobj(d), s.fobj(e), g, f);
                        if (comp != enr_b.zero(s.fobj(c), s.fobj(e))) {
                            out.equivalence = false;
                            out.detail = "composite of kernel elements does not vanish";
                            throw std::runtime_error("classify_split_extension: " + out.detail);
                        }
                    }

    std::vector<std::vector<int>> sizes(n, std::vector<int>(n));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) sizes[c][d] = (int)ker[c][d].size();
    auto find_ker = [ker](int c, int d, int f) {
        for (size_t t = 0; t < ker[c][d].size(); ++t)
            if (ker[c][d][t] == f) return (int)t;
        throw std::runtime_error("classify_split_extension: element left the kernel");
    };
    auto enr = enr_b;
    Functor sq = s;
    FinCatPtr Bq = B;
    out.ker = Bimodule(
        C, sizes,
        [ker, enr, sq, find_ker](int c, int d, int m1, int m2) {
            int sc = sq.fobj(c), sd = sq.fobj(d);
            return find_ker(c, d, enr.add(sc, sd, ker[c][d][m1], ker[c][d][m2]));
        },
        [ker, enr, sq, find_ker](int c, int d) {
            return find_ker(c, d, enr.zero(sq.fobj(c), sq.fobj(d)));
        },
        [ker, enr, sq, find_ker](int c, int d, int m) {
            return find_ker(c, d, enr.neg(sq.fobj(c), sq.fobj(d), ker[c][d][m]));
        },
        [ker, sq, Bq, find_ker](int c, int d, int dp, int f, int m) {
            int t = Bq->compose(sq.fobj(c), sq.fobj(d), sq.fobj(dp), ker[c][d][m],
                                sq.fmor(d, dp, f));
            return find_ker(c, dp, t);
        },
        [ker, sq, Bq, find_ker](int c, int d, int cp, int g, int m) {
            int t = Bq->compose(sq.fobj(cp), sq.fobj(c), sq.fobj(d), sq.fmor(cp, c, g),
                                ker[c][d][m]);
            return find_ker(cp, d, t);
        });
    out.ker.validate();

    out.semidirect = semidirect_cat(out.ker);

    // F : C ⋉ ker p -> B,  c -> s(c), (f, m) -> s(f) + m
    out.comparison.src = out.semidirect.cat;
    out.comparison.dst = B;
    out.comparison.obj.resize(n);
    out.comparison.mor.assign(n, std::vector<std::vector<int>>(n));
    for (int c = 0; c < n; ++c) {
        out.comparison.obj[c] = s.fobj(c);
        for (int d = 0; d < n; ++d)
            for (int idx = 0; idx < out.semidirect.cat->hom_size(c, d); ++idx) {
                int f = out.semidirect.f_part(c, d, idx);
                int mm = out.semidirect.m_part(c, d, idx);
                out.comparison.mor[c][d].push_back(
                    enr_b.add(s.fobj(c), s.fobj(d), s.fmor(c, d, f), ker[c][d][mm]));
            }
    }
    out.comparison.validate();

    // the explicit hom-level inverse: f -> (U_d ∘ p(f) ∘ U_c^{-1}, f − s(...))
    out.equivalence = true;
    for (int c = 0; c < n && out.equivalence; ++c)
        for (int d = 0; d < n && out.equivalence; ++d) {
            int sc = s.fobj(c), sd = s.fobj(d);
            for (int f = 0; f < B->hom_size(sc, sd); ++f) {
                int pf = p.fmor(sc, sd, f);   // in hom(ps c, ps d)
                int ucinv = C->inverse(p.fobj(sc), c, u.comp[c]);
                int t = C->compose(c, p.fobj(sc), p.fobj(sd), ucinv, pf);
                int fc = C->compose(c, p.fobj(sd), d, t, u.comp[d]);
                int rest = enr_b.add(sc, sd, f, enr_b.neg(sc, sd, s.fmor(c, d, fc)));
                int km = find_ker(c, d, rest);
                int pair = out.semidirect.pair_index(c, d, fc, km);
                if (out.comparison.fmor(c, d, pair) != f) {
                    out.equivalence = false;
                    out.detail = "inverse formula is not a section of F";
                }
            }
            // injectivity: hom sizes must then agree
            if (out.semidirect.cat->hom_size(c, d) != B->hom_size(sc, sd)) {
                out.equivalence = false;
                out.detail = "hom cardinalities differ";
            }
        }
    // essential surjectivity of F follows from that of s
    EquivalenceVerdict es = check_equivalence(s);
    if (!es.essentially_surjective) {
        out.equivalence = false;
        out.detail = "section not essentially surjective";
    }
    return out;
}

} // namespace reks
