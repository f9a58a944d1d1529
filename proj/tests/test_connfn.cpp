#include "doctest.h"

#include <random>

#include "reks/connfn.hpp"

using namespace reks;

namespace {

LatticePtr c2_lat()
{
    static LatticePtr lat = lattice_of(FiniteGroup::cyclic(2));
    return lat;
}

ConnFn pair_fn(long long at1, long long atG)
{
    return ConnFn::from_pair(c2_lat(), ExtInt(at1), ExtInt(atG));
}

} // namespace

TEST_CASE("connfn algebra")
{
    ConnFn a = pair_fn(2, 1), b = pair_fn(3, 0);
    CHECK(a.pointwise_min(b) == pair_fn(2, 0));
    CHECK(a.shift(1) == pair_fn(3, 2));
    CHECK(a.pointwise_sum(b) == pair_fn(5, 1));

    ConnFn inf(c2_lat(), ExtInt::infinity());
    CHECK(inf.pointwise_min(a) == a);
    CHECK(inf.pointwise_sum(a) == inf);
}

TEST_CASE("excision bound on Z/2: (2,1),(3,2), c = 0 gives (5,3)")
{
    ConnFnQ c(c2_lat());
    ConnFn nu = excision_bound({pair_fn(2, 1), pair_fn(3, 2)}, c);
    CHECK(nu == pair_fn(5, 3));
}

TEST_CASE("excision bound with one term is min over subgroups")
{
    ConnFnQ c(c2_lat());
    ConnFn nu = excision_bound({pair_fn(4, 2)}, c);
    CHECK(nu == pair_fn(4, 2));
    ConnFn nu2 = excision_bound({pair_fn(1, 5)}, c);
    CHECK(nu2 == pair_fn(1, 1));
}

TEST_CASE("trivial group excision matches the classical formula on random inputs")
{
    auto lat = lattice_of(FiniteGroup::trivial());
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> conn(-3, 9), cn(-6, 6), cd(1, 4), terms(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        int k = terms(rng);
        std::vector<ConnFn> es;
        Rat total = 0;
        Rat cval = Rat(cn(rng), cd(rng));
        for (int i = 0; i < k; ++i) {
            int e = conn(rng);
            es.push_back(ConnFn(lat, ExtInt(e)));
            total += e;
        }
        // E_n(c, ·) with n+1 = k terms: ν = Σ conn e_i − k·c
        ConnFnQ c(lat, ExtRat(cval));
        ConnFnQ nu = excision_bound_exact(es, c);
        ExtRat expect = ExtRat(total - Rat(k) * cval);
        CHECK(nu.at_sub(lat->bottom()) == expect);
    }
}

TEST_CASE("excision monotone in the input connectivities")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> conn(-3, 6);
    ConnFnQ c(c2_lat(), ExtRat(Rat(1, 2)));
    for (int trial = 0; trial < 100; ++trial) {
        ConnFn e1 = pair_fn(conn(rng), conn(rng)), e2 = pair_fn(conn(rng), conn(rng));
        ConnFn raised = e1.shift(1);
        ConnFn lo = excision_bound({e1, e2}, c), hi = excision_bound({raised, e2}, c);
        CHECK(lo.leq(hi));
    }
}

TEST_CASE("wedge bound: (3,1) with v = 0 gives (6,2)")
{
    ConnFn v(c2_lat(), ExtInt(0));
    CHECK(wedge_bound(pair_fn(3, 1), v) == pair_fn(6, 2));
}

TEST_CASE("wedge bound edge cases")
{
    auto lat = lattice_of(FiniteGroup::trivial());
    // no proper subgroups: ϑ = 2 conn p − v
    ConnFn p(lat, ExtInt(3)), v(lat, ExtInt(1));
    ConnFn t = wedge_bound(p, v);
    CHECK(t.at_sub(lat->bottom()) == ExtInt(5));

    // v = +∞ flags unbounded below
    ConnFn vinf(lat, ExtInt::infinity());
    CHECK(wedge_bound(p, vinf).at_sub(lat->bottom()) == ExtInt::neg_infinity());

    // wedge_bound(p, 0)(H) <= 2 p(H)
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> conn(-2, 8);
    ConnFn z(c2_lat(), ExtInt(0));
    for (int i = 0; i < 50; ++i) {
        ConnFn q = pair_fn(conn(rng), conn(rng));
        ConnFn w = wedge_bound(q, z);
        CHECK(w.leq(q.pointwise_sum(q)));
    }
}

TEST_CASE("certificate shift reproduces the S^{1,1} analyticity function")
{
    AnalyticityCertificate rho0{ConnFn(c2_lat(), ExtInt(0)), ConnFnQ(c2_lat()),
                                ConnFn(c2_lat(), ExtInt(0))};
    // smashing with S^{1,1} gains (1, 0)
    ConnFn gain = pair_fn(1, 0);
    AnalyticityCertificate shifted = certificate_shift(rho0, gain);
    CHECK(shifted.rho == pair_fn(-1, 0));
    CHECK(shifted.q == rho0.q);
    CHECK(shifted.v == rho0.v);

    // zero shift is the identity
    AnalyticityCertificate same = certificate_shift(rho0, ConnFn(c2_lat(), ExtInt(0)));
    CHECK(same.rho == rho0.rho);
}

TEST_CASE("rational constants floor only at the end")
{
    // c = 1/2 on both classes, two maps with conn (2,2): exact ν = 2+2-1 = 3
    ConnFnQ c(c2_lat(), ExtRat(Rat(1, 2)));
    ConnFn nu = excision_bound({pair_fn(2, 2), pair_fn(2, 2)}, c);
    CHECK(nu == pair_fn(3, 3));
    // c = 1/3: ν exact = 4 - 2/3 = 10/3, floored to 3
    ConnFnQ c3(c2_lat(), ExtRat(Rat(1, 3)));
    ConnFn nu3 = excision_bound({pair_fn(2, 2), pair_fn(2, 2)}, c3);
    CHECK(nu3 == pair_fn(3, 3));
}
