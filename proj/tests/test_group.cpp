#include "doctest.h"

#include <algorithm>
#include <set>

#include "reks/group.hpp"

using namespace reks;

TEST_CASE("C2 lattice: two subgroups, two classes")
{
    auto lat = lattice_of(FiniteGroup::cyclic(2));
    CHECK(lat->count() == 2);
    CHECK(lat->class_count() == 2);
    CHECK(lat->order_of(lat->bottom()) == 1);
    CHECK(lat->order_of(lat->topsub()) == 2);
}

TEST_CASE("C4 lattice is the chain 1 < C2 < C4")
{
    FiniteGroup g = FiniteGroup::cyclic(4);
    auto lat = lattice_of(g);
    CHECK(lat->count() == 3);
    CHECK(lat->class_count() == 3);
    // closure-search result agrees with the all-subsets oracle
    auto oracle = SubgroupLattice::enumerate_by_subsets(g);
    std::set<SubgroupMask> a(oracle.begin(), oracle.end());
    std::set<SubgroupMask> b;
    for (size_t i = 0; i < lat->count(); ++i) b.insert(lat->mask(i));
    CHECK(a == b);
    // total order by containment
    CHECK(lat->contains(lat->topsub(), lat->bottom()));
}

TEST_CASE("S3 lattice: 6 subgroups, 4 conjugacy classes")
{
    FiniteGroup g = FiniteGroup::symmetric3();
    auto lat = lattice_of(g);
    CHECK(lat->count() == 6);
    CHECK(lat->class_count() == 4);
    auto oracle = SubgroupLattice::enumerate_by_subsets(g);
    CHECK(oracle.size() == 6);
    std::set<SubgroupMask> a(oracle.begin(), oracle.end());
    std::set<SubgroupMask> b;
    for (size_t i = 0; i < lat->count(); ++i) b.insert(lat->mask(i));
    CHECK(a == b);
}

TEST_CASE("V4 and C6 lattices agree with the subsets oracle")
{
    for (const char* name : {"V4", "C6"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        auto lat = lattice_of(g);
        auto oracle = SubgroupLattice::enumerate_by_subsets(g);
        CHECK(lat->count() == oracle.size());
    }
}

TEST_CASE("conjugation permutes subgroups and classes are invariant")
{
    FiniteGroup g = FiniteGroup::symmetric3();
    auto lat = lattice_of(g);
    for (size_t i = 0; i < lat->count(); ++i)
        for (int c = 0; c < g.order(); ++c) {
            SubgroupMask conj = 0;
            for (int a : lat->elements(i))
                conj |= SubgroupMask(1) << g.mul(g.mul(c, a), g.inv(c));
            size_t j = lat->index_of(conj);
            CHECK(lat->class_of(i) == lat->class_of(j));
        }
}

TEST_CASE("gset analysis: free Z/2 orbit")
{
    auto lat = lattice_of(FiniteGroup::cyclic(2));
    FiniteGSet j = FiniteGSet::free_copies(lat, 1);
    size_t top = lat->topsub();
    auto orb = j.orbits(top);
    CHECK(orb.size() == 1);
    CHECK(orb[0].size() == 2);
    CHECK(j.stabilizer(0) == (SubgroupMask(1) << lat->group().id()));
    CHECK(j.fixed(top).empty());
}

TEST_CASE("gset analysis: trivial 2-point Z/2-set")
{
    auto lat = lattice_of(FiniteGroup::cyclic(2));
    FiniteGSet j = FiniteGSet::trivial(lat, 2);
    size_t top = lat->topsub();
    CHECK(j.orbits(top).size() == 2);
    CHECK(j.fixed(top).size() == 2);
    CHECK(j.stabilizer(0) == lat->mask(top));
}

TEST_CASE("gset analysis: nG has n free orbits")
{
    auto lat = lattice_of(FiniteGroup::symmetric3());
    FiniteGSet j = FiniteGSet::free_copies(lat, 3);
    auto orb = j.orbits(lat->topsub());
    CHECK(orb.size() == 3);
    for (int x = 0; x < j.size(); ++x)
        CHECK(j.stabilizer(x) == (SubgroupMask(1) << lat->group().id()));
}
