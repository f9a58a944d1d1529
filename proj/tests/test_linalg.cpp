#include "doctest.h"

#include <random>

#include "reks/homology.hpp"
#include "reks/linalg.hpp"

using namespace reks;

namespace {

Mat from_rows(const std::vector<std::vector<long long>>& rows)
{
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

bool is_unimodular(const Mat& m)
{
    // determinant ±1 via SNF of m itself: all diagonal entries 1
    SNF s = smith_normal_form(m);
    if (s.rank != m.rows() || m.rows() != m.cols()) return false;
    for (const Int& d : s.diag())
        if (d != 1) return false;
    return true;
}

void check_snf(const Mat& a)
{
    SNF s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    auto d = s.diag();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i + 1] != 0) {
            REQUIRE(d[i] != 0);
            CHECK(d[i + 1] % d[i] == 0);
        }
    }
    for (size_t i = 0; i < s.D.rows(); ++i)
        for (size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D(i, j) == 0);
}

} // namespace

TEST_CASE("snf identity and zero")
{
    Mat id = Mat::identity(3);
    SNF s = smith_normal_form(id);
    CHECK(s.D == id);
    Mat z(2, 3);
    SNF sz = smith_normal_form(z);
    CHECK(sz.D.is_zero());
    CHECK(sz.rank == 0);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)")
{
    // hand row-reduction oracle: R2 -= 3 R1 -> [[2,4],[0,-4]], C2 -= 2 C1 -> diag(2,-4)
    Mat a = from_rows({{2, 4}, {6, 8}});
    SNF s = smith_normal_form(a);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 4);
    check_snf(a);
}

TEST_CASE("snf randomized: UAV = D, unimodular, divisibility")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 7), entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        Mat a(dim(rng), dim(rng));
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
        check_snf(a);
    }
}

TEST_CASE("kernel basis and integer solve")
{
    Mat a = from_rows({{1, 2, 3}, {2, 4, 6}});
    Mat k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());

    Mat b(2, 1);
    b(0, 0) = 5;
    b(1, 0) = 10;
    Mat x;
    REQUIRE(solve_integer(a, b, x));
    CHECK(a * x == b);

    b(1, 0) = 11;  // incompatible with the doubled row
    CHECK_FALSE(solve_integer(a, b, x));

    // divisibility failure: 2x = 3 has no integer solution
    Mat two = from_rows({{2}});
    Mat three(1, 1);
    three(0, 0) = 3;
    CHECK_FALSE(solve_integer(two, three, x));
}

TEST_CASE("coker shapes")
{
    // Z^2 / im[[2,0],[0,3]] = Z/2 + Z/3 = Z/6 in invariant-factor form Z/1|Z/6
    Mat a = from_rows({{2, 0}, {0, 3}});
    CokerShape s = coker_shape(a, 2);
    CHECK(s.free_rank == 0);
    REQUIRE(s.torsion.size() == 1);
    CHECK(s.torsion[0] == 6);

    Mat b = from_rows({{2, 0}, {0, 2}});
    CokerShape s2 = coker_shape(b, 2);
    CHECK(s2.torsion == std::vector<Int>{2, 2});
    CHECK(s2.order() == 4);

    CokerShape s3 = coker_shape(Mat(2, 0), 2);
    CHECK(s3.free_rank == 2);
    CHECK(s3.order() == 0);
}

TEST_CASE("subgroup order in presented group")
{
    // G = Z/4 x Z/4; subgroup generated by (2,0) and (0,2) has order 4
    AbPres g = AbPres::cyclic_sum({4, 4});
    Mat s = from_rows({{2, 0}, {0, 2}});
    CHECK(subgroup_order(g, s) == 4);
    Mat t = from_rows({{1}, {0}});
    CHECK(subgroup_order(g, t) == 4);
    CHECK(subgroup_order(g, Mat(2, 0)) == 1);
}

TEST_CASE("free chain complex homology: circle and sphere")
{
    // S^1 cellular: C_1 = Z -> C_0 = Z with zero boundary (reduced: C_0 = 0)
    ChainComplex s1;
    s1.ranks = {0, 1, 0};
    s1.boundary = {Mat(0, 0), Mat(0, 1), Mat(1, 0)};
    HomologyReport h = homology(s1);
    CHECK(h.at(0).is_zero());
    CHECK(h.at(1) == HomologyGroup{1, {}});

    // RP^2-style: Z --2--> Z in degrees 2 -> 1
    ChainComplex rp;
    rp.ranks = {0, 1, 1};
    Mat two(1, 1);
    two(0, 0) = 2;
    rp.boundary = {Mat(0, 0), Mat(0, 1), two};
    HomologyReport hr = homology(rp);
    CHECK(hr.at(1) == HomologyGroup{0, {2}});
    CHECK(hr.at(2).is_zero());
}

TEST_CASE("presented complex homology with torsion levels")
{
    // Constant simplicial abelian group Z/2 gives the Moore complex
    // Z/2 <- Z/2 <- Z/2 ... with alternating 0 and identity differentials
    // (unnormalized chains of K(Z/2,0)): H_0 = Z/2, higher zero.
    PresentedComplex c;
    size_t n = 5;
    for (size_t i = 0; i <= n; ++i) {
        c.levels.push_back(AbPres::cyclic_sum({2}));
        Mat d(1, 1);
        // alternating sum of (i+1) identity face maps: zero when i is odd
        d(0, 0) = (i % 2 == 0) ? 1 : 0;
        c.diff.push_back(i == 0 ? Mat(1, 1) : d);
    }
    c.validate();
    HomologyReport h = homology(c, 4);
    CHECK(h.at(0) == HomologyGroup{0, {2}});
    for (size_t i = 1; i <= 4; ++i) CHECK(h.at(i).is_zero());
}

TEST_CASE("exactness checker")
{
    // Z/2 --incl--> Z/4 --proj--> Z/2 exact at middle
    AbPres z2 = AbPres::cyclic_sum({2});
    AbPres z4 = AbPres::cyclic_sum({4});
    Mat incl(1, 1), proj(1, 1);
    incl(0, 0) = 2;
    proj(0, 0) = 1;
    CHECK(exact_at(z2, z4, z2, incl, proj));
    // Z/2 --0--> Z/4 --proj--> Z/2: not exact (im=1, ker proj = 2)
    Mat zero(1, 1);
    CHECK_FALSE(exact_at(z2, z4, z2, zero, proj));
}
