#include "reks/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace reks {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::string name)
    : mul_(std::move(mul)), name_(std::move(name))
{
    int n = static_cast<int>(mul_.size());
    if (n == 0 || n > kMaxGroupOrder)
        throw std::invalid_argument("FiniteGroup: order must be in 1.." + std::to_string(kMaxGroupOrder));
    validate();
    // locate identity
    id_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (mul_[e][a] != a || mul_[a][e] != a) { ok = false; break; }
        if (ok) { id_ = e; break; }
    }
    if (id_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == id_ && mul_[b][a] == id_) { inv_[a] = b; break; }
        if (inv_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
    }
}

void FiniteGroup::validate() const
{
    int n = static_cast<int>(mul_.size());
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul_[a].size()) != n)
            throw std::invalid_argument("FiniteGroup: ragged table");
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] < 0 || mul_[a][b] >= n)
                throw std::invalid_argument("FiniteGroup: entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw std::invalid_argument("FiniteGroup: associativity fails");
}

FiniteGroup FiniteGroup::trivial()
{
    return FiniteGroup({{0}}, "C1");
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[a][b] = (a + b) % n;
    return FiniteGroup(m, "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3()
{
    // permutations of {0,1,2} listed as id,(01),(02),(12),(012),(021)
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == c) return static_cast<int>(k);
        return -1;
    };
    std::vector<std::vector<int>> m(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) m[a][b] = compose(a, b);
    return FiniteGroup(m, "S3");
}

FiniteGroup FiniteGroup::preset(const std::string& name)
{
    if (name == "C1") return trivial();
    if (name == "C2") return cyclic(2);
    if (name == "C3") return cyclic(3);
    if (name == "C4") return cyclic(4);
    if (name == "C6") return cyclic(6);
    if (name == "S3") return symmetric3();
    if (name == "V4") {
        // Klein four group: xor on 2 bits
        std::vector<std::vector<int>> m(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m[a][b] = a ^ b;
        return FiniteGroup(m, "V4");
    }
    throw std::invalid_argument("FiniteGroup::preset: unknown preset " + name);
}

namespace {

SubgroupMask close_under(const FiniteGroup& G, SubgroupMask seed)
{
    SubgroupMask cur = seed | (SubgroupMask(1) << G.id());
    for (;;) {
        SubgroupMask next = cur;
        for (int a = 0; a < G.order(); ++a) {
            if (!(cur >> a & 1)) continue;
            next |= SubgroupMask(1) << G.inv(a);
            for (int b = 0; b < G.order(); ++b)
                if (cur >> b & 1) next |= SubgroupMask(1) << G.mul(a, b);
        }
        if (next == cur) return cur;
        cur = next;
    }
}

} // namespace

SubgroupLattice::SubgroupLattice(const FiniteGroup& G) : G_(G)
{
    // Closure-extension search: grow every known subgroup by one element.
    std::set<SubgroupMask> found;
    SubgroupMask triv = SubgroupMask(1) << G.id();
    found.insert(triv);
    std::vector<SubgroupMask> frontier = {triv};
    while (!frontier.empty()) {
        std::vector<SubgroupMask> next;
        for (SubgroupMask h : frontier)
            for (int g = 0; g < G.order(); ++g) {
                if (h >> g & 1) continue;
                SubgroupMask bigger = close_under(G, h | (SubgroupMask(1) << g));
                if (found.insert(bigger).second) next.push_back(bigger);
            }
        frontier = std::move(next);
    }
    subs_.assign(found.begin(), found.end());
    std::sort(subs_.begin(), subs_.end(), [](SubgroupMask a, SubgroupMask b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (size_t i = 0; i < subs_.size(); ++i) {
        if (subs_[i] == triv) bottom_ = i;
        if (__builtin_popcount(subs_[i]) == G.order()) top_ = i;
    }

    // conjugacy classes of subgroups
    class_of_.assign(subs_.size(), SIZE_MAX);
    for (size_t i = 0; i < subs_.size(); ++i) {
        if (class_of_[i] != SIZE_MAX) continue;
        size_t c = class_reps_.size();
        class_reps_.push_back(i);
        for (int g = 0; g < G.order(); ++g) {
            SubgroupMask conj = 0;
            for (int a = 0; a < G.order(); ++a)
                if (subs_[i] >> a & 1)
                    conj |= SubgroupMask(1) << G.mul(G.mul(g, a), G.inv(g));
            class_of_[index_of(conj)] = c;
        }
    }
}

std::vector<int> SubgroupLattice::elements(size_t i) const
{
    std::vector<int> out;
    for (int a = 0; a < G_.order(); ++a)
        if (subs_[i] >> a & 1) out.push_back(a);
    return out;
}

int SubgroupLattice::order_of(size_t i) const
{
    return __builtin_popcount(subs_[i]);
}

size_t SubgroupLattice::index_of(SubgroupMask m) const
{
    for (size_t i = 0; i < subs_.size(); ++i)
        if (subs_[i] == m) return i;
    throw std::invalid_argument("SubgroupLattice: mask is not a subgroup");
}

bool SubgroupLattice::contains(size_t big, size_t small) const
{
    return (subs_[big] & subs_[small]) == subs_[small];
}

std::vector<size_t> SubgroupLattice::subgroups_below(size_t i) const
{
    std::vector<size_t> out;
    for (size_t k = 0; k < subs_.size(); ++k)
        if (contains(i, k)) out.push_back(k);
    return out;
}

std::vector<size_t> SubgroupLattice::proper_subgroups_below(size_t i) const
{
    std::vector<size_t> out;
    for (size_t k = 0; k < subs_.size(); ++k)
        if (k != i && contains(i, k)) out.push_back(k);
    return out;
}

std::vector<SubgroupMask> SubgroupLattice::enumerate_by_subsets(const FiniteGroup& G)
{
    if (G.order() > 20)
        throw std::invalid_argument("enumerate_by_subsets: group too large for the oracle");
    std::vector<SubgroupMask> out;
    SubgroupMask all = (G.order() == 32) ? ~SubgroupMask(0) : ((SubgroupMask(1) << G.order()) - 1);
    for (SubgroupMask m = 0; m <= all; ++m) {
        if (!(m >> G.id() & 1)) continue;
        bool closed = true;
        for (int a = 0; a < G.order() && closed; ++a) {
            if (!(m >> a & 1)) continue;
            if (!(m >> G.inv(a) & 1)) { closed = false; break; }
            for (int b = 0; b < G.order(); ++b)
                if ((m >> b & 1) && !(m >> G.mul(a, b) & 1)) { closed = false; break; }
        }
        if (closed) out.push_back(m);
        if (m == all) break;
    }
    return out;
}

LatticePtr lattice_of(const FiniteGroup& G)
{
    return std::make_shared<const SubgroupLattice>(G);
}

FiniteGSet::FiniteGSet(LatticePtr lat, int n_points, std::vector<std::vector<int>> action,
                       int basepoint)
    : lat_(std::move(lat)), n_(n_points), action_(std::move(action)), basepoint_(basepoint)
{
    const FiniteGroup& G = lat_->group();
    if (static_cast<int>(action_.size()) != G.order())
        throw std::invalid_argument("FiniteGSet: action table has wrong group size");
    for (int g = 0; g < G.order(); ++g) {
        if (static_cast<int>(action_[g].size()) != n_)
            throw std::invalid_argument("FiniteGSet: action row size mismatch");
        for (int x = 0; x < n_; ++x)
            if (action_[g][x] < 0 || action_[g][x] >= n_)
                throw std::invalid_argument("FiniteGSet: action out of range");
    }
    for (int x = 0; x < n_; ++x)
        if (action_[G.id()][x] != x)
            throw std::invalid_argument("FiniteGSet: identity does not act trivially");
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            for (int x = 0; x < n_; ++x)
                if (action_[G.mul(g, h)][x] != action_[g][action_[h][x]])
                    throw std::invalid_argument("FiniteGSet: not a group action");
    if (basepoint_ >= 0)
        for (int g = 0; g < G.order(); ++g)
            if (action_[g][basepoint_] != basepoint_)
                throw std::invalid_argument("FiniteGSet: basepoint not fixed");
}

FiniteGSet FiniteGSet::free_copies(LatticePtr lat, int n)
{
    const FiniteGroup& G = lat->group();
    int m = n * G.order();
    std::vector<std::vector<int>> act(G.order(), std::vector<int>(m));
    for (int g = 0; g < G.order(); ++g)
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < G.order(); ++a)
                act[g][c * G.order() + a] = c * G.order() + G.mul(g, a);
    return FiniteGSet(std::move(lat), m, std::move(act));
}

FiniteGSet FiniteGSet::trivial(LatticePtr lat, int n_points, int basepoint)
{
    const FiniteGroup& G = lat->group();
    std::vector<std::vector<int>> act(G.order(), std::vector<int>(n_points));
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < n_points; ++x) act[g][x] = x;
    return FiniteGSet(std::move(lat), n_points, std::move(act), basepoint);
}

std::vector<std::vector<int>> FiniteGSet::orbits(size_t sub) const
{
    std::vector<int> elems = lat_->elements(sub);
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(n_, false);
    for (int x = 0; x < n_; ++x) {
        if (seen[x]) continue;
        std::vector<int> orb;
        for (int h : elems) {
            int y = act(h, x);
            if (!seen[y]) {
                seen[y] = true;
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(orb);
    }
    return out;
}

SubgroupMask FiniteGSet::stabilizer(int x) const
{
    SubgroupMask m = 0;
    for (int g = 0; g < lat_->group().order(); ++g)
        if (act(g, x) == x) m |= SubgroupMask(1) << g;
    return m;
}

std::vector<int> FiniteGSet::fixed(size_t sub) const
{
    std::vector<int> elems = lat_->elements(sub);
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        bool ok = true;
        for (int h : elems)
            if (act(h, x) != x) { ok = false; break; }
        if (ok) out.push_back(x);
    }
    return out;
}

} // namespace reks
