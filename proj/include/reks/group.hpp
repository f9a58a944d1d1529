#ifndef REKS_GROUP_HPP
#define REKS_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace reks {

constexpr int kMaxGroupOrder = 24;

// Finite group as a multiplication table on elements 0..n-1.
class FiniteGroup {
  public:
    FiniteGroup(std::vector<std::vector<int>> mul, std::string name = "");

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);           // C2, C4, ... element i = generator^i
    static FiniteGroup symmetric3();            // S3 on {0,1,2}
    static FiniteGroup preset(const std::string& name);  // "C1","C2","C3","C4","S3","V4"

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int id() const { return id_; }
    const std::string& name() const { return name_; }

    bool operator==(const FiniteGroup& o) const { return mul_ == o.mul_; }

  private:
    void validate() const;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_ = 0;
    std::string name_;
};

// Subgroups are element bitmasks (group order is capped at 24).
typedef uint32_t SubgroupMask;

class SubgroupLattice {
  public:
    explicit SubgroupLattice(const FiniteGroup& G);

    const FiniteGroup& group() const { return G_; }
    size_t count() const { return subs_.size(); }
    SubgroupMask mask(size_t i) const { return subs_[i]; }
    std::vector<int> elements(size_t i) const;
    int order_of(size_t i) const;

    size_t index_of(SubgroupMask m) const;       // throws if not a subgroup
    bool contains(size_t big, size_t small) const;
    size_t bottom() const { return bottom_; }    // {1}
    size_t topsub() const { return top_; }       // G

    size_t class_count() const { return class_reps_.size(); }
    size_t class_of(size_t sub) const { return class_of_[sub]; }
    size_t class_rep(size_t c) const { return class_reps_[c]; }

    // All subgroups contained in subs_[i] (including it), and the proper ones.
    std::vector<size_t> subgroups_below(size_t i) const;
    std::vector<size_t> proper_subgroups_below(size_t i) const;

    // Independent all-subsets enumeration for small groups (test oracle).
    static std::vector<SubgroupMask> enumerate_by_subsets(const FiniteGroup& G);

  private:
    const FiniteGroup G_;
    std::vector<SubgroupMask> subs_;
    std::vector<size_t> class_of_;
    std::vector<size_t> class_reps_;
    size_t bottom_ = 0, top_ = 0;
};

typedef std::shared_ptr<const SubgroupLattice> LatticePtr;
LatticePtr lattice_of(const FiniteGroup& G);

// Finite G-set with optional G-fixed basepoint.
class FiniteGSet {
  public:
    FiniteGSet(LatticePtr lat, int n_points, std::vector<std::vector<int>> action,
               int basepoint = -1);

    // n disjoint copies of G with left translation ("nG").
    static FiniteGSet free_copies(LatticePtr lat, int n);
    static FiniteGSet trivial(LatticePtr lat, int n_points, int basepoint = -1);

    const SubgroupLattice& lattice() const { return *lat_; }
    LatticePtr lattice_ptr() const { return lat_; }
    int size() const { return n_; }
    int act(int g, int x) const { return action_[g][x]; }
    int basepoint() const { return basepoint_; }

    std::vector<std::vector<int>> orbits(size_t sub) const;
    SubgroupMask stabilizer(int x) const;             // a subgroup mask of G
    std::vector<int> fixed(size_t sub) const;

  private:
    LatticePtr lat_;
    int n_;
    std::vector<std::vector<int>> action_;
    int basepoint_;
};

} // namespace reks

#endif
