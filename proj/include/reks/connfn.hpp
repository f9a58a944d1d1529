#ifndef REKS_CONNFN_HPP
#define REKS_CONNFN_HPP

#include <string>
#include <vector>

#include "reks/group.hpp"
#include "reks/linalg.hpp"

namespace reks {

// Element of Z ∪ {±∞}.  +∞ encodes "weakly contractible"; -∞ only ever
// appears as the "unbounded below" flag of wedge_bound with v = +∞.
struct ExtInt {
    enum Kind { FINITE, PLUS_INF, MINUS_INF } kind = FINITE;
    long long v = 0;

    ExtInt() = default;
    ExtInt(long long x) : kind(FINITE), v(x) {}
    static ExtInt infinity() { return ExtInt{PLUS_INF, 0}; }
    static ExtInt neg_infinity() { return ExtInt{MINUS_INF, 0}; }
    ExtInt(Kind k, long long x) : kind(k), v(x) {}

    bool finite() const { return kind == FINITE; }
    bool operator==(const ExtInt& o) const
    {
        return kind == o.kind && (kind != FINITE || v == o.v);
    }
    bool operator<(const ExtInt& o) const;
    bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }
    ExtInt operator+(const ExtInt& o) const;   // ∞ + k = ∞; ∞ + (-∞) is an error
    ExtInt operator-(const ExtInt& o) const;
    std::string str() const;
};

ExtInt emin(const ExtInt& a, const ExtInt& b);

// Extended rational, same conventions.
struct ExtRat {
    enum Kind { FINITE, PLUS_INF, MINUS_INF } kind = FINITE;
    Rat v = 0;

    ExtRat() = default;
    ExtRat(const Rat& x) : kind(FINITE), v(x) {}
    ExtRat(long long x) : kind(FINITE), v(x) {}
    static ExtRat infinity() { return ExtRat{PLUS_INF, 0}; }
    static ExtRat neg_infinity() { return ExtRat{MINUS_INF, 0}; }
    ExtRat(Kind k, const Rat& x) : kind(k), v(x) {}
    static ExtRat from(const ExtInt& e);

    bool finite() const { return kind == FINITE; }
    bool operator==(const ExtRat& o) const
    {
        return kind == o.kind && (kind != FINITE || v == o.v);
    }
    bool operator<(const ExtRat& o) const;
    bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
    ExtRat operator+(const ExtRat& o) const;
    ExtRat operator-(const ExtRat& o) const;
    ExtInt floor_to_int() const;
    std::string str() const;
};

ExtRat rmin(const ExtRat& a, const ExtRat& b);

// Conjugation-invariant function {H <= G} -> Z ∪ {±∞}, stored per
// conjugacy class of subgroups.
class ConnFn {
  public:
    ConnFn(LatticePtr lat, ExtInt constant = ExtInt(0));
    ConnFn(LatticePtr lat, std::vector<ExtInt> per_class);

    // For Z/2 and other two-class groups: values listed bottom-up,
    // (value at {1}, value at G).
    static ConnFn from_pair(LatticePtr lat, ExtInt at_trivial, ExtInt at_top);

    const SubgroupLattice& lattice() const { return *lat_; }
    LatticePtr lattice_ptr() const { return lat_; }
    ExtInt at_sub(size_t sub) const { return per_class_[lat_->class_of(sub)]; }
    ExtInt at_class(size_t c) const { return per_class_[c]; }
    size_t class_count() const { return per_class_.size(); }

    void set_class(size_t c, ExtInt v) { per_class_[c] = v; }

    ConnFn pointwise_min(const ConnFn& o) const;
    ConnFn pointwise_sum(const ConnFn& o) const;
    ConnFn shift(long long k) const;
    bool leq(const ConnFn& o) const;            // pointwise <=
    bool operator==(const ConnFn& o) const;

    std::string str() const;

  private:
    void check_same_group(const ConnFn& o) const;
    LatticePtr lat_;
    std::vector<ExtInt> per_class_;
};

// Rational-valued variant (used for the excision constants c and q).
class ConnFnQ {
  public:
    ConnFnQ(LatticePtr lat, ExtRat constant = ExtRat(Rat(0)));
    ConnFnQ(LatticePtr lat, std::vector<ExtRat> per_class);
    static ConnFnQ from(const ConnFn& f);

    const SubgroupLattice& lattice() const { return *lat_; }
    LatticePtr lattice_ptr() const { return lat_; }
    ExtRat at_sub(size_t sub) const { return per_class_[lat_->class_of(sub)]; }
    size_t class_count() const { return per_class_.size(); }
    void set_class(size_t c, ExtRat v) { per_class_[c] = v; }
    bool operator==(const ConnFnQ& o) const;
    std::string str() const;

  private:
    LatticePtr lat_;
    std::vector<ExtRat> per_class_;
};

// ν(H) = Σ_i min_{K≤H} (conn e_i(K) − c(K)), evaluated exactly over Q and
// floored to integers at the end.
ConnFn excision_bound(const std::vector<ConnFn>& e_conns, const ConnFnQ& c);
ConnFnQ excision_bound_exact(const std::vector<ConnFn>& e_conns, const ConnFnQ& c);

// ϑ(H) = min{2 conn p(H), min_{K⊊H} conn p(K)} − v(H); the empty minimum
// over proper subgroups of the trivial group is +∞.
ConnFn wedge_bound(const ConnFn& p_conn, const ConnFn& v);

// The connectivity range of the wedge-into-product comparison map:
// ν(H) = min{2 conn p(H) − 1, min_{K⊊H} conn p(K)}.
ConnFn wedge_into_product_bound(const ConnFn& p_conn);

// Analyticity data: Φ satisfies W(v, ρ+1) and E_n(ρ − q/(n+1), ρ+1).
struct AnalyticityCertificate {
    ConnFn rho;
    ConnFnQ q;
    ConnFn v;
};

// Shift a certificate by the connectivity gain of smashing with a fixed
// sphere: ρ'(H) = ρ(H) − gain(H); q and v are transported unchanged.
AnalyticityCertificate certificate_shift(const AnalyticityCertificate& cert,
                                         const ConnFn& smash_gain);

} // namespace reks

#endif
