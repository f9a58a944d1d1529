#include "reks/connfn.hpp"

#include <sstream>
#include <stdexcept>

namespace reks {

bool ExtInt::operator<(const ExtInt& o) const
{
    if (kind == MINUS_INF) return o.kind != MINUS_INF;
    if (kind == PLUS_INF) return false;
    if (o.kind == PLUS_INF) return true;
    if (o.kind == MINUS_INF) return false;
    return v < o.v;
}

ExtInt ExtInt::operator+(const ExtInt& o) const
{
    if (kind == FINITE && o.kind == FINITE) return ExtInt(v + o.v);
    if (kind == PLUS_INF && o.kind == MINUS_INF)
        throw std::invalid_argument("ExtInt: ∞ + (-∞)");
    if (kind == MINUS_INF && o.kind == PLUS_INF)
        throw std::invalid_argument("ExtInt: -∞ + ∞");
    if (kind == PLUS_INF || o.kind == PLUS_INF) return infinity();
    return neg_infinity();
}

ExtInt ExtInt::operator-(const ExtInt& o) const
{
    ExtInt neg = o;
    if (neg.kind == PLUS_INF) neg.kind = MINUS_INF;
    else if (neg.kind == MINUS_INF) neg.kind = PLUS_INF;
    else neg.v = -neg.v;
    return *this + neg;
}

std::string ExtInt::str() const
{
    if (kind == PLUS_INF) return "inf";
    if (kind == MINUS_INF) return "-inf";
    return std::to_string(v);
}

ExtInt emin(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

ExtRat ExtRat::from(const ExtInt& e)
{
    if (e.kind == ExtInt::PLUS_INF) return infinity();
    if (e.kind == ExtInt::MINUS_INF) return neg_infinity();
    return ExtRat(Rat(e.v));
}

bool ExtRat::operator<(const ExtRat& o) const
{
    if (kind == MINUS_INF) return o.kind != MINUS_INF;
    if (kind == PLUS_INF) return false;
    if (o.kind == PLUS_INF) return true;
    if (o.kind == MINUS_INF) return false;
    return v < o.v;
}

ExtRat ExtRat::operator+(const ExtRat& o) const
{
    if (kind == FINITE && o.kind == FINITE) return ExtRat(v + o.v);
    if ((kind == PLUS_INF && o.kind == MINUS_INF) || (kind == MINUS_INF && o.kind == PLUS_INF))
        throw std::invalid_argument("ExtRat: ∞ + (-∞)");
    if (kind == PLUS_INF || o.kind == PLUS_INF) return infinity();
    return neg_infinity();
}

ExtRat ExtRat::operator-(const ExtRat& o) const
{
    ExtRat neg = o;
    if (neg.kind == PLUS_INF) neg.kind = MINUS_INF;
    else if (neg.kind == MINUS_INF) neg.kind = PLUS_INF;
    else neg.v = -neg.v;
    return *this + neg;
}

ExtInt ExtRat::floor_to_int() const
{
    if (kind == PLUS_INF) return ExtInt::infinity();
    if (kind == MINUS_INF) return ExtInt::neg_infinity();
    Int num = numerator(v), den = denominator(v);
    Int q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) q -= 1;
    return ExtInt(q.convert_to<long long>());
}

std::string ExtRat::str() const
{
    if (kind == PLUS_INF) return "inf";
    if (kind == MINUS_INF) return "-inf";
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

ExtRat rmin(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

ConnFn::ConnFn(LatticePtr lat, ExtInt constant)
    : lat_(std::move(lat)), per_class_(lat_->class_count(), constant)
{
}

ConnFn::ConnFn(LatticePtr lat, std::vector<ExtInt> per_class)
    : lat_(std::move(lat)), per_class_(std::move(per_class))
{
    if (per_class_.size() != lat_->class_count())
        throw std::invalid_argument("ConnFn: class count mismatch");
}

ConnFn ConnFn::from_pair(LatticePtr lat, ExtInt at_trivial, ExtInt at_top)
{
    if (lat->class_count() != 2)
        throw std::invalid_argument("ConnFn::from_pair: group does not have exactly 2 classes");
    ConnFn f(lat);
    f.per_class_[lat->class_of(lat->bottom())] = at_trivial;
    f.per_class_[lat->class_of(lat->topsub())] = at_top;
    return f;
}

void ConnFn::check_same_group(const ConnFn& o) const
{
    if (!(lat_->group() == o.lat_->group()))
        throw std::invalid_argument("ConnFn: operands over different groups");
}

ConnFn ConnFn::pointwise_min(const ConnFn& o) const
{
    check_same_group(o);
    ConnFn out = *this;
    for (size_t c = 0; c < per_class_.size(); ++c)
        out.per_class_[c] = emin(per_class_[c], o.per_class_[c]);
    return out;
}

ConnFn ConnFn::pointwise_sum(const ConnFn& o) const
{
    check_same_group(o);
    ConnFn out = *this;
    for (size_t c = 0; c < per_class_.size(); ++c)
        out.per_class_[c] = per_class_[c] + o.per_class_[c];
    return out;
}

ConnFn ConnFn::shift(long long k) const
{
    ConnFn out = *this;
    for (auto& x : out.per_class_) x = x + ExtInt(k);
    return out;
}

bool ConnFn::leq(const ConnFn& o) const
{
    check_same_group(o);
    for (size_t c = 0; c < per_class_.size(); ++c)
        if (!(per_class_[c] <= o.per_class_[c])) return false;
    return true;
}

bool ConnFn::operator==(const ConnFn& o) const
{
    return lat_->group() == o.lat_->group() && per_class_ == o.per_class_;
}

std::string ConnFn::str() const
{
    std::ostringstream ss;
    ss << "(";
    for (size_t c = 0; c < per_class_.size(); ++c) {
        size_t rep = lat_->class_rep(c);
        ss << (c ? ", " : "") << "|H|=" << lat_->order_of(rep) << ":" << per_class_[c].str();
    }
    ss << ")";
    return ss.str();
}

ConnFnQ::ConnFnQ(LatticePtr lat, ExtRat constant)
    : lat_(std::move(lat)), per_class_(lat_->class_count(), constant)
{
}

ConnFnQ::ConnFnQ(LatticePtr lat, std::vector<ExtRat> per_class)
    : lat_(std::move(lat)), per_class_(std::move(per_class))
{
    if (per_class_.size() != lat_->class_count())
        throw std::invalid_argument("ConnFnQ: class count mismatch");
}

ConnFnQ ConnFnQ::from(const ConnFn& f)
{
    ConnFnQ out(f.lattice_ptr());
    for (size_t c = 0; c < out.class_count(); ++c)
        out.per_class_[c] = ExtRat::from(f.at_class(c));
    return out;
}

bool ConnFnQ::operator==(const ConnFnQ& o) const
{
    return lat_->group() == o.lat_->group() && per_class_ == o.per_class_;
}

std::string ConnFnQ::str() const
{
    std::ostringstream ss;
    ss << "(";
    for (size_t c = 0; c < per_class_.size(); ++c)
        ss << (c ? ", " : "") << per_class_[c].str();
    ss << ")";
    return ss.str();
}

ConnFnQ excision_bound_exact(const std::vector<ConnFn>& e_conns, const ConnFnQ& c)
{
    if (e_conns.empty()) throw std::invalid_argument("excision_bound: no initial maps");
    LatticePtr lat = e_conns[0].lattice_ptr();
    for (const ConnFn& e : e_conns)
        if (!(e.lattice().group() == lat->group()))
            throw std::invalid_argument("excision_bound: mixed groups");
    if (!(c.lattice().group() == lat->group()))
        throw std::invalid_argument("excision_bound: c over a different group");

    ConnFnQ nu(lat, ExtRat(Rat(0)));
    for (size_t cls = 0; cls < lat->class_count(); ++cls) {
        size_t H = lat->class_rep(cls);
        ExtRat total(Rat(0));
        for (const ConnFn& e : e_conns) {
            ExtRat m = ExtRat::infinity();   // empty-min convention
            for (size_t K : lat->subgroups_below(H))
                m = rmin(m, ExtRat::from(e.at_sub(K)) - c.at_sub(K));
            total = total + m;
        }
        nu.set_class(cls, total);
    }
    return nu;
}

ConnFn excision_bound(const std::vector<ConnFn>& e_conns, const ConnFnQ& c)
{
    ConnFnQ exact = excision_bound_exact(e_conns, c);
    ConnFn out(e_conns[0].lattice_ptr());
    for (size_t cls = 0; cls < out.class_count(); ++cls)
        out.set_class(cls, exact.at_sub(out.lattice().class_rep(cls)).floor_to_int());
    return out;
}

ConnFn wedge_bound(const ConnFn& p_conn, const ConnFn& v)
{
    if (!(p_conn.lattice().group() == v.lattice().group()))
        throw std::invalid_argument("wedge_bound: mixed groups");
    const SubgroupLattice& lat = p_conn.lattice();
    ConnFn out(p_conn.lattice_ptr());
    for (size_t cls = 0; cls < lat.class_count(); ++cls) {
        size_t H = lat.class_rep(cls);
        ExtInt twice = p_conn.at_sub(H) + p_conn.at_sub(H);
        ExtInt m = ExtInt::infinity();
        for (size_t K : lat.proper_subgroups_below(H)) m = emin(m, p_conn.at_sub(K));
        out.set_class(cls, emin(twice, m) - v.at_sub(H));
    }
    return out;
}

ConnFn wedge_into_product_bound(const ConnFn& p_conn)
{
    const SubgroupLattice& lat = p_conn.lattice();
    ConnFn out(p_conn.lattice_ptr());
    for (size_t cls = 0; cls < lat.class_count(); ++cls) {
        size_t H = lat.class_rep(cls);
        ExtInt twice = p_conn.at_sub(H) + p_conn.at_sub(H) - ExtInt(1);
        ExtInt m = ExtInt::infinity();
        for (size_t K : lat.proper_subgroups_below(H)) m = emin(m, p_conn.at_sub(K));
        out.set_class(cls, emin(twice, m));
    }
    return out;
}

AnalyticityCertificate certificate_shift(const AnalyticityCertificate& cert,
                                         const ConnFn& smash_gain)
{
    AnalyticityCertificate out = cert;
    ConnFn neg = smash_gain;
    for (size_t c = 0; c < neg.class_count(); ++c) {
        ExtInt g = smash_gain.at_class(c);
        if (!g.finite())
            throw std::invalid_argument("certificate_shift: shift values must be finite");
        out.rho.set_class(c, cert.rho.at_class(c) - g);
    }
    return out;
}

} // namespace reks
