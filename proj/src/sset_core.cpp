#include "reks/sset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reks {

std::string Simplex::str() const
{
    std::ostringstream ss;
    for (int j : word) ss << "s" << j << " ";
    ss << "(" << (dim - (int)word.size()) << ":" << nd << ")";
    return ss.str();
}

SSet::SSet(LatticePtr lat, int trunc, std::vector<int> n_nd,
           std::vector<std::vector<std::vector<Simplex>>> faces,
           std::vector<std::vector<std::vector<int>>> action, std::string name)
    : lat_(std::move(lat)),
      trunc_(trunc),
      n_nd_(std::move(n_nd)),
      faces_(std::move(faces)),
      action_(std::move(action)),
      name_(std::move(name))
{
    if (trunc_ < 0 || (int)n_nd_.size() != trunc_ + 1)
        throw std::invalid_argument("SSet: bad truncation data");
    if (n_nd_[0] < 1) throw std::invalid_argument("SSet: missing basepoint");
    if (action_.empty()) {
        action_.resize(lat_->group().order());
        for (int g = 0; g < lat_->group().order(); ++g) {
            action_[g].resize(trunc_ + 1);
            for (int n = 0; n <= trunc_; ++n) {
                action_[g][n].resize(n_nd_[n]);
                for (int x = 0; x < n_nd_[n]; ++x) action_[g][n][x] = x;
            }
        }
    }
}

Simplex SSet::base_simplex(int dim) const
{
    Simplex s;
    s.dim = dim;
    s.nd = 0;
    for (int j = dim - 1; j >= 0; --j) s.word.push_back(j);
    return s;
}

Simplex SSet::face(const Simplex& s, int i) const
{
    if (i < 0 || i > s.dim || s.dim == 0) throw std::invalid_argument("SSet::face: bad index");
    if (s.word.empty()) return faces_[s.dim][s.nd][i];
    int j = s.word[0];
    Simplex rest{s.dim - 1, std::vector<int>(s.word.begin() + 1, s.word.end()), s.nd};
    if (i == j || i == j + 1) return rest;
    if (i < j) return degenerate(face(rest, i), j - 1);
    return degenerate(face(rest, i - 1), j);
}

Simplex SSet::degenerate(const Simplex& s, int i) const
{
    if (i < 0 || i > s.dim) throw std::invalid_argument("SSet::degenerate: bad index");
    Simplex out = s;
    out.dim = s.dim + 1;
    // prepend s_i, rewriting with s_i s_j = s_{j+1} s_i for i <= j
    int val = i;
    size_t pos = 0;
    while (pos < out.word.size() && val <= out.word[pos]) {
        out.word[pos] += 1;
        ++pos;
    }
    out.word.insert(out.word.begin() + pos, val);
    return out;
}

Simplex SSet::act(int g, const Simplex& s) const
{
    Simplex out = s;
    out.nd = act_nd(g, s.dim - (int)s.word.size(), s.nd);
    return out;
}

int SSet::act_nd(int g, int dim, int x) const { return action_[g][dim][x]; }

void SSet::build_levels() const
{
    if (!levels_.empty()) return;
    levels_.resize(trunc_ + 1);
    level_idx_.resize(trunc_ + 1);
    for (int n = 0; n <= trunc_; ++n) {
        std::vector<Simplex>& lv = levels_[n];
        // words w strictly decreasing with w[k] <= n-1-k
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& w, int maxval) {
            int m = n - (int)w.size();
            if (m >= 0 && m <= trunc_) {
                for (int x = 0; x < n_nd_[m]; ++x) lv.push_back(Simplex{n, w, x});
            }
            if ((int)w.size() == n) return;
            int cap = std::min(maxval, n - 1 - (int)w.size());
            for (int j = cap; j >= 0; --j) {
                w.push_back(j);
                rec(w, j - 1);
                w.pop_back();
            }
        };
        std::vector<int> w;
        rec(w, n - 1);
        std::sort(lv.begin(), lv.end());
        for (size_t k = 0; k < lv.size(); ++k) level_idx_[n][lv[k]] = k;
    }
}

const std::vector<Simplex>& SSet::level(int n) const
{
    if (n < 0 || n > trunc_) throw std::invalid_argument("SSet::level: out of range");
    build_levels();
    return levels_[n];
}

size_t SSet::index_of(const Simplex& s) const
{
    build_levels();
    auto it = level_idx_[s.dim].find(s);
    if (it == level_idx_[s.dim].end()) throw std::invalid_argument("SSet::index_of: unknown simplex");
    return it->second;
}

size_t SSet::total_nd() const
{
    size_t t = 0;
    for (int n = 0; n <= trunc_; ++n) t += n_nd_[n];
    return t;
}

void SSet::validate() const
{
    const FiniteGroup& G = lat_->group();
    for (int n = 1; n <= trunc_; ++n) {
        if ((int)faces_[n].size() != n_nd_[n])
            throw std::runtime_error("SSet: face table size mismatch at dim " + std::to_string(n));
        for (int x = 0; x < n_nd_[n]; ++x) {
            if ((int)faces_[n][x].size() != n + 1)
                throw std::runtime_error("SSet: wrong number of faces");
            for (int i = 0; i <= n; ++i) {
                const Simplex& f = faces_[n][x][i];
                if (f.dim != n - 1) throw std::runtime_error("SSet: face dimension mismatch");
                int core = f.dim - (int)f.word.size();
                if (core < 0 || f.nd < 0 || f.nd >= n_nd_[core])
                    throw std::runtime_error("SSet: face target out of range");
            }
        }
    }
    // simplicial identity d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= trunc_; ++n)
        for (int x = 0; x < n_nd_[n]; ++x) {
            Simplex s{n, {}, x};
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (!(face(face(s, j), i) == face(face(s, i), j - 1)))
                        throw std::runtime_error("SSet: d_i d_j identity fails");
        }
    // group action: permutations commuting with faces, basepoint fixed
    for (int g = 0; g < G.order(); ++g) {
        for (int n = 0; n <= trunc_; ++n) {
            std::vector<bool> hit(n_nd_[n], false);
            for (int x = 0; x < n_nd_[n]; ++x) {
                int y = action_[g][n][x];
                if (y < 0 || y >= n_nd_[n] || hit[y])
                    throw std::runtime_error("SSet: action is not a permutation");
                hit[y] = true;
            }
        }
        if (action_[g][0][0] != 0) throw std::runtime_error("SSet: basepoint not fixed");
        for (int n = 1; n <= trunc_; ++n)
            for (int x = 0; x < n_nd_[n]; ++x) {
                Simplex s{n, {}, x};
                for (int i = 0; i <= n; ++i) {
                    Simplex lhs = face(act(g, s), i);
                    Simplex rhs = face(s, i);
                    rhs.nd = act_nd(g, rhs.dim - (int)rhs.word.size(), rhs.nd);
                    if (!(lhs == rhs)) throw std::runtime_error("SSet: action not simplicial");
                }
            }
    }
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            for (int n = 0; n <= trunc_; ++n)
                for (int x = 0; x < n_nd_[n]; ++x)
                    if (action_[G.mul(g, h)][n][x] != action_[g][n][action_[h][n][x]])
                        throw std::runtime_error("SSet: not a group action");
}

Simplex SMap::apply(const Simplex& s) const
{
    int core_dim = s.dim - (int)s.word.size();
    Simplex out = img[core_dim][s.nd];
    for (size_t k = s.word.size(); k-- > 0;) out = dst->degenerate(out, s.word[k]);
    return out;
}

void SMap::validate(bool check_equivariance) const
{
    for (int n = 0; n <= src->trunc(); ++n)
        if ((int)img[n].size() != src->n_nd(n))
            throw std::runtime_error("SMap: image table size mismatch");
    if (!(img[0][0].dim == 0 && img[0][0].nd == 0))
        throw std::runtime_error("SMap: basepoint not preserved");
    for (int n = 1; n <= src->trunc(); ++n)
        for (int x = 0; x < src->n_nd(n); ++x) {
            Simplex s{n, {}, x};
            for (int i = 0; i <= n; ++i)
                if (!(dst->face(apply(s), i) == apply(src->face(s, i))))
                    throw std::runtime_error("SMap: does not commute with faces");
        }
    if (check_equivariance) {
        const FiniteGroup& G = src->group();
        if (!(G == dst->group())) throw std::runtime_error("SMap: group mismatch");
        for (int g = 0; g < G.order(); ++g)
            for (int n = 0; n <= src->trunc(); ++n)
                for (int x = 0; x < src->n_nd(n); ++x) {
                    Simplex s{n, {}, x};
                    if (!(apply(src->act(g, s)) == dst->act(g, apply(s))))
                        throw std::runtime_error("SMap: not equivariant");
                }
    }
}

bool SMap::is_identity() const
{
    if (src != dst) return false;
    for (int n = 0; n <= src->trunc(); ++n)
        for (int x = 0; x < src->n_nd(n); ++x) {
            const Simplex& s = img[n][x];
            if (!(s.word.empty() && s.nd == x)) return false;
        }
    return true;
}

bool SMap::levelwise_injective_nd() const
{
    for (int n = 0; n <= src->trunc(); ++n) {
        std::vector<Simplex> seen;
        for (int x = 0; x < src->n_nd(n); ++x) {
            const Simplex& s = img[n][x];
            if (s.degenerate()) return false;
            seen.push_back(s);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

SMap identity_map(SSetPtr x)
{
    SMap f;
    f.src = x;
    f.dst = x;
    f.img.resize(x->trunc() + 1);
    for (int n = 0; n <= x->trunc(); ++n)
        for (int k = 0; k < x->n_nd(n); ++k) f.img[n].push_back(Simplex{n, {}, k});
    return f;
}

SMap compose(const SMap& g, const SMap& f)
{
    if (f.dst != g.src) throw std::invalid_argument("compose: middle objects differ");
    SMap out;
    out.src = f.src;
    out.dst = g.dst;
    out.img.resize(f.src->trunc() + 1);
    for (int n = 0; n <= f.src->trunc(); ++n)
        for (int x = 0; x < f.src->n_nd(n); ++x) out.img[n].push_back(g.apply(f.img[n][x]));
    return out;
}

SMap constant_map(SSetPtr x, SSetPtr y)
{
    SMap f;
    f.src = x;
    f.dst = y;
    f.img.resize(x->trunc() + 1);
    for (int n = 0; n <= x->trunc(); ++n)
        for (int k = 0; k < x->n_nd(n); ++k) f.img[n].push_back(y->base_simplex(n));
    return f;
}

} // namespace reks
