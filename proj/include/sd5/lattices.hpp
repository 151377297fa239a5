#pragma once

// Positive-definite integral lattices given by Gram matrices.
//
// The Gram matrix is the source of truth. A lattice may also carry basis
// provenance: integer ambient coordinates B and a scale s with
// gram = B B^T / s, so the ambient inner product is (dot product) / s.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sd5/algebra.hpp"

namespace sd5 {

struct BasisProvenance {
    ZMatrix basis;  // dim rows, ambient columns
    Int scale = 1;
    friend bool operator==(const BasisProvenance&, const BasisProvenance&) = default;
};

struct decomposition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GramLattice {
public:
    GramLattice() = default;

    explicit GramLattice(ZMatrix gram, std::optional<BasisProvenance> provenance = std::nullopt)
        : gram_(std::move(gram)), provenance_(std::move(provenance)) {
        if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix is not square");
        if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix is not symmetric");
        for (const auto& m : leading_principal_minors(gram_))
            if (m <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
        if (provenance_) {
            const auto& b = provenance_->basis;
            if (provenance_->scale <= 0) throw std::invalid_argument("basis scale must be positive");
            if (b.rows() != gram_.rows()) throw std::invalid_argument("basis row count differs from Gram dimension");
            const ZMatrix bbt = b * b.transpose();
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < dim(); ++j)
                    if (bbt(i, j) != detail::mul(gram_(i, j), provenance_->scale))
                        throw std::invalid_argument("basis provenance does not reproduce the Gram matrix");
        }
    }

    /// Lattice spanned by the rows of `basis` under the inner product dot / scale.
    /// Throws if the Gram matrix is not integral.
    static GramLattice from_basis(const ZMatrix& basis, Int scale) {
        const ZMatrix bbt = basis * basis.transpose();
        ZMatrix g(bbt.rows(), bbt.cols());
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) {
                if (bbt(i, j) % scale != 0)
                    throw std::invalid_argument("basis inner products are not integral at scale " +
                                                std::to_string(scale));
                g(i, j) = bbt(i, j) / scale;
            }
        return GramLattice(g, BasisProvenance{basis, scale});
    }

    std::size_t dim() const noexcept { return gram_.rows(); }
    const ZMatrix& gram() const noexcept { return gram_; }
    const std::optional<BasisProvenance>& provenance() const noexcept { return provenance_; }

    /// Inner product of two coefficient vectors.
    Int inner(std::span<const Int> u, std::span<const Int> v) const { return dot(row_times(u, gram_), v); }
    Int norm(std::span<const Int> u) const { return inner(u, u); }

    /// Ambient coordinates of a coefficient vector (needs provenance).
    std::vector<Int> ambient(std::span<const Int> coeffs) const {
        if (!provenance_) throw std::logic_error("lattice has no basis provenance");
        return row_times(coeffs, provenance_->basis);
    }

    friend bool operator==(const GramLattice&, const GramLattice&) = default;

private:
    ZMatrix gram_;
    std::optional<BasisProvenance> provenance_;
};

inline Int determinant(const GramLattice& l) { return determinant(l.gram()); }
inline bool is_unimodular(const GramLattice& l) { return determinant(l) == 1; }

/// Even iff every diagonal Gram entry is even (valid for integral lattices).
inline bool is_even(const GramLattice& l) {
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (l.gram()(i, i) % 2 != 0) return false;
    return true;
}

/// Basis change: the rows of `t` express new basis vectors in the old basis.
inline GramLattice transform_basis(const GramLattice& l, const ZMatrix& t) {
    const ZMatrix g = t * l.gram() * t.transpose();
    std::optional<BasisProvenance> prov;
    if (l.provenance()) prov = BasisProvenance{t * l.provenance()->basis, l.provenance()->scale};
    return GramLattice(g, std::move(prov));
}

struct Rational {
    Int num = 99, den = 100;
};

struct LllResult {
    GramLattice lattice;
    ZMatrix transform;  // unimodular; reduced basis = transform * original basis
};

/// Integral LLL on the Gram matrix (exact rational arithmetic on the
/// Gram-Schmidt data via the d_i / lambda_ij representation).
inline LllResult lll_reduce(const GramLattice& l, Rational delta = {}) {
    if (!(4 * delta.num > delta.den && delta.num < delta.den && delta.den > 0))
        throw std::invalid_argument("LLL parameter must lie in (1/4, 1)");
    const std::size_t n = l.dim();
    if (n == 0) return {l, ZMatrix()};

    // 1-indexed working arrays
    std::vector<std::vector<BigInt>> g(n + 1, std::vector<BigInt>(n + 1, 0));
    std::vector<std::vector<BigInt>> h(n + 1, std::vector<BigInt>(n + 1, 0));
    std::vector<std::vector<BigInt>> lam(n + 1, std::vector<BigInt>(n + 1, 0));
    std::vector<BigInt> d(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        h[i][i] = 1;
        for (std::size_t j = 1; j <= n; ++j) g[i][j] = l.gram()(i - 1, j - 1);
    }
    const BigInt p = delta.num, q = delta.den;

    auto red = [&](std::size_t k, std::size_t m) {
        if (2 * boost::multiprecision::abs(lam[k][m]) <= d[m]) return;
        const BigInt r = detail::floor_div(BigInt(2 * lam[k][m] + d[m]), BigInt(2 * d[m]));
        for (std::size_t j = 1; j <= n; ++j) h[k][j] -= r * h[m][j];
        for (std::size_t j = 1; j <= n; ++j) g[k][j] -= r * g[m][j];
        for (std::size_t j = 1; j <= n; ++j) g[j][k] = (j == k) ? g[k][k] - r * g[k][m] : g[k][j];
        lam[k][m] -= r * d[m];
        for (std::size_t i = 1; i < m; ++i) lam[k][i] -= r * lam[m][i];
    };

    std::size_t kmax = 1;
    d[0] = 1;
    d[1] = g[1][1];
    std::size_t k = 2;
    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                BigInt u = g[k][j];
                for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
                if (j < k)
                    lam[k][j] = u;
                else {
                    if (u == 0) throw std::invalid_argument("LLL: Gram matrix is singular");
                    d[k] = u;
                }
            }
        }
        red(k, k - 1);
        if (q * d[k] * d[k - 2] < p * d[k - 1] * d[k - 1] - q * lam[k][k - 1] * lam[k][k - 1]) {
            std::swap(h[k], h[k - 1]);
            std::swap(g[k], g[k - 1]);
            for (std::size_t j = 1; j <= n; ++j) std::swap(g[j][k], g[j][k - 1]);
            for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
            const BigInt lm = lam[k][k - 1];
            const BigInt b = (d[k - 2] * d[k] + lm * lm) / d[k - 1];
            for (std::size_t i = k + 1; i <= kmax; ++i) {
                const BigInt t = lam[i][k];
                lam[i][k] = (d[k] * lam[i][k - 1] - lm * t) / d[k - 1];
                lam[i][k - 1] = (b * t + lm * lam[i][k]) / d[k];
            }
            d[k - 1] = b;
            if (k > 2) --k;
        } else {
            for (std::size_t m = k - 1; m-- > 1;) red(k, m);
            ++k;
        }
    }

    ZMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = detail::narrow(h[i + 1][j + 1]);
    return {transform_basis(l, t), t};
}

/// Exact check of size reduction and the Lovasz condition.
inline bool is_lll_reduced(const GramLattice& l, Rational delta = {}) {
    const std::size_t n = l.dim();
    // Gram-Schmidt over rationals via d_i and lambda_ij.
    std::vector<std::vector<BigInt>> lam(n, std::vector<BigInt>(n, 0));
    std::vector<BigInt> d(n + 1, 0);
    d[0] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt u = l.gram()(k, j);
            for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
            if (j < k)
                lam[k][j] = u;
            else
                d[k + 1] = u;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < k; ++j)
            if (2 * boost::multiprecision::abs(lam[k][j]) > d[j + 1]) return false;
    for (std::size_t k = 1; k < n; ++k) {
        // d_{k+1} d_{k-1} >= delta d_k^2 - lambda_{k,k-1}^2
        if (delta.den * d[k + 1] * d[k - 1] < delta.num * d[k] * d[k] - delta.den * lam[k][k - 1] * lam[k][k - 1])
            return false;
    }
    return true;
}

namespace detail {

// Fincke-Pohst enumeration of coefficient vectors x != 0 with x G x^T <= bound,
// one per +/- pair (highest nonzero coordinate positive). Floating Cholesky
// only prunes; every emitted vector has its norm recomputed exactly.
class FinckePohst {
public:
    static constexpr long double kSlack = 1.0L + 1.0L / (1 << 20);

    FinckePohst(const ZMatrix& gram, Int bound) : g_(gram), n_(gram.rows()), bound_(bound) {
        r_.assign(n_, 0);
        mu_.assign(n_, std::vector<long double>(n_, 0));
        for (std::size_t k = 0; k < n_; ++k) {
            long double rk = static_cast<long double>(g_(k, k));
            for (std::size_t j = 0; j < k; ++j) rk -= mu_[k][j] * mu_[k][j] * r_[j];
            r_[k] = rk;
            for (std::size_t i = k + 1; i < n_; ++i) {
                long double v = static_cast<long double>(g_(i, k));
                for (std::size_t j = 0; j < k; ++j) v -= mu_[i][j] * mu_[k][j] * r_[j];
                mu_[i][k] = v / rk;
            }
        }
        x_.assign(n_, 0);
        radius_ = static_cast<long double>(bound) * kSlack;
    }

    template <class Emit>
    void run(Emit&& emit) {
        if (n_ == 0 || bound_ <= 0) return;
        descend(n_ - 1, 0.0L, true, emit);
    }

private:
    template <class Emit>
    void descend(std::size_t k, long double partial, bool upper_zero, Emit& emit) {
        long double c = 0;
        for (std::size_t i = k + 1; i < n_; ++i) c -= mu_[i][k] * static_cast<long double>(x_[i]);
        const long double rem = radius_ - partial;
        if (rem < 0) return;
        const long double half = std::sqrt(rem / r_[k]);
        Int lo = static_cast<Int>(std::ceil(c - half));
        const Int hi = static_cast<Int>(std::floor(c + half));
        if (upper_zero) lo = std::max<Int>(lo, 0);
        for (Int v = lo; v <= hi; ++v) {
            x_[k] = v;
            const long double diff = static_cast<long double>(v) - c;
            const long double next = partial + r_[k] * diff * diff;
            if (next > radius_) continue;
            if (k == 0) {
                if (upper_zero && v == 0) continue;
                const Int norm = exact_norm();
                if (norm <= bound_) emit(x_, norm);
            } else {
                descend(k - 1, next, upper_zero && v == 0, emit);
            }
        }
        x_[k] = 0;
    }

    Int exact_norm() const {
        Int acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!x_[i]) continue;
            Int row = 0;
            for (std::size_t j = 0; j < n_; ++j)
                if (x_[j]) row = add(row, mul(g_(i, j), x_[j]));
            acc = add(acc, mul(x_[i], row));
        }
        return acc;
    }

    const ZMatrix& g_;
    std::size_t n_;
    Int bound_;
    long double radius_ = 0;
    std::vector<long double> r_;
    std::vector<std::vector<long double>> mu_;
    std::vector<Int> x_;
};

inline void canonical_sign(std::vector<Int>& v) {
    for (auto x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

}  // namespace detail

struct ShortVector {
    std::vector<Int> coefficients;  // in the lattice's own basis
    Int norm = 0;
    friend bool operator==(const ShortVector&, const ShortVector&) = default;
};

struct ShortVectorReport {
    Int bound = 0;
    std::vector<ShortVector> vectors;        // one per +/- pair, first nonzero coefficient positive
    std::map<Int, std::uint64_t> counts_by_norm;  // full counts, both signs

    std::uint64_t count(Int norm) const {
        auto it = counts_by_norm.find(norm);
        return it == counts_by_norm.end() ? 0 : it->second;
    }
};

/// All nonzero lattice vectors of norm <= bound, after LLL preprocessing.
inline ShortVectorReport short_vectors(const GramLattice& l, Int bound) {
    if (bound < 0) throw std::invalid_argument("short_vectors: negative bound");
    ShortVectorReport rep;
    rep.bound = bound;
    if (l.dim() == 0) return rep;
    const LllResult red = lll_reduce(l);
    detail::FinckePohst fp(red.lattice.gram(), bound);
    fp.run([&](const std::vector<Int>& x, Int norm) {
        auto coeffs = row_times(x, red.transform);
        detail::canonical_sign(coeffs);
        rep.vectors.push_back({std::move(coeffs), norm});
        rep.counts_by_norm[norm] += 2;
    });
    std::sort(rep.vectors.begin(), rep.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.coefficients < b.coefficients;
    });
    return rep;
}

struct MinimumData {
    Int norm = 0;
    std::uint64_t kissing = 0;
};

/// Minimum norm and kissing number. The search bound is the smallest diagonal
/// entry of the reduced Gram matrix, which a basis vector attains.
inline MinimumData minimum_data(const GramLattice& l) {
    if (l.dim() == 0) throw std::invalid_argument("minimum of the zero lattice is undefined");
    const LllResult red = lll_reduce(l);
    Int bound = red.lattice.gram()(0, 0);
    for (std::size_t i = 0; i < l.dim(); ++i) bound = std::min(bound, red.lattice.gram()(i, i));
    const auto rep = short_vectors(l, bound);
    if (rep.counts_by_norm.empty()) throw std::logic_error("no vector found below a basis norm");
    return {rep.counts_by_norm.begin()->first, rep.counts_by_norm.begin()->second};
}

inline Int minimum_norm(const GramLattice& l) { return minimum_data(l).norm; }
inline std::uint64_t kissing_number(const GramLattice& l) { return minimum_data(l).kissing; }

/// a_0..a_max: number of lattice vectors of each norm.
inline std::vector<std::uint64_t> theta_series(const GramLattice& l, Int max_norm) {
    if (max_norm < 0) throw std::invalid_argument("theta_series: negative bound");
    std::vector<std::uint64_t> a(static_cast<std::size_t>(max_norm) + 1, 0);
    a[0] = 1;
    for (const auto& [norm, count] : short_vectors(l, max_norm).counts_by_norm) a[static_cast<std::size_t>(norm)] = count;
    return a;
}

/// Block-diagonal sum. Provenance is kept when both summands carry it at the
/// same scale (ambient frames are concatenated).
inline GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
    const std::size_t n = a.dim() + b.dim();
    ZMatrix g(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.gram()(i, j);
    std::optional<BasisProvenance> prov;
    if (a.provenance() && b.provenance() && a.provenance()->scale == b.provenance()->scale) {
        const auto& ba = a.provenance()->basis;
        const auto& bb = b.provenance()->basis;
        ZMatrix basis(n, ba.cols() + bb.cols());
        for (std::size_t i = 0; i < ba.rows(); ++i)
            for (std::size_t j = 0; j < ba.cols(); ++j) basis(i, j) = ba(i, j);
        for (std::size_t i = 0; i < bb.rows(); ++i)
            for (std::size_t j = 0; j < bb.cols(); ++j) basis(ba.rows() + i, ba.cols() + j) = bb(i, j);
        prov = BasisProvenance{basis, a.provenance()->scale};
    }
    return GramLattice(g, std::move(prov));
}

inline GramLattice zn(std::size_t n) { return GramLattice::from_basis(ZMatrix::identity(n), 1); }

/// D_n: basis e_1 - e_2, ..., e_{n-1} - e_n, e_{n-1} + e_n.
inline GramLattice dn(std::size_t n) {
    if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
    ZMatrix b(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        b(i, i) = 1;
        b(i, i + 1) = -1;
    }
    b(n - 1, n - 2) = 1;
    b(n - 1, n - 1) = 1;
    return GramLattice::from_basis(b, 1);
}

/// D_n^+: the D_n basis with e_1 - e_2 replaced by the glue g = (1/2, ..., 1/2).
/// Swapping a basis vector for g scales the determinant by |c|/2, where c is
/// that vector's coefficient in 2g; e_1 - e_2 has c = 1. Ambient coordinates
/// are doubled (scale 4).
inline GramLattice dn_plus(std::size_t n) {
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("D_n^+ is integral only for n divisible by 4");
    ZMatrix b(n, n);
    for (std::size_t j = 0; j < n; ++j) b(0, j) = 1;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        b(i, i) = 2;
        b(i, i + 1) = -2;
    }
    b(n - 1, n - 2) = 2;
    b(n - 1, n - 1) = 2;
    return GramLattice::from_basis(b, 4);
}

/// Whether the ambient integer vector v lies in the lattice.
inline bool member(const GramLattice& l, std::span<const Int> v, Int scale) {
    if (!l.provenance()) throw std::invalid_argument("membership needs basis provenance");
    if (l.provenance()->scale != scale) throw std::invalid_argument("ambient scale mismatch");
    if (v.size() != l.provenance()->basis.cols()) throw std::invalid_argument("ambient dimension mismatch");
    return solve_integer(l.provenance()->basis, v).has_value();
}

struct LatticeComponent {
    GramLattice lattice;  // carries ambient provenance when the parent does
    ZMatrix coordinates;  // component basis in the parent's basis (HNF rows)
};

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

inline bool generates_full_lattice(const std::vector<std::vector<Int>>& rows, std::size_t n) {
    if (rows.empty()) return false;
    const ZMatrix h = hnf(ZMatrix::from_rows(rows, n));
    if (h.rows() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (h(i, i) != 1) return false;
    return true;
}

}  // namespace detail

/// Orthogonal decomposition into indecomposable summands.
///
/// Short vectors up to a bound b that generate L are collected (b grows from
/// the smallest reduced diagonal entry up to the largest, which always
/// suffices). Vectors v with some shorter x satisfying |<x,v>| = <x,x> split
/// as x + (v - x) orthogonally and are dropped; the remaining indecomposable
/// vectors fall into connected components under non-orthogonality, and each
/// component spans one summand. Exhaustion is checked by dimension and
/// determinant.
inline std::vector<LatticeComponent> decompose(const GramLattice& l) {
    const std::size_t n = l.dim();
    if (n == 0) return {};
    const LllResult red = lll_reduce(l);
    const ZMatrix& rg = red.lattice.gram();
    Int lo = rg(0, 0), hi = rg(0, 0);
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, rg(i, i));
        hi = std::max(hi, rg(i, i));
    }

    std::vector<ShortVector> vecs;
    for (Int b = lo; b <= hi; ++b) {
        vecs.clear();
        detail::FinckePohst fp(rg, b);
        fp.run([&](const std::vector<Int>& x, Int norm) { vecs.push_back({x, norm}); });
        std::vector<std::vector<Int>> rows;
        rows.reserve(vecs.size());
        for (const auto& v : vecs) rows.push_back(v.coefficients);
        if (detail::generates_full_lattice(rows, n)) break;
        if (b == hi) throw decomposition_error("short vectors up to the largest reduced diagonal do not generate");
    }
    std::stable_sort(vecs.begin(), vecs.end(), [](const ShortVector& a, const ShortVector& b) { return a.norm < b.norm; });

    const std::size_t m = vecs.size();
    std::vector<std::vector<Int>> gv(m);
    for (std::size_t i = 0; i < m; ++i) gv[i] = row_times(vecs[i].coefficients, rg);

    std::vector<std::size_t> indec;
    for (std::size_t i = 0; i < m; ++i) {
        bool decomposable = false;
        for (std::size_t j = 0; j < m && vecs[j].norm < vecs[i].norm; ++j) {
            const Int ip = dot(vecs[i].coefficients, gv[j]);
            if (ip == vecs[j].norm || ip == -vecs[j].norm) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) indec.push_back(i);
    }

    detail::DisjointSets sets(indec.size());
    for (std::size_t a = 0; a < indec.size(); ++a)
        for (std::size_t b = a + 1; b < indec.size(); ++b)
            if (dot(vecs[indec[a]].coefficients, gv[indec[b]]) != 0) sets.unite(a, b);

    std::map<std::size_t, std::vector<std::vector<Int>>> groups;
    for (std::size_t a = 0; a < indec.size(); ++a)
        groups[sets.find(a)].push_back(row_times(vecs[indec[a]].coefficients, red.transform));

    std::vector<LatticeComponent> out;
    std::size_t total_dim = 0;
    BigInt det_product = 1;
    for (auto& [root, rows] : groups) {
        const ZMatrix coords = hnf(ZMatrix::from_rows(rows, n));
        GramLattice comp = transform_basis(l, coords);
        total_dim += comp.dim();
        det_product *= determinant_big(comp.gram());
        out.push_back({std::move(comp), coords});
    }
    if (total_dim != n || det_product != determinant_big(l.gram()))
        throw decomposition_error("components do not exhaust the lattice");

    std::sort(out.begin(), out.end(), [](const LatticeComponent& a, const LatticeComponent& b) {
        return a.coordinates.to_rows() > b.coordinates.to_rows();
    });
    return out;
}

}  // namespace sd5
