#pragma once

// Exact linear algebra over prime fields F_p and over the integers.
//
// FpMatrix stores canonical residues 0..p-1. ZMatrix stores 64-bit integers;
// every arithmetic step on ZMatrix entries is overflow-checked, and the
// algorithms that can grow entries (HNF, integer solves) rerun on
// boost::multiprecision::cpp_int when the 64-bit path overflows.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sd5 {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}
inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}
inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}
inline Int neg(Int a) { return sub(0, a); }
inline Int abs(Int a) { return a < 0 ? neg(a) : a; }
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt abs(const BigInt& a) { return boost::multiprecision::abs(a); }
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int narrow(const BigInt& v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw overflow_error("value does not fit in 64 bits");
    return static_cast<Int>(v);
}
inline Int narrow(Int v) { return v; }

template <class T>
std::vector<std::vector<T>> widen(const std::vector<std::vector<Int>>& rows) {
    std::vector<std::vector<T>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i].assign(rows[i].begin(), rows[i].end());
    return out;
}

template <class T>
std::vector<std::vector<Int>> narrow_rows(const std::vector<std::vector<T>>& rows) {
    std::vector<std::vector<Int>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i].reserve(rows[i].size());
        for (const auto& v : rows[i]) out[i].push_back(narrow(v));
    }
    return out;
}

// Runs fn<Int>() and, if it overflows, fn<BigInt>().
template <class Fn>
auto with_fallback(Fn&& fn) {
    try {
        return fn.template operator()<Int>();
    } catch (const overflow_error&) {
        return fn.template operator()<BigInt>();
    }
}

}  // namespace detail

constexpr bool is_prime(unsigned v) {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

/// Arithmetic tables for F_p, 3 <= p <= 31.
class PrimeField {
public:
    static constexpr unsigned kMaxPrime = 31;

    explicit PrimeField(unsigned p) : p_(p) {
        if (p < 3 || p > kMaxPrime || !is_prime(p))
            throw std::invalid_argument("field modulus must be an odd prime in [3, 31], got " + std::to_string(p));
        inv_.fill(0);
        for (unsigned a = 1; a < p; ++a)
            for (unsigned b = 1; b < p; ++b)
                if (a * b % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }

    unsigned modulus() const noexcept { return p_; }
    std::uint8_t add(unsigned a, unsigned b) const noexcept { return static_cast<std::uint8_t>((a + b) % p_); }
    std::uint8_t sub(unsigned a, unsigned b) const noexcept { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
    std::uint8_t mul(unsigned a, unsigned b) const noexcept { return static_cast<std::uint8_t>(a * b % p_); }
    std::uint8_t neg(unsigned a) const noexcept { return static_cast<std::uint8_t>((p_ - a) % p_); }
    std::uint8_t inv(unsigned a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        return inv_[a];
    }
    std::uint8_t reduce(Int v) const noexcept {
        Int r = v % static_cast<Int>(p_);
        return static_cast<std::uint8_t>(r < 0 ? r + p_ : r);
    }

private:
    unsigned p_;
    std::array<std::uint8_t, kMaxPrime + 1> inv_{};
};

/// Dense matrix over F_p with entries in [0, p).
class FpMatrix {
public:
    FpMatrix() : FpMatrix(5, 0, 0) {}
    FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
        : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FpMatrix from_rows(unsigned p, const std::vector<std::vector<Int>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows.front().size();
        FpMatrix m(p, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = m.field_.reduce(rows[r][c]);
        }
        return m;
    }

    static FpMatrix identity(unsigned p, std::size_t n) {
        FpMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
        return m;
    }

    unsigned modulus() const noexcept { return field_.modulus(); }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Int value) { data_[r * cols_ + c] = field_.reduce(value); }

    std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    FpMatrix transpose() const {
        FpMatrix t(modulus(), cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
        return t;
    }

    FpMatrix select_rows(std::size_t first, std::size_t count) const {
        FpMatrix m(modulus(), count, cols_);
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, m.data_.begin());
        return m;
    }

    FpMatrix select_columns(std::span<const std::size_t> columns) const {
        FpMatrix m(modulus(), rows_, columns.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < columns.size(); ++j) m.data_[r * columns.size() + j] = (*this)(r, columns[j]);
        return m;
    }

    std::vector<std::vector<Int>> to_rows() const {
        std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
    }

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
        if (a.modulus() != b.modulus()) throw std::invalid_argument("field mismatch in matrix product");
        if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
        FpMatrix c(a.modulus(), a.rows_, b.cols_);
        const unsigned p = a.modulus();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                unsigned acc = 0;
                for (std::size_t t = 0; t < a.cols_; ++t) acc = (acc + unsigned{a(i, t)} * b(t, j)) % p;
                c.data_[i * c.cols_ + j] = static_cast<std::uint8_t>(acc);
            }
        return c;
    }

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.modulus() == b.modulus() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> data_;
};

/// Horizontal concatenation [A | B].
inline FpMatrix hconcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus()) throw std::invalid_argument("hconcat shape mismatch");
    FpMatrix m(a.modulus(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) m.set(r, a.cols() + c, b(r, c));
    }
    return m;
}

struct RrefResult {
    FpMatrix reduced;  // zero rows kept at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over F_p.
inline RrefResult rref(const FpMatrix& m) {
    const PrimeField& f = m.field();
    auto rows = m.to_rows();
    const std::size_t nr = m.rows(), nc = m.cols();
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && rows[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[piv], rows[r]);
        const auto s = f.inv(static_cast<unsigned>(rows[r][c]));
        for (auto& v : rows[r]) v = f.mul(static_cast<unsigned>(v), s);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const auto factor = static_cast<unsigned>(rows[i][c]);
            for (std::size_t j = 0; j < nc; ++j)
                rows[i][j] = f.sub(static_cast<unsigned>(rows[i][j]), f.mul(factor, static_cast<unsigned>(rows[r][j])));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = FpMatrix::from_rows(m.modulus(), rows, nc);
    return out;
}

/// Basis of the right kernel {v : M v^T = 0}, returned in RREF.
inline FpMatrix kernel_basis(const FpMatrix& m) {
    const auto rr = rref(m);
    const PrimeField& f = m.field();
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Int> v(nc, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.reduced(i, free));
        basis.push_back(std::move(v));
    }
    auto k = FpMatrix::from_rows(m.modulus(), basis, nc);
    return rref(k).reduced;
}

/// Dense integer matrix. Products are overflow-checked.
class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static ZMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows.front().size();
        ZMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        return m;
    }

    static ZMatrix identity(std::size_t n) {
        ZMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<std::vector<Int>> to_rows() const {
        std::vector<std::vector<Int>> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
        return out;
    }

    ZMatrix transpose() const {
        ZMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < r; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
        ZMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t t = 0; t < a.cols_; ++t) {
                const Int v = a(i, t);
                if (v == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = detail::add(c(i, j), detail::mul(v, b(t, j)));
            }
        return c;
    }

    friend bool operator==(const ZMatrix& a, const ZMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Integer dot product, overflow-checked.
inline Int dot(std::span<const Int> a, std::span<const Int> b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = detail::add(acc, detail::mul(a[i], b[i]));
    return acc;
}

/// Row vector times matrix.
inline std::vector<Int> row_times(std::span<const Int> v, const ZMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch in vector-matrix product");
    std::vector<Int> out(m.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = detail::add(out[j], detail::mul(v[i], m(i, j)));
    }
    return out;
}

namespace detail {

// Row-style Hermite normal form in place. Zero rows are dropped. If `u` is
// non-null it must start as the identity of size a.size(); on return the
// first rank rows of u satisfy u * A_in = H.
template <class T>
void hnf_in_place(std::vector<std::vector<T>>& a, std::vector<std::vector<T>>* u) {
    const std::size_t m = a.size();
    if (m == 0) return;
    const std::size_t n = a.front().size();

    auto axpy = [&](std::size_t dst, std::size_t src, const T& q) {
        for (std::size_t c = 0; c < n; ++c) a[dst][c] = sub(a[dst][c], mul(q, a[src][c]));
        if (u)
            for (std::size_t c = 0; c < m; ++c) (*u)[dst][c] = sub((*u)[dst][c], mul(q, (*u)[src][c]));
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a[i][c] != 0 && (best == m || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == m) break;
            swap_rows(best, r);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                axpy(i, r, floor_div(a[i][c], a[r][c]));
                if (a[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) {
            for (auto& v : a[r]) v = neg(v);
            if (u)
                for (auto& v : (*u)[r]) v = neg(v);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const T q = floor_div(a[i][c], a[r][c]);
            if (q != 0) axpy(i, r, q);
        }
        ++r;
    }
    a.resize(r);
}

template <class T>
std::optional<std::vector<T>> solve_integer_impl(std::vector<std::vector<T>> rows, const std::vector<T>& target) {
    const std::size_t r = rows.size();
    std::vector<std::vector<T>> u(r, std::vector<T>(r, T{0}));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
    hnf_in_place(rows, &u);
    if (rows.size() != r) throw std::invalid_argument("solve_integer: basis rows are linearly dependent");

    std::vector<T> residual = target;
    std::vector<T> coeff(r, T{0});
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t piv = 0;
        while (rows[j][piv] == 0) ++piv;
        if (residual[piv] % rows[j][piv] != 0) return std::nullopt;
        coeff[j] = residual[piv] / rows[j][piv];
        for (std::size_t c = 0; c < residual.size(); ++c) residual[c] = sub(residual[c], mul(coeff[j], rows[j][c]));
    }
    for (const auto& v : residual)
        if (v != 0) return std::nullopt;

    std::vector<T> out(r, T{0});
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) out[i] = add(out[i], mul(coeff[j], u[j][i]));
    return out;
}

}  // namespace detail

/// Row-style Hermite normal form: upper-triangular echelon, positive pivots,
/// entries above each pivot in [0, pivot), zero rows removed.
inline ZMatrix hnf(const ZMatrix& a) {
    const auto rows = a.to_rows();
    auto out = detail::with_fallback([&]<class T>() {
        auto w = detail::widen<T>(rows);
        detail::hnf_in_place<T>(w, nullptr);
        return detail::narrow_rows(w);
    });
    return ZMatrix::from_rows(out, a.cols());
}

/// Coefficients c with c * B = t, or nullopt when t is outside the row lattice of B.
/// Throws std::invalid_argument when the rows of B are dependent.
inline std::optional<std::vector<Int>> solve_integer(const ZMatrix& basis, std::span<const Int> target) {
    if (target.size() != basis.cols()) throw std::invalid_argument("solve_integer: target length mismatch");
    const auto rows = basis.to_rows();
    const std::vector<Int> t(target.begin(), target.end());
    return detail::with_fallback([&]<class T>() -> std::optional<std::vector<Int>> {
        std::vector<T> tt(t.begin(), t.end());
        auto c = detail::solve_integer_impl<T>(detail::widen<T>(rows), tt);
        if (!c) return std::nullopt;
        std::vector<Int> out;
        for (const auto& v : *c) out.push_back(detail::narrow(v));
        return out;
    });
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant_big(const ZMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m = detail::widen<BigInt>(a.to_rows());
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline Int determinant(const ZMatrix& a) { return detail::narrow(determinant_big(a)); }

/// Leading principal minors d_1..d_n of a square matrix.
inline std::vector<BigInt> leading_principal_minors(const ZMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<BigInt>> m = detail::widen<BigInt>(a.to_rows());
    std::vector<BigInt> minors;
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m[k][k]);
        if (m[k][k] == 0) {
            // Later minors need pivoting; report the zero and the rest as zero.
            minors.resize(n, BigInt{0});
            return minors;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return minors;
}

}  // namespace sd5
