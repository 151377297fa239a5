#pragma once

// Brute-force reference computations. They share no code with the library
// beyond the plain data types.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "sd5/algebra.hpp"
#include "sd5/codes.hpp"
#include "sd5/lattices.hpp"

namespace oracle {

using sd5::Int;

/// Every codeword of the row space of `rows` over F_p, by odometer over all
/// p^k coefficient vectors (duplicates included when rows are dependent).
inline std::vector<std::vector<int>> all_codewords(const std::vector<std::vector<Int>>& rows, std::size_t n, int p) {
    const std::size_t k = rows.size();
    std::vector<int> coeff(k, 0);
    std::vector<std::vector<int>> out;
    while (true) {
        std::vector<int> w(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<int>((w[j] + coeff[i] * (((rows[i][j] % p) + p) % p)) % p);
        out.push_back(w);
        std::size_t i = 0;
        while (i < k && ++coeff[i] == p) coeff[i++] = 0;
        if (i == k) break;
    }
    return out;
}

inline std::vector<std::vector<int>> all_codewords(const sd5::LinearCode& c) {
    return all_codewords(c.generator().to_rows(), c.length(), static_cast<int>(c.modulus()));
}

/// (n0, n1, n2) -> count, classes by Lee weight min(a, 5 - a).
inline std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> compositions(const sd5::LinearCode& c) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> m;
    for (const auto& w : all_codewords(c)) {
        std::size_t n[3] = {0, 0, 0};
        for (int v : w) ++n[std::min(v, 5 - v)];
        ++m[{n[0], n[1], n[2]}];
    }
    return m;
}

inline std::size_t min_hamming_weight(const sd5::LinearCode& c) {
    std::size_t best = c.length() + 1;
    for (const auto& w : all_codewords(c)) {
        std::size_t wt = 0;
        for (int v : w) wt += v != 0;
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

/// Lexicographically least minimum-weight codeword with first nonzero entry 1.
inline std::vector<int> least_min_weight_word(const sd5::LinearCode& c) {
    const std::size_t d = min_hamming_weight(c);
    std::vector<int> best;
    for (const auto& w : all_codewords(c)) {
        std::size_t wt = 0;
        for (int v : w) wt += v != 0;
        if (wt != d || *std::find_if(w.begin(), w.end(), [](int v) { return v != 0; }) != 1) continue;
        if (best.empty() || w < best) best = w;
    }
    return best;
}

inline bool orthogonal_mod(const std::vector<int>& a, const std::vector<int>& b, int p) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s % p == 0;
}

/// Dual by exhaustive search over F_p^n (n small).
inline std::vector<std::vector<int>> dual_words(const sd5::LinearCode& c) {
    const int p = static_cast<int>(c.modulus());
    const auto words = all_codewords(c);
    std::vector<std::vector<Int>> unit;
    for (std::size_t i = 0; i < c.length(); ++i) {
        std::vector<Int> r(c.length(), 0);
        r[i] = 1;
        unit.push_back(r);
    }
    std::vector<std::vector<int>> out;
    for (const auto& v : all_codewords(unit, c.length(), p)) {
        bool ok = true;
        for (const auto& w : words) ok = ok && orthogonal_mod(v, w, p);
        if (ok) out.push_back(v);
    }
    return out;
}

/// Coefficient box |x_i| <= floor(sqrt(N * (G^-1)_ii)) + 1 contains every
/// vector of norm <= N.
inline std::vector<Int> box_bounds(const sd5::ZMatrix& g, Int bound) {
    const std::size_t d = g.rows();
    std::vector<std::vector<double>> a(d, std::vector<double>(2 * d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i][j] = static_cast<double>(g(i, j));
        a[i][d + i] = 1.0;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < d; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        const double inv = 1.0 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (std::size_t r = 0; r < d; ++r)
            if (r != c && a[r][c] != 0.0) {
                const double f = a[r][c];
                for (std::size_t j = 0; j < 2 * d; ++j) a[r][j] -= f * a[c][j];
            }
    }
    std::vector<Int> out(d);
    for (std::size_t i = 0; i < d; ++i)
        out[i] = static_cast<Int>(std::floor(std::sqrt(static_cast<double>(bound) * a[i][d + i]))) + 1;
    return out;
}

/// theta coefficients a_0..a_bound by enumerating the coefficient box.
inline std::vector<std::uint64_t> theta(const sd5::ZMatrix& g, Int bound) {
    const std::size_t d = g.rows();
    const auto b = box_bounds(g, bound);
    std::vector<std::uint64_t> a(static_cast<std::size_t>(bound) + 1, 0);
    std::vector<Int> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = -b[i];
    while (true) {
        Int norm = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) norm += x[i] * g(i, j) * x[j];
        if (norm <= bound) ++a[static_cast<std::size_t>(norm)];
        std::size_t i = 0;
        while (i < d && ++x[i] > b[i]) {
            x[i] = -b[i];
            ++i;
        }
        if (i == d) break;
    }
    return a;
}

/// Laplace expansion, for tiny matrices.
inline Int laplace_det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> r;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) r.push_back(m[i][c]);
            minor.push_back(r);
        }
        det += (j % 2 ? -1 : 1) * m[0][j] * laplace_det(minor);
    }
    return det;
}

/// gcd of all r x r minors of `a`: the product of its first r invariant
/// factors, which identifies the row lattice among its sublattices.
inline Int minor_gcd(const std::vector<std::vector<Int>>& a, std::size_t r) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Int g = 0;
    for (unsigned rm = 0; rm < (1u << rows); ++rm) {
        if (static_cast<std::size_t>(__builtin_popcount(rm)) != r) continue;
        for (unsigned cm = 0; cm < (1u << cols); ++cm) {
            if (static_cast<std::size_t>(__builtin_popcount(cm)) != r) continue;
            std::vector<std::vector<Int>> sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!(rm >> i & 1)) continue;
                std::vector<Int> row;
                for (std::size_t j = 0; j < cols; ++j)
                    if (cm >> j & 1) row.push_back(a[i][j]);
                sub.push_back(row);
            }
            g = std::gcd(g, laplace_det(sub));
        }
    }
    return g;
}

/// Whether t is an integer combination of `basis` with coefficients in
/// [-range, range], by brute force.
inline bool contains_row(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& t, Int range) {
    const std::size_t k = basis.size();
    std::vector<Int> c(k, -range);
    if (k == 0) return std::all_of(t.begin(), t.end(), [](Int v) { return v == 0; });
    while (true) {
        bool eq = true;
        for (std::size_t j = 0; j < t.size() && eq; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < k; ++i) s += c[i] * basis[i][j];
            eq = s == t[j];
        }
        if (eq) return true;
        std::size_t i = 0;
        while (i < k && ++c[i] > range) c[i++] = -range;
        if (i == k) return false;
    }
}

}  // namespace oracle
