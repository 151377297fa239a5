#pragma once

// Construction A over F_5: the lattice (1/sqrt 5){x in Z^n : x mod 5 in C}.
//
// Ambient coordinates are the integer vectors x themselves with scale 5, so
// the inner product of two lattice vectors is (x . y) / 5 and no irrational
// number is ever stored.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sd5/algebra.hpp"
#include "sd5/codes.hpp"
#include "sd5/lattices.hpp"

namespace sd5 {

inline constexpr Int kConstructionAScale = 5;

struct ConstructionALattice {
    LinearCode code;
    GramLattice lattice;  // basis = HNF of [lift(G); 5 I], scale 5
};

/// Requires a self-orthogonal code over F_5 (otherwise the Gram matrix is not integral).
inline ConstructionALattice construction_a(const LinearCode& c) {
    if (c.modulus() != 5) throw std::invalid_argument("construction_a is defined over F_5");
    if (!is_self_orthogonal(c)) throw std::invalid_argument("construction_a needs a self-orthogonal code");
    const std::size_t n = c.length(), k = c.dimension();
    ZMatrix stack(k + n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) stack(i, j) = c.generator()(i, j);
    for (std::size_t j = 0; j < n; ++j) stack(k + j, j) = kConstructionAScale;
    return {c, GramLattice::from_basis(hnf(stack), kConstructionAScale)};
}

namespace detail {

using Series = std::vector<std::uint64_t>;  // index = norm in units of 1/5

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("theta coefficient overflow");
    return r;
}
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("theta coefficient overflow");
    return r;
}

inline Series series_product(const Series& a, const Series& b) {
    Series c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j)
            if (b[j]) c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
    }
    return c;
}

// Powers s^0 .. s^n, truncated.
inline std::vector<Series> series_powers(const Series& s, std::size_t n) {
    std::vector<Series> p;
    Series one(s.size(), 0);
    one[0] = 1;
    p.push_back(one);
    for (std::size_t e = 1; e <= n; ++e) p.push_back(series_product(p.back(), s));
    return p;
}

}  // namespace detail

/// Theta coefficients a_0..a_max of A_5(C) from the composition census alone:
/// each codeword contributes theta_0^n0 theta_1^n1 theta_2^n2, where theta_j
/// sums q^(m^2 / 5) over integers m = j (mod 5).
inline std::vector<std::uint64_t> theta_from_compositions(const CompositionTable& t, Int max_norm) {
    if (max_norm < 0) throw std::invalid_argument("theta_from_compositions: negative bound");
    const std::size_t limit = static_cast<std::size_t>(5 * max_norm);
    std::array<detail::Series, 3> base;
    for (auto& s : base) s.assign(limit + 1, 0);
    for (Int m = -static_cast<Int>(limit); m <= static_cast<Int>(limit); ++m) {
        const auto sq = static_cast<std::size_t>(m * m);
        if (sq > limit) continue;
        const Int r = ((m % 5) + 5) % 5;
        if (r == 0) ++base[0][sq];
        if (r == 1) ++base[1][sq];
        if (r == 2) ++base[2][sq];
    }
    const std::size_t n = t.length();
    std::array<std::vector<detail::Series>, 3> pw;
    for (std::size_t c = 0; c < 3; ++c) pw[c] = detail::series_powers(base[c], n);

    detail::Series acc(limit + 1, 0);
    for (const auto& e : t.entries()) {
        const auto prod = detail::series_product(detail::series_product(pw[0][e.n0], pw[1][e.n1]), pw[2][e.n2]);
        for (std::size_t i = 0; i <= limit; ++i)
            if (prod[i]) acc[i] = detail::checked_add(acc[i], detail::checked_mul(prod[i], e.count));
    }
    std::vector<std::uint64_t> a(static_cast<std::size_t>(max_norm) + 1, 0);
    for (std::size_t i = 0; i <= limit; ++i) {
        if (!acc[i]) continue;
        if (i % 5 != 0) throw std::domain_error("non-integral lattice norm: code is not self-orthogonal");
        a[i / 5] = acc[i];
    }
    return a;
}

/// Minimum norm and kissing number of A_5(C) from the census. The series is
/// taken to norm 5 so the vectors 5 e_i (norm 5) bound the search.
inline MinimumData kissing_from_compositions(const CompositionTable& t) {
    if (t.length() == 0) throw std::invalid_argument("kissing number of the zero lattice is undefined");
    const auto a = theta_from_compositions(t, 5);
    for (std::size_t m = 1; m < a.size(); ++m)
        if (a[m]) return {static_cast<Int>(m), a[m]};
    throw std::logic_error("theta series has no vector up to norm 5");
}

/// Ambient vector 5 e_i of length n.
inline std::vector<Int> scaled_unit(std::size_t i, std::size_t n) {
    std::vector<Int> v(n, 0);
    v[i] = kConstructionAScale;
    return v;
}

/// For each coordinate i, the components whose lattice contains 5 e_i.
struct UnitAssignment {
    std::vector<std::vector<std::size_t>> owners;

    bool complete() const {
        return std::all_of(owners.begin(), owners.end(), [](const auto& o) { return o.size() == 1; });
    }
    std::vector<std::size_t> unowned() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < owners.size(); ++i)
            if (owners[i].empty()) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> multiply_owned() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < owners.size(); ++i)
            if (owners[i].size() > 1) out.push_back(i);
        return out;
    }
    /// Coordinates owned by component c alone.
    std::vector<std::size_t> support(std::size_t c) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < owners.size(); ++i)
            if (owners[i].size() == 1 && owners[i][0] == c) out.push_back(i);
        return out;
    }
};

inline UnitAssignment unit_vector_assignment(const std::vector<LatticeComponent>& components, std::size_t n) {
    UnitAssignment a;
    a.owners.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto target = scaled_unit(i, n);
        for (std::size_t c = 0; c < components.size(); ++c)
            if (member(components[c].lattice, target, kConstructionAScale)) a.owners[i].push_back(c);
    }
    return a;
}

/// Sum of components that together contain 5 e_i for every i in `support`.
struct CoordinateBlock {
    std::vector<std::size_t> components;
    std::vector<std::size_t> support;
    GramLattice lattice;
};

/// Coarsest-needed merge of components into coordinate-aligned blocks: 5 e_i
/// is written in the components' combined basis, and every component it
/// touches joins one block. The result is the finest orthogonal splitting of
/// the lattice along coordinate subsets.
inline std::vector<CoordinateBlock> coordinate_blocks(const std::vector<LatticeComponent>& components, std::size_t n) {
    std::vector<std::vector<Int>> stacked;
    std::vector<std::size_t> owner_of_row;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& prov = components[c].lattice.provenance();
        if (!prov || prov->scale != kConstructionAScale || prov->basis.cols() != n)
            throw std::invalid_argument("components need provenance in the Construction A frame");
        for (const auto& r : prov->basis.to_rows()) {
            stacked.push_back(r);
            owner_of_row.push_back(c);
        }
    }
    const ZMatrix s = ZMatrix::from_rows(stacked, n);
    detail::DisjointSets sets(components.size());
    std::vector<std::size_t> first_component(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto coeffs = solve_integer(s, scaled_unit(i, n));
        if (!coeffs) throw decomposition_error("5 e_i is not in the sum of the components");
        std::optional<std::size_t> first;
        for (std::size_t r = 0; r < coeffs->size(); ++r) {
            if ((*coeffs)[r] == 0) continue;
            if (!first) first = owner_of_row[r];
            sets.unite(*first, owner_of_row[r]);
        }
        first_component[i] = first.value_or(0);
    }

    std::map<std::size_t, CoordinateBlock> by_root;
    for (std::size_t c = 0; c < components.size(); ++c) by_root[sets.find(c)].components.push_back(c);
    for (std::size_t i = 0; i < n; ++i) by_root[sets.find(first_component[i])].support.push_back(i);

    std::vector<CoordinateBlock> out;
    for (auto& [root, block] : by_root) {
        std::vector<std::vector<Int>> rows;
        for (auto c : block.components)
            for (const auto& r : components[c].lattice.provenance()->basis.to_rows()) rows.push_back(r);
        block.lattice = GramLattice::from_basis(hnf(ZMatrix::from_rows(rows, n)), kConstructionAScale);
        out.push_back(std::move(block));
    }
    std::sort(out.begin(), out.end(), [](const CoordinateBlock& a, const CoordinateBlock& b) {
        return a.support < b.support;
    });
    return out;
}

/// Ambient coordinates where some basis vector is nonzero.
inline std::vector<std::size_t> support_of(const GramLattice& l) {
    if (!l.provenance()) throw std::invalid_argument("support needs basis provenance");
    const auto& b = l.provenance()->basis;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < b.rows(); ++i)
            if (b(i, j) != 0) {
                out.push_back(j);
                break;
            }
    return out;
}

/// The code {(c restricted to support) mod 5} read off a component's basis.
/// Throws if the basis has nonzero entries outside `support`.
inline LinearCode component_code(const GramLattice& component, std::span<const std::size_t> support) {
    const auto& prov = component.provenance();
    if (!prov || prov->scale != kConstructionAScale)
        throw std::invalid_argument("component needs provenance in the Construction A frame");
    const auto& b = prov->basis;
    std::vector<bool> inside(b.cols(), false);
    for (auto j : support) {
        if (j >= b.cols()) throw std::invalid_argument("support index out of range");
        inside[j] = true;
    }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!inside[j] && b(i, j) != 0) throw std::invalid_argument("component basis leaves the given support");
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::vector<Int> r;
        for (auto j : support) r.push_back(b(i, j));
        rows.push_back(std::move(r));
    }
    return LinearCode(FpMatrix::from_rows(5, rows, support.size()));
}

}  // namespace sd5
