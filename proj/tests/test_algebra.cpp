#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "oracles.hpp"
#include "sd5/algebra.hpp"
#include "sd5/rng.hpp"

using namespace sd5;

namespace {

FpMatrix random_fp(std::size_t r, std::size_t c, CounterRng& rng, unsigned p = 5) {
    FpMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<Int>(rng.below(p)));
    return m;
}

}  // namespace

TEST(PrimeField, RejectsNonPrimes) {
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(2), std::invalid_argument);
    EXPECT_THROW(PrimeField(37), std::invalid_argument);
    EXPECT_NO_THROW(PrimeField(31));
}

TEST(PrimeField, InversesAndReduction) {
    for (unsigned p : {3u, 5u, 7u, 31u}) {
        PrimeField f(p);
        for (unsigned a = 1; a < p; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
        EXPECT_THROW(f.inv(0), std::domain_error);
    }
    PrimeField f(5);
    EXPECT_EQ(f.reduce(-1), 4);
    EXPECT_EQ(f.reduce(-10), 0);
    EXPECT_EQ(f.reduce(12), 2);
}

TEST(Rref, Identity) {
    auto r = rref(FpMatrix::identity(5, 2));
    EXPECT_EQ(r.reduced, FpMatrix::identity(5, 2));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, DependentRow) {
    auto r = rref(FpMatrix::from_rows(5, {{1, 2}, {2, 4}}));
    EXPECT_EQ(r.reduced, FpMatrix::from_rows(5, {{1, 2}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, RowSwap) {
    const auto m = FpMatrix::from_rows(5, {{0, 1, 3}, {1, 0, 2}});
    auto r = rref(m);
    EXPECT_EQ(r.reduced, FpMatrix::from_rows(5, {{1, 0, 2}, {0, 1, 3}}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, RowSpacePreservedOnRandomInputs) {
    CounterRng rng(11);
    for (int t = 0; t < 40; ++t) {
        const auto m = random_fp(1 + rng.below(4), 1 + rng.below(5), rng);
        const auto r = rref(m);
        auto a = oracle::all_codewords(m.to_rows(), m.cols(), 5);
        auto b = oracle::all_codewords(r.reduced.to_rows(), m.cols(), 5);
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        EXPECT_EQ(a, b);
        std::size_t expected = 1;
        for (std::size_t i = 0; i < r.rank; ++i) expected *= 5;
        EXPECT_EQ(a.size(), expected);
    }
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel_basis(FpMatrix::identity(5, 3)).rows(), 0u);
    EXPECT_EQ(kernel_basis(FpMatrix::from_rows(5, {{1, 2}})), FpMatrix::from_rows(5, {{1, 2}}));
    EXPECT_EQ(kernel_basis(FpMatrix(5, 1, 3)), FpMatrix::identity(5, 3));
}

TEST(Kernel, AnnihilatesAndHasFullDimension) {
    CounterRng rng(12);
    for (int t = 0; t < 40; ++t) {
        const auto m = random_fp(1 + rng.below(4), 1 + rng.below(6), rng);
        const auto k = kernel_basis(m);
        EXPECT_TRUE((m * k.transpose()).is_zero());
        EXPECT_EQ(rref(k).rank, k.rows());
        EXPECT_EQ(k.rows() + rref(m).rank, m.cols());
    }
}

TEST(Hnf, Examples) {
    EXPECT_EQ(hnf(ZMatrix::identity(3)), ZMatrix::identity(3));
    EXPECT_EQ(hnf(ZMatrix::from_rows({{1, 2}, {5, 0}, {0, 5}})), ZMatrix::from_rows({{1, 2}, {0, 5}}));
    EXPECT_EQ(hnf(ZMatrix::from_rows({{2, 0}, {0, 2}})), ZMatrix::from_rows({{2, 0}, {0, 2}}));
}

TEST(Hnf, IndexMatchesResidueCount) {
    // The lattice spanned by (1,2), (5,0), (0,5) has index 5 in Z^2: count the
    // residues of Z^2 mod 5 hit by it.
    std::set<std::pair<int, int>> hit;
    for (int a = 0; a < 5; ++a) hit.insert({a % 5, (2 * a) % 5});
    const auto h = hnf(ZMatrix::from_rows({{1, 2}, {5, 0}, {0, 5}}));
    EXPECT_EQ(determinant(h), static_cast<Int>(25 / hit.size()));
}

TEST(Hnf, ShapeAndSameLatticeOnRandomInputs) {
    CounterRng rng(13);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(3);
        std::vector<std::vector<Int>> rows(r, std::vector<Int>(c));
        for (auto& row : rows)
            for (auto& v : row) v = static_cast<Int>(rng.below(13)) - 6;
        const auto h = hnf(ZMatrix::from_rows(rows, c));
        std::size_t last = 0;
        bool first = true;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            std::size_t piv = 0;
            while (piv < c && h(i, piv) == 0) ++piv;
            ASSERT_LT(piv, c);
            if (!first) {
                EXPECT_GT(piv, last);
            }
            EXPECT_GT(h(i, piv), 0);
            for (std::size_t a = 0; a < i; ++a) {
                EXPECT_GE(h(a, piv), 0);
                EXPECT_LT(h(a, piv), h(i, piv));
            }
            last = piv;
            first = false;
        }
        const auto hr = h.to_rows();
        for (const auto& row : rows) EXPECT_TRUE(oracle::contains_row(hr, row, 40));
        EXPECT_EQ(oracle::minor_gcd(rows, h.rows()), oracle::minor_gcd(hr, h.rows()));
    }
}

TEST(SolveInteger, Examples) {
    EXPECT_EQ(solve_integer(ZMatrix::identity(2), std::vector<Int>{3, 4}), (std::vector<Int>{3, 4}));
    const auto b = ZMatrix::from_rows({{1, 2}, {0, 5}});
    EXPECT_EQ(solve_integer(b, std::vector<Int>{5, 0}), (std::vector<Int>{5, -2}));
    EXPECT_FALSE(solve_integer(b, std::vector<Int>{1, 0}));
    EXPECT_THROW(solve_integer(ZMatrix::from_rows({{1, 2}, {2, 4}}), std::vector<Int>{1, 2}), std::invalid_argument);
}

TEST(SolveInteger, RoundTripOnRandomCombinations) {
    CounterRng rng(14);
    for (int t = 0; t < 30; ++t) {
        const auto b = hnf(ZMatrix::from_rows({{static_cast<Int>(rng.below(7)) + 1, static_cast<Int>(rng.below(9)), 3},
                                               {0, static_cast<Int>(rng.below(5)) + 1, static_cast<Int>(rng.below(9))},
                                               {0, 0, static_cast<Int>(rng.below(6)) + 1}}));
        const std::vector<Int> c = {static_cast<Int>(rng.below(21)) - 10, static_cast<Int>(rng.below(21)) - 10,
                                    static_cast<Int>(rng.below(21)) - 10};
        const auto target = row_times(c, b);
        EXPECT_EQ(solve_integer(b, target), c);
    }
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(ZMatrix::from_rows({{1, 2}, {2, 5}})), 1);
    EXPECT_EQ(determinant(ZMatrix::from_rows({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(determinant(ZMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})), 4);
    EXPECT_EQ(determinant(ZMatrix(0, 0)), 1);
    EXPECT_EQ(determinant(ZMatrix::from_rows({{1, 2}, {2, 4}})), 0);
}

TEST(Determinant, LargeValuesFallBackToBigInt) {
    const Int big = Int{1} << 40;
    const auto m = ZMatrix::from_rows({{big, 0}, {0, big}});
    EXPECT_EQ(determinant_big(m), BigInt(big) * BigInt(big));
    EXPECT_THROW(determinant(m), overflow_error);
}

TEST(Overflow, CheckedArithmeticThrows) {
    const Int max = std::numeric_limits<Int>::max();
    EXPECT_THROW(detail::add(max, 1), overflow_error);
    EXPECT_THROW(detail::mul(max, 2), overflow_error);
    EXPECT_THROW(ZMatrix::from_rows({{max}}) * ZMatrix::from_rows({{2}}), overflow_error);
}

TEST(Hnf, OverflowingInputUsesBigIntPath) {
    const Int big = Int{1} << 62;
    const auto h = hnf(ZMatrix::from_rows({{big, 3}, {big - 1, 2}}));
    // rows (big,3) and (big-1,2) differ by (1,1); the lattice has det big*2 - 3*(big-1) = 3 - big.
    EXPECT_EQ(h.rows(), 2u);
    EXPECT_EQ(BigInt(h(0, 0)) * BigInt(h(1, 1)), BigInt(big) - 3);
}

TEST(Rng, DeterministicAndCounterBased) {
    CounterRng a(42), b(42);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
    CounterRng c(42);
    EXPECT_EQ(c(), CounterRng::mix(42 + 0x9E3779B97F4A7C15ULL));
    for (int i = 0; i < 1000; ++i) EXPECT_LT(c.below(7), 7u);
}
