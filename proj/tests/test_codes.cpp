#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sd5/codes.hpp"

using namespace sd5;

namespace {

LinearCode c21() { return LinearCode(FpMatrix::from_rows(5, {{1, 2}})); }
LinearCode i2_2i2() { return LinearCode(FpMatrix::from_rows(5, {{1, 0, 2, 0}, {0, 1, 0, 2}})); }

std::set<std::vector<int>> word_set(const std::vector<std::vector<int>>& words) {
    return {words.begin(), words.end()};
}

LinearCode random_code(std::size_t n, std::size_t rows, CounterRng& rng) {
    FpMatrix g(5, rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) g.set(i, j, static_cast<Int>(rng.below(5)));
    return LinearCode(g);
}

CompositionTable table_from_oracle(const LinearCode& c) {
    CompositionTable t(c.length(), c.dimension());
    for (const auto& [comp, count] : oracle::compositions(c)) t.add(std::get<1>(comp), std::get<2>(comp), count);
    return t;
}

}  // namespace

TEST(LinearCode, CanonicalForm) {
    EXPECT_EQ(c21().dimension(), 1u);
    EXPECT_EQ(c21().length(), 2u);
    EXPECT_EQ(i2_2i2().generator(), FpMatrix::from_rows(5, {{1, 0, 2, 0}, {0, 1, 0, 2}}));
    EXPECT_EQ(LinearCode(FpMatrix::from_rows(5, {{1, 2}, {2, 4}})), c21());
    EXPECT_EQ(LinearCode(FpMatrix::from_rows(5, {{3, 1}})), c21());
}

TEST(LinearCode, ContainsAndEncode) {
    const auto c = c21();
    for (int a = 0; a < 5; ++a) EXPECT_TRUE(c.contains(Word{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(2 * a % 5)}));
    EXPECT_FALSE(c.contains(Word{1, 0}));
    EXPECT_FALSE(c.contains(Word{1, 2, 0}));
}

TEST(Dual, Examples) {
    EXPECT_EQ(dual(c21()), c21());
    EXPECT_EQ(dual(LinearCode::zero(3)), LinearCode::full(3));
    EXPECT_EQ(dual(LinearCode::full(3)), LinearCode::zero(3));
}

TEST(Dual, MatchesExhaustiveSearch) {
    CounterRng rng(21);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng.below(5);
        const auto c = random_code(n, rng.below(n + 1), rng);
        const auto d = dual(c);
        EXPECT_EQ(word_set(oracle::all_codewords(d)), word_set(oracle::dual_words(c)));
        EXPECT_EQ(dual(d), c);
        EXPECT_EQ(c.dimension() + d.dimension(), n);
    }
}

TEST(SelfDual, Examples) {
    EXPECT_TRUE(is_self_dual(c21()));
    EXPECT_TRUE(is_self_dual(i2_2i2()));
    EXPECT_FALSE(is_self_orthogonal(LinearCode(FpMatrix::from_rows(5, {{1, 1}}))));
    EXPECT_TRUE(is_self_orthogonal(LinearCode::zero(4)));
    EXPECT_FALSE(is_self_dual(LinearCode::zero(4)));
}

TEST(DirectSum, DualCommutes) {
    EXPECT_EQ(dual(direct_sum(c21(), c21())), direct_sum(dual(c21()), dual(c21())));
    CounterRng rng(22);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_code(1 + rng.below(4), rng.below(3), rng);
        const auto b = random_code(1 + rng.below(4), rng.below(3), rng);
        EXPECT_EQ(dual(direct_sum(a, b)), direct_sum(dual(a), dual(b)));
    }
}

TEST(Composition, Examples) {
    const auto t = sweep_compositions(c21());
    EXPECT_EQ(t.entries(), (std::vector<CompositionTable::Entry>{{2, 0, 0, 1}, {0, 1, 1, 4}}));
    const auto z = sweep_compositions(LinearCode::zero(3));
    EXPECT_EQ(z.entries(), (std::vector<CompositionTable::Entry>{{3, 0, 0, 1}}));
    const auto q = sweep_compositions(i2_2i2());
    EXPECT_EQ(q.total(), 25u);
    EXPECT_EQ(q.count(4, 0, 0), 1u);
    EXPECT_EQ(q.count(2, 1, 1), 8u);
}

TEST(Composition, MatchesBruteForce) {
    CounterRng rng(23);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng.below(40);
        const auto c = random_code(n, std::min<std::size_t>(rng.below(6), n), rng);
        const auto table = sweep_compositions(c);
        EXPECT_EQ(table, table_from_oracle(c)) << "n=" << n << " k=" << c.dimension();
        EXPECT_EQ(table.count(n, 0, 0), 1u);
    }
}

TEST(Composition, WorkerCountDoesNotChangeResult) {
    const auto c = random_self_dual(16, 5);
    const auto one = sweep_compositions(c, {1, false});
    for (unsigned w : {2u, 3u, 7u}) EXPECT_EQ(sweep_compositions(c, {w, false}), one);
}

TEST(Composition, LargeDimensionNeedsOptIn) {
    const auto c = LinearCode::full(13);
    EXPECT_THROW(sweep_compositions(c), std::length_error);
    EXPECT_THROW(sweep_compositions(LinearCode(FpMatrix::identity(7, 2))), std::invalid_argument);
}

TEST(Enumerators, TwoOneCode) {
    const auto t = sweep_compositions(c21());
    EXPECT_EQ(hamming_enumerator(t).coefficients, (std::vector<std::uint64_t>{1, 0, 4}));
    const auto lee = lee_enumerator(t);
    EXPECT_EQ(lee.terms.size(), 2u);
    EXPECT_EQ(lee.coefficient(2, 0), 1u);
    EXPECT_EQ(lee.coefficient(0, 3), 4u);
    EXPECT_EQ(euclidean_weight_census(t), (std::map<std::size_t, std::uint64_t>{{0, 1}, {5, 4}}));
}

TEST(Enumerators, ZeroCode) {
    const auto t = sweep_compositions(LinearCode::zero(5));
    EXPECT_EQ(hamming_enumerator(t).coefficients, (std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(lee_enumerator(t).coefficient(5, 0), 1u);
    EXPECT_EQ(euclidean_weight_census(t), (std::map<std::size_t, std::uint64_t>{{0, 1}}));
}

TEST(Enumerators, LeeTermOfTenUnitCoordinates) {
    // A length-24 codeword with ten coordinates in {1, 4} and none in {2, 3}
    // lands on x^14 y^10.
    CompositionTable t(24, 1);
    t.add(0, 0, 1);
    t.add(10, 0, 4);
    EXPECT_EQ(lee_enumerator(t).coefficient(14, 10), 4u);
}

TEST(MinimumWeight, Examples) {
    EXPECT_EQ(minimum_weight(c21(), WeightKind::hamming), 2u);
    EXPECT_EQ(minimum_weight(c21(), WeightKind::lee), 3u);
    EXPECT_EQ(minimum_weight(c21(), WeightKind::euclidean), 5u);
    EXPECT_EQ(minimum_weight(i2_2i2(), WeightKind::hamming), 2u);
    EXPECT_THROW(minimum_weight(LinearCode::zero(3), WeightKind::hamming), std::invalid_argument);
}

TEST(MinimumWeight, WitnessAndBruteForce) {
    CounterRng rng(24);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng.below(30);
        const auto c = random_code(n, 1 + rng.below(std::min<std::size_t>(6, n)), rng);
        const auto w = minimum_hamming_weight(c);
        EXPECT_EQ(w.weight, oracle::min_hamming_weight(c));
        EXPECT_EQ(std::vector<int>(w.word.begin(), w.word.end()), oracle::least_min_weight_word(c));
        EXPECT_TRUE(c.contains(w.word));
        EXPECT_EQ(hamming_weight(w.word), w.weight);
        EXPECT_EQ(minimum_weight(sweep_compositions(c), WeightKind::hamming), w.weight);
        EXPECT_FALSE(find_word_below(c, w.weight));
        const auto below = find_word_below(c, w.weight + 1);
        ASSERT_TRUE(below);
        EXPECT_TRUE(c.contains(below->word));
        EXPECT_EQ(hamming_weight(below->word), w.weight);
    }
}

TEST(MinimumWeight, WitnessIsDeterministicAcrossWorkers) {
    const auto c = random_self_dual(20, 9);
    const auto a = minimum_hamming_weight(c, {1, false});
    const auto b = minimum_hamming_weight(c, {4, false});
    EXPECT_EQ(a.weight, b.weight);
    EXPECT_EQ(a.word, b.word);
    EXPECT_EQ(find_word_below(c, a.weight + 1, {3, false})->word, find_word_below(c, a.weight + 1, {3, false})->word);
}

TEST(Singleton, Values) {
    EXPECT_EQ(singleton_bound(12, 6), 7u);
    EXPECT_LT(singleton_bound(12, 6), 10u);
    EXPECT_EQ(singleton_bound(24, 12), 13u);
    EXPECT_EQ(singleton_bound(2, 1), 2u);
    EXPECT_EQ(minimum_weight(c21(), WeightKind::hamming), singleton_bound(2, 1));
    EXPECT_THROW(singleton_bound(2, 3), std::invalid_argument);
}

TEST(MacWilliams, Examples) {
    const WeightEnumerator w{2, {1, 0, 4}};
    EXPECT_EQ(macwilliams_transform(w, 1, 5), w);
    const WeightEnumerator zero{3, {1, 0, 0, 0}};
    // (x + 4y)^3
    EXPECT_EQ(macwilliams_transform(zero, 0, 5).coefficients, (std::vector<std::uint64_t>{1, 12, 48, 64}));
    EXPECT_THROW(macwilliams_transform(WeightEnumerator{2, {1, 1, 0}}, 1, 5), std::domain_error);
}

TEST(MacWilliams, DualEnumeratorOfRandomCodes) {
    CounterRng rng(25);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.below(10);
        const auto c = random_code(n, rng.below(std::min<std::size_t>(n, 5) + 1), rng);
        const auto d = dual(c);
        if (d.dimension() > kMaxDefaultSweepDimension) continue;
        EXPECT_EQ(macwilliams_transform(hamming_enumerator(sweep_compositions(c)), c.dimension(), 5),
                  hamming_enumerator(sweep_compositions(d)));
    }
}

TEST(MacWilliams, SelfDualFixedPoint) {
    for (std::size_t n : {2, 6, 8, 12}) {
        const auto c = random_self_dual(n, n + 100);
        const auto w = hamming_enumerator(sweep_compositions(c));
        EXPECT_EQ(macwilliams_transform(w, c.dimension(), 5), w);
    }
}

TEST(RandomSelfDual, Properties) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_TRUE(is_self_dual(random_self_dual(2, seed)));
        const auto c = random_self_dual(24, seed);
        EXPECT_TRUE(is_self_dual(c));
        EXPECT_EQ(c.dimension(), 12u);
    }
    EXPECT_EQ(random_self_dual(24, 3), random_self_dual(24, 3));
    EXPECT_NE(random_self_dual(24, 3), random_self_dual(24, 4));
    EXPECT_THROW(random_self_dual(7, 1), std::invalid_argument);
}

TEST(RandomSelfDual, OrthogonalFactor) {
    CounterRng rng(26);
    for (std::size_t m : {1, 2, 5, 12}) {
        const auto q = random_orthogonal(m, rng);
        EXPECT_EQ(q * q.transpose(), FpMatrix::identity(5, m));
    }
}

TEST(Puncture, SelectsColumns) {
    const auto c = i2_2i2();
    const std::vector<std::size_t> cols = {0, 2};
    EXPECT_EQ(puncture_to(c, cols), c21());
}
