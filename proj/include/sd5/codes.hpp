#pragma once

// Linear codes over F_p and the exhaustive codeword sweeps over F_5.
//
// Sweeps visit one representative per projective point (leading nonzero
// coefficient equal to 1) in base-5 reflected Gray order, so consecutive
// codewords differ by adding or subtracting a single generator row. Over F_5
// the scalars {1, 4} preserve the Lee composition (n0, n1, n2) and {2, 3}
// swap n1 with n2, so each visited word accounts for four codewords exactly.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "sd5/algebra.hpp"
#include "sd5/rng.hpp"

namespace sd5 {

using Word = std::vector<std::uint8_t>;

/// An [n, k] linear code held by its canonical RREF generator matrix.
class LinearCode {
public:
    LinearCode() : LinearCode(FpMatrix(5, 0, 0)) {}

    /// Canonicalizes `generator` (RREF, zero rows dropped).
    explicit LinearCode(const FpMatrix& generator) {
        auto rr = rref(generator);
        generator_ = rr.reduced.select_rows(0, rr.rank);
        pivots_ = std::move(rr.pivots);
        length_ = generator.cols();
    }

    static LinearCode zero(std::size_t n, unsigned p = 5) { return LinearCode(FpMatrix(p, 0, n)); }
    static LinearCode full(std::size_t n, unsigned p = 5) { return LinearCode(FpMatrix::identity(p, n)); }

    unsigned modulus() const noexcept { return generator_.modulus(); }
    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const FpMatrix& generator() const noexcept { return generator_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Membership test by reduction against the RREF generator.
    bool contains(std::span<const std::uint8_t> word) const {
        if (word.size() != length_) return false;
        const PrimeField& f = generator_.field();
        Word w(word.begin(), word.end());
        for (auto& v : w)
            if (v >= f.modulus()) return false;
        for (std::size_t i = 0; i < dimension(); ++i) {
            const auto c = w[pivots_[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < length_; ++j) w[j] = f.sub(w[j], f.mul(c, generator_(i, j)));
        }
        return std::all_of(w.begin(), w.end(), [](std::uint8_t v) { return v == 0; });
    }

    /// Codeword for the coefficient vector `coeffs` (length k).
    Word encode(std::span<const std::uint8_t> coeffs) const {
        const PrimeField& f = generator_.field();
        Word w(length_, 0);
        for (std::size_t i = 0; i < dimension(); ++i)
            for (std::size_t j = 0; j < length_; ++j) w[j] = f.add(w[j], f.mul(coeffs[i], generator_(i, j)));
        return w;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.length_ == b.length_ && a.generator_ == b.generator_;
    }

private:
    FpMatrix generator_;
    std::vector<std::size_t> pivots_;
    std::size_t length_ = 0;
};

inline LinearCode from_generator(const FpMatrix& m) { return LinearCode(m); }

inline LinearCode dual(const LinearCode& c) {
    if (c.dimension() == 0) return LinearCode::full(c.length(), c.modulus());
    return LinearCode(kernel_basis(c.generator()));
}

inline bool is_self_orthogonal(const LinearCode& c) {
    const auto& g = c.generator();
    return (g * g.transpose()).is_zero();
}

inline bool is_self_dual(const LinearCode& c) {
    return c.length() == 2 * c.dimension() && is_self_orthogonal(c);
}

/// C1 (+) C2 on coordinates [0, n1) and [n1, n1 + n2).
inline LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("direct_sum: field mismatch");
    FpMatrix g(a.modulus(), a.dimension() + b.dimension(), a.length() + b.length());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.length(); ++j) g.set(i, j, a.generator()(i, j));
    for (std::size_t i = 0; i < b.dimension(); ++i)
        for (std::size_t j = 0; j < b.length(); ++j) g.set(a.dimension() + i, a.length() + j, b.generator()(i, j));
    return LinearCode(g);
}

/// Restriction of every codeword to `coordinates` (in the given order).
inline LinearCode puncture_to(const LinearCode& c, std::span<const std::size_t> coordinates) {
    return LinearCode(c.generator().select_columns(coordinates));
}

inline std::size_t hamming_weight(std::span<const std::uint8_t> w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint8_t v) { return v != 0; }));
}

/// Lee class over F_5: 0 -> 0, {1, 4} -> 1, {2, 3} -> 2.
constexpr unsigned lee_class(std::uint8_t v) noexcept { return v == 0 ? 0u : (v == 1 || v == 4) ? 1u : 2u; }

inline std::size_t singleton_bound(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("singleton_bound: k exceeds n");
    return n - k + 1;
}

/// Exact codeword census by symmetrized Lee composition (n0, n1, n2).
class CompositionTable {
public:
    struct Entry {
        std::size_t n0, n1, n2;
        std::uint64_t count;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    CompositionTable() = default;
    CompositionTable(std::size_t n, std::size_t k) : n_(n), k_(k), counts_((n + 1) * (n + 1), 0) {}

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return k_; }

    std::uint64_t count(std::size_t n0, std::size_t n1, std::size_t n2) const {
        if (n0 + n1 + n2 != n_) return 0;
        return counts_[n1 * (n_ + 1) + n2];
    }

    void add(std::size_t n1, std::size_t n2, std::uint64_t c) {
        if (n1 + n2 > n_) throw std::out_of_range("composition exceeds code length");
        counts_[n1 * (n_ + 1) + n2] += c;
    }

    std::vector<Entry> entries() const {
        std::vector<Entry> out;
        for (std::size_t n1 = 0; n1 <= n_; ++n1)
            for (std::size_t n2 = 0; n1 + n2 <= n_; ++n2)
                if (auto c = counts_[n1 * (n_ + 1) + n2]) out.push_back({n_ - n1 - n2, n1, n2, c});
        return out;
    }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    CompositionTable& operator+=(const CompositionTable& other) {
        if (other.n_ != n_) throw std::invalid_argument("merging composition tables of different lengths");
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        return *this;
    }

    friend bool operator==(const CompositionTable&, const CompositionTable&) = default;

private:
    std::size_t n_ = 0, k_ = 0;
    std::vector<std::uint64_t> counts_;
};

struct SweepOptions {
    unsigned workers = 0;      // 0: SD5_WORKERS, else hardware concurrency
    bool allow_large = false;  // permit k > 12
};

inline constexpr std::size_t kMaxDefaultSweepDimension = 12;

/// Worker count from the SD5_WORKERS environment variable, else hardware concurrency.
inline unsigned default_workers() {
    if (const char* env = std::getenv("SD5_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

inline std::uint64_t pow5(std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 5;
    return r;
}

// One sub-sweep: coefficient 1 on row `lead`, fixed coefficients on the rows
// immediately after it, Gray enumeration over the remaining rows.
struct SweepTask {
    std::size_t lead = 0;
    std::vector<std::uint8_t> fixed;
    std::size_t free_begin = 0;
};

struct SweepRows {
    std::size_t n = 0, k = 0, stride = 0;
    std::vector<std::uint8_t> pos, neg;  // k rows of `stride` bytes, zero padded

    SweepRows(const LinearCode& c, std::size_t stride_) : n(c.length()), k(c.dimension()), stride(stride_) {
        pos.assign(k * stride, 0);
        neg.assign(k * stride, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto v = c.generator()(i, j);
                pos[i * stride + j] = v;
                neg[i * stride + j] = static_cast<std::uint8_t>((5 - v) % 5);
            }
    }
    const std::uint8_t* row(std::size_t i) const { return pos.data() + i * stride; }
    const std::uint8_t* neg_row(std::size_t i) const { return neg.data() + i * stride; }
};

template <std::size_t Stride>
inline void add_row(std::uint8_t* __restrict w, const std::uint8_t* __restrict r) noexcept {
    for (std::size_t i = 0; i < Stride; ++i) {
        const std::uint8_t s = static_cast<std::uint8_t>(w[i] + r[i]);
        const std::uint8_t t = static_cast<std::uint8_t>(s - 5);
        w[i] = t < s ? t : s;
    }
}

inline std::vector<SweepTask> plan_tasks(std::size_t k, unsigned workers) {
    std::size_t split = 0;
    while (pow5(split) < 4ull * workers) ++split;
    std::vector<SweepTask> tasks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t m = k - 1 - lead;
        const std::size_t t = m > 6 ? std::min(split, m) : 0;
        std::vector<std::uint8_t> digits(t, 0);
        for (std::uint64_t idx = 0; idx < pow5(t); ++idx) {
            std::uint64_t v = idx;
            for (std::size_t d = 0; d < t; ++d) {
                digits[d] = static_cast<std::uint8_t>(v % 5);
                v /= 5;
            }
            tasks.push_back({lead, digits, lead + 1 + t});
        }
    }
    return tasks;
}

// Visits every word of a task; visit(word) returning true stops the task.
template <std::size_t Stride, class Visit>
bool run_task(const SweepRows& rows, const SweepTask& task, Visit&& visit) {
    alignas(64) std::uint8_t word[Stride] = {};
    add_row<Stride>(word, rows.row(task.lead));
    for (std::size_t d = 0; d < task.fixed.size(); ++d)
        for (unsigned rep = 0; rep < task.fixed[d]; ++rep) add_row<Stride>(word, rows.row(task.lead + 1 + d));
    if (visit(static_cast<const std::uint8_t*>(word))) return true;

    const std::size_t m = rows.k - task.free_begin;
    if (m == 0) return false;
    std::vector<std::uint8_t> cnt(m + 1, 0), val(m, 0);
    std::vector<std::int8_t> dir(m, 1);
    const std::uint64_t steps = pow5(m) - 1;
    const std::uint8_t* base_pos = rows.row(task.free_begin);
    const std::uint8_t* base_neg = rows.neg_row(task.free_begin);
    for (std::uint64_t s = 0; s < steps; ++s) {
        std::size_t j = 0;
        while (cnt[j] == 4) cnt[j++] = 0;
        ++cnt[j];
        if (dir[j] > 0) {
            add_row<Stride>(word, base_pos + j * Stride);
            if (++val[j] == 4) dir[j] = -1;
        } else {
            add_row<Stride>(word, base_neg + j * Stride);
            if (--val[j] == 0) dir[j] = 1;
        }
        if (visit(static_cast<const std::uint8_t*>(word))) return true;
    }
    return false;
}

// Runs fn(task_index, worker_index) over all tasks with a shared work queue.
// fn returning true marks the task as a hit; tasks after the first hit are
// skipped when `stop_after_hit`.
template <class Fn>
void run_parallel(std::size_t task_count, unsigned workers, bool stop_after_hit, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
    auto worker = [&](unsigned w) {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= task_count) return;
            if (stop_after_hit && t > first_hit.load()) return;
            if (fn(t, w)) {
                std::size_t cur = first_hit.load();
                while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
                }
            }
        }
    };
    if (workers <= 1) {
        worker(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
}

template <class Fn>
decltype(auto) dispatch_stride(std::size_t n, Fn&& fn) {
    if (n <= 32) return fn.template operator()<32>();
    if (n <= 64) return fn.template operator()<64>();
    if (n <= 128) return fn.template operator()<128>();
    if (n <= 256) return fn.template operator()<256>();
    throw std::invalid_argument("sweeps support code length at most 256");
}

inline void check_sweepable(const LinearCode& c, const SweepOptions& opt) {
    if (c.modulus() != 5) throw std::invalid_argument("codeword sweeps are implemented for p = 5 only");
    if (c.dimension() > kMaxDefaultSweepDimension && !opt.allow_large)
        throw std::length_error("sweep of 5^" + std::to_string(c.dimension()) +
                                " codewords exceeds the default budget (k <= 12); set allow_large to override");
}

inline unsigned resolve_workers(const SweepOptions& opt) { return opt.workers ? opt.workers : default_workers(); }

}  // namespace detail

/// Census of all 5^k codewords by composition.
inline CompositionTable sweep_compositions(const LinearCode& c, const SweepOptions& opt = {}) {
    detail::check_sweepable(c, opt);
    const std::size_t n = c.length();
    CompositionTable table(n, c.dimension());
    table.add(0, 0, 1);
    if (c.dimension() == 0) return table;

    const unsigned workers = detail::resolve_workers(opt);
    const auto tasks = detail::plan_tasks(c.dimension(), workers);
    // projective counts per worker, indexed n1 * (n + 1) + n2
    std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>((n + 1) * (n + 1), 0));

    detail::dispatch_stride(n, [&]<std::size_t Stride>() {
        const detail::SweepRows rows(c, Stride);
        detail::run_parallel(tasks.size(), workers, false, [&](std::size_t t, unsigned w) {
            auto& counts = local[w];
            detail::run_task<Stride>(rows, tasks[t], [&](const std::uint8_t* word) {
                unsigned n1 = 0, n2 = 0;
                for (std::size_t i = 0; i < Stride; ++i) {
                    const std::uint8_t v = word[i];
                    n1 += (v == 1) | (v == 4);
                    n2 += (v == 2) | (v == 3);
                }
                ++counts[n1 * (n + 1) + n2];
                return false;
            });
            return false;
        });
    });

    for (const auto& counts : local)
        for (std::size_t n1 = 0; n1 <= n; ++n1)
            for (std::size_t n2 = 0; n1 + n2 <= n; ++n2) {
                const auto v = counts[n1 * (n + 1) + n2];
                if (!v) continue;
                table.add(n1, n2, 2 * v);
                table.add(n2, n1, 2 * v);
            }
    return table;
}

struct WeightWitness {
    std::size_t weight = 0;
    Word word;
};

/// Minimum Hamming weight with a witness: the lexicographically least
/// minimum-weight codeword whose first nonzero entry is 1. Throws on the zero code.
inline WeightWitness minimum_hamming_weight(const LinearCode& c, const SweepOptions& opt = {}) {
    detail::check_sweepable(c, opt);
    if (c.dimension() == 0) throw std::invalid_argument("minimum weight of the zero code is undefined");
    const std::size_t n = c.length();
    const unsigned workers = detail::resolve_workers(opt);
    const auto tasks = detail::plan_tasks(c.dimension(), workers);
    std::vector<WeightWitness> per_task(tasks.size());

    detail::dispatch_stride(n, [&]<std::size_t Stride>() {
        const detail::SweepRows rows(c, Stride);
        detail::run_parallel(tasks.size(), workers, false, [&](std::size_t t, unsigned) {
            auto& best = per_task[t];
            best.weight = n + 1;
            detail::run_task<Stride>(rows, tasks[t], [&](const std::uint8_t* word) {
                unsigned w = 0;
                for (std::size_t i = 0; i < Stride; ++i) w += word[i] != 0;
                if (w < best.weight ||
                    (w == best.weight && std::lexicographical_compare(word, word + n, best.word.begin(), best.word.end()))) {
                    best.weight = w;
                    best.word.assign(word, word + n);
                }
                return false;
            });
            return false;
        });
    });

    WeightWitness out = per_task.front();
    for (const auto& r : per_task)
        if (r.weight < out.weight || (r.weight == out.weight && r.word < out.word)) out = r;
    return out;
}

/// First codeword (in the deterministic task order) of Hamming weight below
/// `bound`, if any.
inline std::optional<WeightWitness> find_word_below(const LinearCode& c, std::size_t bound,
                                                    const SweepOptions& opt = {}) {
    detail::check_sweepable(c, opt);
    if (c.dimension() == 0) return std::nullopt;
    const std::size_t n = c.length();
    const unsigned workers = detail::resolve_workers(opt);
    const auto tasks = detail::plan_tasks(c.dimension(), workers);
    std::vector<std::optional<WeightWitness>> per_task(tasks.size());

    detail::dispatch_stride(n, [&]<std::size_t Stride>() {
        const detail::SweepRows rows(c, Stride);
        detail::run_parallel(tasks.size(), workers, true, [&](std::size_t t, unsigned) {
            return detail::run_task<Stride>(rows, tasks[t], [&](const std::uint8_t* word) {
                unsigned w = 0;
                for (std::size_t i = 0; i < Stride; ++i) w += word[i] != 0;
                if (w < bound) {
                    per_task[t] = WeightWitness{w, Word(word, word + n)};
                    return true;
                }
                return false;
            });
        });
    });
    for (auto& r : per_task)
        if (r) return r;
    return std::nullopt;
}

/// Homogeneous Hamming enumerator sum_w A_w x^(n-w) y^w, stored as A_0..A_n.
struct WeightEnumerator {
    std::size_t length = 0;
    std::vector<std::uint64_t> coefficients;

    std::uint64_t coefficient(std::size_t y_exponent) const {
        return y_exponent < coefficients.size() ? coefficients[y_exponent] : 0;
    }
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Lee enumerator sum over codewords of x^n0 y^(n1 + 2 n2), keyed by (x exponent, y exponent).
struct LeeEnumerator {
    std::size_t length = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> terms;

    std::uint64_t coefficient(std::size_t x_exponent, std::size_t y_exponent) const {
        auto it = terms.find({x_exponent, y_exponent});
        return it == terms.end() ? 0 : it->second;
    }
    friend bool operator==(const LeeEnumerator&, const LeeEnumerator&) = default;
};

inline WeightEnumerator hamming_enumerator(const CompositionTable& t) {
    WeightEnumerator w{t.length(), std::vector<std::uint64_t>(t.length() + 1, 0)};
    for (const auto& e : t.entries()) w.coefficients[e.n1 + e.n2] += e.count;
    return w;
}

inline LeeEnumerator lee_enumerator(const CompositionTable& t) {
    LeeEnumerator l{t.length(), {}};
    for (const auto& e : t.entries()) l.terms[{e.n0, e.n1 + 2 * e.n2}] += e.count;
    return l;
}

/// Count of codewords by Euclidean weight n1 + 4 n2 (squared norm of the minimal lift).
inline std::map<std::size_t, std::uint64_t> euclidean_weight_census(const CompositionTable& t) {
    std::map<std::size_t, std::uint64_t> census;
    for (const auto& e : t.entries()) census[e.n1 + 4 * e.n2] += e.count;
    return census;
}

enum class WeightKind { hamming, lee, euclidean };

inline std::size_t minimum_weight(const CompositionTable& t, WeightKind kind) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& e : t.entries()) {
        if (e.n0 == t.length()) continue;
        const std::size_t w = kind == WeightKind::hamming ? e.n1 + e.n2
                              : kind == WeightKind::lee   ? e.n1 + 2 * e.n2
                                                          : e.n1 + 4 * e.n2;
        best = std::min(best, w);
    }
    if (best == std::numeric_limits<std::size_t>::max())
        throw std::invalid_argument("minimum weight of the zero code is undefined");
    return best;
}

inline std::size_t minimum_weight(const LinearCode& c, WeightKind kind, const SweepOptions& opt = {}) {
    if (c.dimension() == 0) throw std::invalid_argument("minimum weight of the zero code is undefined");
    if (kind == WeightKind::hamming) return minimum_hamming_weight(c, opt).weight;
    return minimum_weight(sweep_compositions(c, opt), kind);
}

/// p^-k W(x + (p-1) y, x - y). Throws std::domain_error if a coefficient is
/// not a nonnegative integer.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w, std::size_t k, unsigned p) {
    const std::size_t n = w.length;
    if (w.coefficients.size() != n + 1) throw std::invalid_argument("enumerator is not homogeneous of its degree");
    auto binom = [](std::size_t a, std::size_t b) {
        BigInt r = 1;
        for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<BigInt> acc(n + 1, 0);
    for (std::size_t wt = 0; wt <= n; ++wt) {
        if (!w.coefficients[wt]) continue;
        // (1 + (p-1) Y)^(n-wt) * (1 - Y)^wt
        std::vector<BigInt> a(n - wt + 1), b(wt + 1);
        BigInt pw = 1;
        for (std::size_t i = 0; i <= n - wt; ++i) {
            a[i] = binom(n - wt, i) * pw;
            pw *= (p - 1);
        }
        for (std::size_t i = 0; i <= wt; ++i) b[i] = binom(wt, i) * ((i % 2) ? -1 : 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += BigInt(w.coefficients[wt]) * a[i] * b[j];
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < k; ++i) scale *= p;
    WeightEnumerator out{n, std::vector<std::uint64_t>(n + 1, 0)};
    for (std::size_t i = 0; i <= n; ++i) {
        if (acc[i] % scale != 0 || acc[i] < 0)
            throw std::domain_error("MacWilliams transform has a non-integer coefficient");
        out.coefficients[i] = static_cast<std::uint64_t>(acc[i] / scale);
    }
    return out;
}

/// Random orthogonal m x m matrix over F_5 (Q Q^T = I): a product of random
/// reflections I - 2 v v^T / (v.v) followed by a random signed permutation.
inline FpMatrix random_orthogonal(std::size_t m, CounterRng& rng) {
    const PrimeField f(5);
    FpMatrix q = FpMatrix::identity(5, m);
    const std::size_t reflections = 3 * m + 4;
    for (std::size_t r = 0; r < reflections; ++r) {
        std::vector<std::uint8_t> v(m);
        unsigned norm = 0;
        do {
            norm = 0;
            for (auto& x : v) {
                x = static_cast<std::uint8_t>(rng.below(5));
                norm = f.add(norm, f.mul(x, x));
            }
        } while (norm == 0);
        const auto s = f.mul(2, f.inv(norm));
        FpMatrix h = FpMatrix::identity(5, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) h.set(i, j, f.sub(h(i, j), f.mul(s, f.mul(v[i], v[j]))));
        q = q * h;
    }
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    FpMatrix sp(5, m, m);
    for (std::size_t i = 0; i < m; ++i) sp.set(i, perm[i], rng.below(2) ? 1 : 4);
    return q * sp;
}

/// Self-dual [n, n/2] code [I | A] with A = U (2I) V, U and V random orthogonal.
/// Deterministic in (n, seed).
inline LinearCode random_self_dual(std::size_t n, std::uint64_t seed) {
    if (n == 0 || n % 2) throw std::invalid_argument("self-dual codes need even positive length");
    const std::size_t m = n / 2;
    CounterRng rng(seed);
    const FpMatrix u = random_orthogonal(m, rng);
    const FpMatrix v = random_orthogonal(m, rng);
    FpMatrix two(5, m, m);
    for (std::size_t i = 0; i < m; ++i) two.set(i, i, 2);
    return LinearCode(hconcat(FpMatrix::identity(5, m), u * two * v));
}

}  // namespace sd5
