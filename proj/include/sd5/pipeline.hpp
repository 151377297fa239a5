#pragma once

// Nonexistence argument for self-dual [24, 12, 10] codes over F_5, run on a
// concrete candidate. Each stage checks one step of the argument and stores
// exact data that other modules can re-derive; the first failing stage fixes
// the conclusion.
//
//   1 parameters               n = 24, k = 12, C self-dual
//   2 minimum-weight           d(C) = 10 (else a lighter codeword is the witness)
//   3 kissing-number           A_5(C) has minimum norm 2 and kissing number 528
//   4 decomposition            A_5(C) splits into two 12-dimensional summands
//   5 unit-vector-assignment   each 5 e_i lies in exactly one summand, 12 per summand
//   6 component-codes          the summands read off two self-dual codes of length 12
//   7 singleton-contradiction  those codes have d <= 7 < 10, contradicting stage 2

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sd5/codes.hpp"
#include "sd5/construction_a.hpp"
#include "sd5/lattices.hpp"

namespace sd5 {

using json = nlohmann::json;

inline constexpr std::size_t kCandidateLength = 24;
inline constexpr std::size_t kCandidateDimension = 12;
inline constexpr std::size_t kCandidateMinWeight = 10;
inline constexpr std::size_t kComponentLength = 12;
inline constexpr Int kExpectedMinNorm = 2;
inline constexpr std::uint64_t kExpectedKissing = 528;

enum class Verdict { pass, fail, not_reached };

enum class Conclusion { not_self_dual, min_weight_below_10, contradiction_derived, divergence };

inline const std::vector<std::string>& stage_names() {
    static const std::vector<std::string> names = {"parameters",
                                                   "minimum-weight",
                                                   "kissing-number",
                                                   "decomposition",
                                                   "unit-vector-assignment",
                                                   "component-codes",
                                                   "singleton-contradiction"};
    return names;
}

NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::pass, "pass"},
                                       {Verdict::fail, "fail"},
                                       {Verdict::not_reached, "not-reached"}})

NLOHMANN_JSON_SERIALIZE_ENUM(Conclusion, {{Conclusion::not_self_dual, "not-self-dual"},
                                          {Conclusion::min_weight_below_10, "min-weight-below-10"},
                                          {Conclusion::contradiction_derived, "contradiction-derived"},
                                          {Conclusion::divergence, "paper-step-divergence"}})

struct Stage {
    std::string name;
    Verdict verdict = Verdict::not_reached;
    json certificate = json::object();
    friend bool operator==(const Stage&, const Stage&) = default;
};

struct RefutationReport {
    std::vector<Stage> stages;
    Conclusion conclusion = Conclusion::divergence;

    RefutationReport() {
        for (const auto& name : stage_names()) stages.push_back({name, Verdict::not_reached, json::object()});
    }

    Stage& stage(std::size_t number) { return stages.at(number - 1); }
    const Stage& stage(std::size_t number) const { return stages.at(number - 1); }

    friend bool operator==(const RefutationReport&, const RefutationReport&) = default;
};

inline void to_json(json& j, const Stage& s) {
    j = json{{"name", s.name}, {"verdict", s.verdict}, {"certificate", s.certificate}};
}
inline void from_json(const json& j, Stage& s) {
    j.at("name").get_to(s.name);
    j.at("verdict").get_to(s.verdict);
    s.certificate = j.at("certificate");
}
inline void to_json(json& j, const RefutationReport& r) {
    j = json{{"conclusion", r.conclusion}, {"stages", r.stages}};
}
inline void from_json(const json& j, RefutationReport& r) {
    j.at("conclusion").get_to(r.conclusion);
    j.at("stages").get_to(r.stages);
    if (r.stages.size() != stage_names().size()) throw std::invalid_argument("report has the wrong number of stages");
    for (std::size_t i = 0; i < r.stages.size(); ++i)
        if (r.stages[i].name != stage_names()[i]) throw std::invalid_argument("report stages out of order");
}

namespace detail {

inline json word_json(std::span<const std::uint8_t> w) {
    json a = json::array();
    for (auto v : w) a.push_back(static_cast<int>(v));
    return a;
}

inline Word word_from_json(const json& j) {
    Word w;
    for (const auto& v : j) w.push_back(static_cast<std::uint8_t>(v.get<int>()));
    return w;
}

inline json rows_json(const std::vector<std::vector<Int>>& rows) { return json(rows); }

}  // namespace detail

struct RefuteOptions {
    SweepOptions sweep;
};

/// Stages 4-6 in coordinate-block form: decompose A_5(C), group summands
/// into coordinate-aligned blocks, and read a code off each block.
struct CodeSplit {
    std::vector<LatticeComponent> components;
    UnitAssignment assignment;
    std::vector<CoordinateBlock> blocks;
    std::vector<LinearCode> codes;  // codes[b] lives on blocks[b].support
};

inline CodeSplit split_code(const LinearCode& c) {
    CodeSplit s;
    const auto ca = construction_a(c);
    s.components = decompose(ca.lattice);
    s.assignment = unit_vector_assignment(s.components, c.length());
    s.blocks = coordinate_blocks(s.components, c.length());
    for (const auto& b : s.blocks) s.codes.push_back(component_code(b.lattice, b.support));
    return s;
}

/// Embeds codes given on disjoint coordinate sets into one code of length n.
inline LinearCode place_codes(const std::vector<LinearCode>& codes,
                              const std::vector<std::vector<std::size_t>>& supports, std::size_t n) {
    std::size_t k = 0;
    for (const auto& c : codes) k += c.dimension();
    FpMatrix g(5, k, n);
    std::size_t row = 0;
    for (std::size_t b = 0; b < codes.size(); ++b) {
        if (supports[b].size() != codes[b].length()) throw std::invalid_argument("support size differs from code length");
        for (std::size_t i = 0; i < codes[b].dimension(); ++i, ++row)
            for (std::size_t j = 0; j < codes[b].length(); ++j) g.set(row, supports[b][j], codes[b].generator()(i, j));
    }
    return LinearCode(g);
}

/// Stages 3-7. Stages 1-2 are expected to have passed; the function does not
/// look at them, so it can also be exercised on codes that would stop earlier.
inline void run_lattice_stages(const LinearCode& c, RefutationReport& report, const RefuteOptions& opt = {}) {
    const std::size_t n = c.length();
    auto diverge = [&](std::size_t stage) {
        report.stage(stage).verdict = Verdict::fail;
        report.conclusion = Conclusion::divergence;
    };

    // 3: kissing number from the codeword census
    {
        auto& st = report.stage(3);
        const auto table = sweep_compositions(c, opt.sweep);
        const auto md = kissing_from_compositions(table);
        st.certificate = {{"min_norm", md.norm},
                          {"kissing", md.kissing},
                          {"lee_x14_y10", lee_enumerator(table).coefficient(14, 10)},
                          {"theta", theta_from_compositions(table, 5)}};
        if (md.norm != kExpectedMinNorm || md.kissing != kExpectedKissing) return diverge(3);
        st.verdict = Verdict::pass;
    }

    // 4: orthogonal decomposition of A_5(C)
    const auto ca = construction_a(c);
    std::vector<LatticeComponent> comps;
    {
        auto& st = report.stage(4);
        try {
            comps = decompose(ca.lattice);
        } catch (const decomposition_error& e) {
            st.certificate = {{"error", e.what()}};
            return diverge(4);
        }
        json arr = json::array();
        for (const auto& comp : comps) {
            const auto md = minimum_data(comp.lattice);
            arr.push_back({{"dim", comp.lattice.dim()},
                           {"det", determinant(comp.lattice)},
                           {"min_norm", md.norm},
                           {"kissing", md.kissing}});
        }
        st.certificate = {{"components", arr}};
        if (comps.size() != 2 || comps[0].lattice.dim() != kComponentLength || comps[1].lattice.dim() != kComponentLength)
            return diverge(4);
        st.verdict = Verdict::pass;
    }

    // 5: every 5 e_i lies in exactly one summand
    const auto assignment = unit_vector_assignment(comps, n);
    std::vector<std::vector<std::size_t>> supports;
    {
        auto& st = report.stage(5);
        std::vector<std::size_t> split;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            supports.push_back(assignment.support(k));
            split.push_back(supports.back().size());
        }
        st.certificate = {{"owners", assignment.owners},
                          {"split", split},
                          {"unowned", assignment.unowned()},
                          {"multiply_owned", assignment.multiply_owned()}};
        if (!assignment.complete() || split != std::vector<std::size_t>{kComponentLength, kComponentLength})
            return diverge(5);
        st.verdict = Verdict::pass;
    }

    // 6: component codes
    std::vector<LinearCode> codes;
    {
        auto& st = report.stage(6);
        json arr = json::array();
        bool ok = true;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            LinearCode code;
            try {
                code = component_code(comps[k].lattice, supports[k]);
            } catch (const std::invalid_argument& e) {
                st.certificate = {{"error", e.what()}, {"component", k}};
                return diverge(6);
            }
            const bool sd = is_self_dual(code);
            ok = ok && sd && code.length() == kComponentLength;
            arr.push_back({{"support", supports[k]},
                           {"generator", detail::rows_json(code.generator().to_rows())},
                           {"self_dual", sd}});
            codes.push_back(std::move(code));
        }
        st.certificate = {{"codes", arr}};
        if (!ok) return diverge(6);
        st.verdict = Verdict::pass;
    }

    // 7: Singleton bound on the components against the demanded weight
    {
        auto& st = report.stage(7);
        const std::size_t bound = singleton_bound(kComponentLength, kComponentLength / 2);
        std::vector<std::size_t> weights;
        json witnesses = json::array();
        bool all_below = true;
        for (const auto& code : codes) {
            const auto w = minimum_hamming_weight(code, opt.sweep);
            weights.push_back(w.weight);
            witnesses.push_back(detail::word_json(w.word));
            all_below = all_below && w.weight <= bound;
        }
        st.certificate = {{"component_min_weights", weights},
                          {"component_witnesses", witnesses},
                          {"singleton_bound", bound},
                          {"required_min_weight", kCandidateMinWeight}};
        if (!all_below || bound >= kCandidateMinWeight) return diverge(7);
        st.verdict = Verdict::pass;
        report.conclusion = Conclusion::contradiction_derived;
    }
}

/// Runs the full argument on an arbitrary candidate code.
inline RefutationReport refute_candidate(const LinearCode& c, const RefuteOptions& opt = {}) {
    RefutationReport report;

    auto& s1 = report.stage(1);
    const bool sd = c.modulus() == 5 && is_self_dual(c);
    s1.certificate = {{"q", c.modulus()}, {"n", c.length()}, {"k", c.dimension()}, {"self_dual", sd}};
    if (!sd || c.length() != kCandidateLength || c.dimension() != kCandidateDimension) {
        s1.verdict = Verdict::fail;
        report.conclusion = Conclusion::not_self_dual;
        return report;
    }
    s1.verdict = Verdict::pass;

    auto& s2 = report.stage(2);
    if (auto light = find_word_below(c, kCandidateMinWeight, opt.sweep)) {
        s2.verdict = Verdict::fail;
        s2.certificate = {{"witness", detail::word_json(light->word)}, {"weight", light->weight}};
        report.conclusion = Conclusion::min_weight_below_10;
        return report;
    }
    const auto exact = minimum_hamming_weight(c, opt.sweep);
    s2.certificate = {{"witness", detail::word_json(exact.word)}, {"weight", exact.weight}};
    if (exact.weight != kCandidateMinWeight) {
        s2.verdict = Verdict::fail;
        report.conclusion = Conclusion::divergence;
        return report;
    }
    s2.verdict = Verdict::pass;

    run_lattice_stages(c, report, opt);
    return report;
}

/// Re-derives every certificate in `report` for the code `c` through routes
/// independent of the ones that produced it. Returns the problems found.
inline std::vector<std::string> recheck_certificates(const RefutationReport& report, const LinearCode& c) {
    std::vector<std::string> problems;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    };
    bool seen_fail = false;
    for (std::size_t i = 0; i < report.stages.size(); ++i) {
        const auto& st = report.stages[i];
        expect(st.name == stage_names()[i], "stage " + std::to_string(i + 1) + " has the wrong name");
        if (seen_fail) expect(st.verdict == Verdict::not_reached, "stage after a failure was run: " + st.name);
        if (st.verdict == Verdict::fail) seen_fail = true;
        if (!seen_fail && st.verdict == Verdict::not_reached && report.conclusion != Conclusion::contradiction_derived)
            problems.push_back("stage skipped without an earlier failure: " + st.name);
    }
    if (report.conclusion == Conclusion::contradiction_derived)
        for (const auto& st : report.stages) expect(st.verdict == Verdict::pass, "contradiction with non-passing stage " + st.name);

    const auto& s1 = report.stage(1);
    if (s1.verdict != Verdict::not_reached) {
        expect(s1.certificate.at("n") == c.length() && s1.certificate.at("k") == c.dimension(), "stage 1 parameters");
        expect(s1.certificate.at("self_dual") == (c.modulus() == 5 && is_self_dual(c)), "stage 1 self-duality");
    }
    const auto& s2 = report.stage(2);
    if (s2.verdict != Verdict::not_reached) {
        const Word w = detail::word_from_json(s2.certificate.at("witness"));
        expect(c.contains(w), "stage 2 witness is not a codeword");
        expect(hamming_weight(w) == s2.certificate.at("weight").get<std::size_t>() && hamming_weight(w) > 0,
               "stage 2 witness weight");
        if (s2.verdict == Verdict::fail && report.conclusion == Conclusion::min_weight_below_10)
            expect(hamming_weight(w) < kCandidateMinWeight, "stage 2 witness is not below 10");
        if (s2.verdict == Verdict::pass)
            expect(hamming_weight(w) == kCandidateMinWeight && !find_word_below(c, kCandidateMinWeight),
                   "stage 2 passed without minimum weight 10");
    }
    const auto& s3 = report.stage(3);
    if (s3.verdict != Verdict::not_reached) {
        const auto md = minimum_data(construction_a(c).lattice);
        expect(s3.certificate.at("min_norm") == md.norm, "stage 3 minimum norm");
        expect(s3.certificate.at("kissing") == md.kissing, "stage 3 kissing number");
    }
    const auto& s4 = report.stage(4);
    if (s4.verdict != Verdict::not_reached && s4.certificate.contains("components")) {
        std::size_t total = 0;
        Int det = 1;
        for (const auto& comp : s4.certificate.at("components")) {
            total += comp.at("dim").get<std::size_t>();
            det *= comp.at("det").get<Int>();
        }
        expect(total == c.length(), "stage 4 component dimensions");
        expect(det == 1, "stage 4 component determinants");
    }
    const auto& s6 = report.stage(6);
    std::vector<LinearCode> codes;
    std::vector<std::vector<std::size_t>> supports;
    if (s6.verdict != Verdict::not_reached && s6.certificate.contains("codes")) {
        for (const auto& entry : s6.certificate.at("codes")) {
            supports.push_back(entry.at("support").get<std::vector<std::size_t>>());
            const auto rows = entry.at("generator").get<std::vector<std::vector<Int>>>();
            codes.emplace_back(FpMatrix::from_rows(5, rows, supports.back().size()));
            expect(entry.at("self_dual") == is_self_dual(codes.back()), "stage 6 self-duality flag");
        }
        if (s6.verdict == Verdict::pass)
            expect(place_codes(codes, supports, c.length()) == c, "stage 6 codes do not reassemble the candidate");
    }
    const auto& s7 = report.stage(7);
    if (s7.verdict != Verdict::not_reached) {
        const auto weights = s7.certificate.at("component_min_weights").get<std::vector<std::size_t>>();
        const auto witnesses = s7.certificate.at("component_witnesses");
        expect(weights.size() == codes.size(), "stage 7 component count");
        for (std::size_t i = 0; i < weights.size() && i < codes.size(); ++i) {
            const Word w = detail::word_from_json(witnesses.at(i));
            expect(codes[i].contains(w) && hamming_weight(w) == weights[i], "stage 7 witness");
        }
        expect(s7.certificate.at("singleton_bound") == singleton_bound(kComponentLength, kComponentLength / 2),
               "stage 7 Singleton bound");
    }
    return problems;
}

struct PreliminaryCheck {
    std::string name;
    bool passed = false;
    json certificate;
};

struct PreliminaryReport {
    std::vector<PreliminaryCheck> checks;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const PreliminaryCheck& c) { return c.passed; });
    }
};

inline void to_json(json& j, const PreliminaryCheck& c) {
    j = json{{"name", c.name}, {"passed", c.passed}, {"certificate", c.certificate}};
}
inline void to_json(json& j, const PreliminaryReport& r) { j = json{{"passed", r.passed()}, {"checks", r.checks}}; }

struct PreliminaryOptions {
    std::uint64_t seed = 20240601;
    std::size_t duality_instances = 50;
};

/// Random code with `rows` random generator rows of length n (rank may drop).
inline LinearCode random_code(std::size_t n, std::size_t rows, CounterRng& rng) {
    FpMatrix g(5, rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) g.set(i, j, static_cast<Int>(rng.below(5)));
    return LinearCode(g);
}

/// The fixed lattice and coding facts the argument relies on.
inline PreliminaryReport verify_preliminaries(const PreliminaryOptions& opt = {}) {
    PreliminaryReport rep;

    {
        const auto l = dn_plus(12);
        const auto md = minimum_data(l);
        const Int det = determinant(l);
        const bool odd = !is_even(l);
        rep.checks.push_back({"d12plus-invariants",
                              det == 1 && odd && md.norm == 2 && md.kissing == 264,
                              {{"det", det}, {"odd", odd}, {"min_norm", md.norm}, {"kissing", md.kissing}}});
    }
    {
        const auto l = dn_plus(8);
        const auto md = minimum_data(l);
        const Int det = determinant(l);
        const bool even = is_even(l);
        rep.checks.push_back({"d8plus-is-e8",
                              det == 1 && even && md.norm == 2 && md.kissing == 240,
                              {{"det", det}, {"even", even}, {"min_norm", md.norm}, {"kissing", md.kissing}}});
    }
    {
        const auto sum = direct_sum(dn_plus(12), dn_plus(12));
        const auto md = minimum_data(sum);
        const auto comps = decompose(sum);
        json arr = json::array();
        bool ok = md.norm == 2 && md.kissing == 528 && comps.size() == 2;
        for (const auto& comp : comps) {
            const auto cm = minimum_data(comp.lattice);
            arr.push_back({{"dim", comp.lattice.dim()}, {"det", determinant(comp.lattice)}, {"kissing", cm.kissing}});
            ok = ok && comp.lattice.dim() == 12 && cm.kissing == 264 && determinant(comp.lattice) == 1;
        }
        rep.checks.push_back({"d12plus-sum",
                              ok,
                              {{"det", determinant(sum)}, {"min_norm", md.norm}, {"kissing", md.kissing}, {"components", arr}}});
    }
    {
        const std::size_t bound = singleton_bound(12, 6);
        rep.checks.push_back({"singleton-length-12",
                              bound == 7 && bound < kCandidateMinWeight,
                              {{"n", 12}, {"k", 6}, {"bound", bound}, {"required", kCandidateMinWeight}}});
    }
    {
        const LinearCode c12(FpMatrix::from_rows(5, {{1, 2}}));
        bool ok = dual(direct_sum(c12, c12)) == direct_sum(dual(c12), dual(c12));
        CounterRng rng(opt.seed);
        std::size_t checked = 1;
        for (std::size_t t = 0; t < opt.duality_instances; ++t) {
            const auto n1 = 1 + rng.below(6), n2 = 1 + rng.below(6);
            const auto a = random_code(n1, rng.below(n1 + 1), rng);
            const auto b = random_code(n2, rng.below(n2 + 1), rng);
            ok = ok && dual(direct_sum(a, b)) == direct_sum(dual(a), dual(b));
            ++checked;
        }
        rep.checks.push_back({"direct-sum-duality", ok, {{"instances", checked}, {"seed", opt.seed}}});
    }
    return rep;
}

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t length = 24;
    double budget_seconds = 0;  // 0: unlimited
    SweepOptions sweep;
};

struct SearchSummary {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t length = 0;
    std::size_t best_weight = 0;
    std::size_t best_trial = 0;
    LinearCode best_code;
    std::map<std::size_t, std::uint64_t> histogram;  // exact minima of fully swept trials
    std::uint64_t pruned = 0;                         // trials stopped early below the running best

    friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

inline void to_json(json& j, const SearchSummary& s) {
    json hist = json::object();
    for (const auto& [w, c] : s.histogram) hist[std::to_string(w)] = c;
    j = json{{"trials", s.trials},
             {"seed", s.seed},
             {"length", s.length},
             {"best_weight", s.best_weight},
             {"best_trial", s.best_trial},
             {"histogram", hist},
             {"pruned", s.pruned},
             {"best_generator", s.best_code.generator().to_rows()},
             {"reached_candidate_weight", s.best_weight >= kCandidateMinWeight}};
}

/// Seed of trial t: the t-th output of CounterRng(seed).
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    return CounterRng::mix(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Random self-dual codes of length n; the best minimum weight over `trials`.
/// A trial is abandoned as soon as it shows a codeword lighter than the
/// running best.
inline SearchSummary search(const SearchOptions& opt) {
    if (opt.trials == 0) throw std::invalid_argument("search needs at least one trial");
    if (opt.length == 0 || opt.length % 2) throw std::invalid_argument("search needs an even positive length");
    const auto start = std::chrono::steady_clock::now();
    SearchSummary s;
    s.trials = opt.trials;
    s.seed = opt.seed;
    s.length = opt.length;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const auto code = random_self_dual(opt.length, trial_seed(opt.seed, t));
        if (t > 0 && find_word_below(code, s.best_weight, opt.sweep)) {
            ++s.pruned;
        } else {
            const auto w = minimum_hamming_weight(code, opt.sweep).weight;
            ++s.histogram[w];
            if (t == 0 || w > s.best_weight) {
                s.best_weight = w;
                s.best_trial = t;
                s.best_code = code;
            }
        }
        if (opt.budget_seconds > 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() > opt.budget_seconds && t + 1 < opt.trials)
                throw budget_exceeded("search exceeded its budget after " + std::to_string(t + 1) + " trials");
        }
    }
    return s;
}

}  // namespace sd5
