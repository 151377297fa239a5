// Command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 a computation disagreed
// with the expected argument (divergence) or a search reached weight >= 10.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sd5/io.hpp"
#include "sd5/pipeline.hpp"

namespace {

using namespace sd5;

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string polynomial(const WeightEnumerator& w) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
        if (!w.coefficients[i]) continue;
        out << (first ? "" : " + ") << w.coefficients[i] << " x^" << (w.length - i) << " y^" << i;
        first = false;
    }
    return out.str();
}

int cmd_preliminaries(bool as_json) {
    const auto rep = verify_preliminaries();
    if (as_json) {
        print_json(rep);
    } else {
        for (const auto& c : rep.checks)
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.certificate.dump() << '\n';
    }
    return rep.passed() ? 0 : 2;
}

int cmd_refute(const std::string& path, bool as_json, const SweepOptions& sweep) {
    const auto code = read_code_file(path);
    const auto rep = refute_candidate(code, {sweep});
    if (as_json) {
        print_json(rep);
    } else {
        for (const auto& st : rep.stages)
            std::cout << json(st.verdict).get<std::string>() << "  " << st.name << '\n';
        std::cout << "conclusion: " << json(rep.conclusion).get<std::string>() << '\n';
    }
    return rep.conclusion == Conclusion::divergence ? 2 : 0;
}

int cmd_search(SearchOptions opt, const std::string& out_path, bool as_json) {
    const auto s = search(opt);
    const bool reached = s.best_weight >= kCandidateMinWeight;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << "# search seed " << s.seed << " trial " << s.best_trial << " minimum weight " << s.best_weight << '\n';
        write_code(out, s.best_code);
    }
    if (as_json) {
        print_json(s);
    } else {
        std::cout << "trials " << s.trials << ", best minimum weight " << s.best_weight << " (trial " << s.best_trial
                  << "), pruned " << s.pruned << '\n';
        for (const auto& [w, c] : s.histogram) std::cout << "  d = " << w << ": " << c << '\n';
        if (reached) std::cout << "weight >= " << kCandidateMinWeight << " reached; see the best code\n";
    }
    return reached ? 2 : 0;
}

int cmd_code_info(const std::string& path, bool as_json, const SweepOptions& sweep) {
    const auto code = read_code_file(path);
    json j = {{"q", code.modulus()},
              {"n", code.length()},
              {"k", code.dimension()},
              {"self_orthogonal", is_self_orthogonal(code)},
              {"self_dual", is_self_dual(code)}};
    std::string hamming_text;
    if (code.modulus() == 5) {
        const auto table = sweep_compositions(code, sweep);
        const auto h = hamming_enumerator(table);
        hamming_text = polynomial(h);
        j["hamming_enumerator"] = h.coefficients;
        json lee = json::array();
        for (const auto& [e, c] : lee_enumerator(table).terms) lee.push_back({e.first, e.second, c});
        j["lee_enumerator"] = lee;
        json comps = json::array();
        for (const auto& e : table.entries()) comps.push_back({e.n0, e.n1, e.n2, e.count});
        j["compositions"] = comps;
        if (code.dimension() > 0) j["minimum_weight"] = minimum_weight(table, WeightKind::hamming);
    }
    if (as_json) {
        print_json(j);
        return 0;
    }
    std::cout << "[" << code.length() << ", " << code.dimension() << "] code over F_" << code.modulus() << '\n'
              << "self-orthogonal " << j["self_orthogonal"] << ", self-dual " << j["self_dual"] << '\n';
    if (j.contains("minimum_weight")) std::cout << "minimum weight " << j["minimum_weight"] << '\n';
    if (!hamming_text.empty()) std::cout << "W(x, y) = " << hamming_text << '\n';
    return 0;
}

int cmd_lattice_info(const std::string& path, Int theta_bound, bool as_json) {
    const auto l = read_gram_file(path);
    const auto md = minimum_data(l);
    json comps = json::array();
    for (const auto& c : decompose(l)) comps.push_back(c.lattice.dim());
    const json j = {{"dim", l.dim()},
                    {"det", determinant(l)},
                    {"unimodular", is_unimodular(l)},
                    {"even", is_even(l)},
                    {"min_norm", md.norm},
                    {"kissing", md.kissing},
                    {"theta", theta_series(l, theta_bound)},
                    {"component_dims", comps}};
    if (as_json) {
        print_json(j);
        return 0;
    }
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << '\n';
    return 0;
}

int cmd_construction_a(const std::string& path, const std::string& out_path) {
    const auto ca = construction_a(read_code_file(path));
    if (out_path.empty()) {
        write_gram(std::cout, ca.lattice);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    write_gram(out, ca.lattice);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual codes over F_5, Construction A lattices, and the [24, 12, 10] nonexistence check"};
    app.require_subcommand(1);
    bool as_json = false;
    std::size_t workers = 0;
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_option("--workers", workers, "Sweep threads (default: SD5_WORKERS or hardware concurrency)");

    auto* prelim = app.add_subcommand("verify-preliminaries", "Check the fixed lattice and coding facts");

    std::string code_path;
    auto* refute = app.add_subcommand("refute", "Run the nonexistence argument on a candidate code");
    refute->add_option("code", code_path, "Code file")->required()->check(CLI::ExistingFile);

    SearchOptions sopt;
    std::string out_path;
    auto* search_cmd = app.add_subcommand("search", "Random self-dual codes, best minimum weight");
    search_cmd->add_option("--trials", sopt.trials, "Number of codes")->capture_default_str();
    search_cmd->add_option("--seed", sopt.seed, "Master seed")->capture_default_str();
    search_cmd->add_option("--length", sopt.length, "Code length (even)")->capture_default_str();
    search_cmd->add_option("--budget-seconds", sopt.budget_seconds, "Abort after this wall time (0: none)");
    search_cmd->add_option("--out", out_path, "Write the best code here");

    auto* code_info = app.add_subcommand("code-info", "Parameters and enumerators of a code");
    code_info->add_option("code", code_path, "Code file")->required()->check(CLI::ExistingFile);

    std::string gram_path;
    Int theta_bound = 4;
    auto* lattice_info = app.add_subcommand("lattice-info", "Invariants of a lattice");
    lattice_info->add_option("gram", gram_path, "Gram file")->required()->check(CLI::ExistingFile);
    lattice_info->add_option("--theta-bound", theta_bound, "Largest norm in the theta series")->capture_default_str();

    auto* cona = app.add_subcommand("construction-a", "Write the Construction A lattice of a code");
    cona->add_option("code", code_path, "Code file")->required()->check(CLI::ExistingFile);
    cona->add_option("--out", out_path, "Gram file to write (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    SweepOptions sweep;
    sweep.workers = workers;
    sopt.sweep = sweep;
    try {
        if (*prelim) return cmd_preliminaries(as_json);
        if (*refute) return cmd_refute(code_path, as_json, sweep);
        if (*search_cmd) return cmd_search(sopt, out_path, as_json);
        if (*code_info) return cmd_code_info(code_path, as_json, sweep);
        if (*lattice_info) return cmd_lattice_info(gram_path, theta_bound, as_json);
        if (*cona) return cmd_construction_a(code_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
