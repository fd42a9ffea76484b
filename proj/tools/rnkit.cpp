// rnkit - solve, scan and verify the generalized Ramanujan-Nagell equation
// D1 x^2 + D2^m = 2^(n+2).
//
// Exit codes: 0 success, 2 validation error, 3 structural/oracle discrepancy.
// stdout carries data; stderr carries diagnostics.

#include "rnkit/classifier.hpp"
#include "rnkit/report.hpp"
#include "rnkit/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace rnkit;

unsigned long default_n_max() {
    if (const char* env = std::getenv("RNKIT_DEFAULT_NMAX")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            return v;
        std::cerr << "rnkit: ignoring malformed RNKIT_DEFAULT_NMAX='" << env << "'\n";
    }
    return kDefaultNMax;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void print_solve_text(const Classification& cls) {
    std::cout << "instance (D1, D2) = (" << cls.inst.d1 << ", " << cls.inst.d2 << ")\n";
    for (const auto& s : cls.solutions)
        std::cout << "(x, m, n) = (" << s.sol.x << ", " << s.sol.m << ", " << s.sol.n
                  << ")  [" << s.case_label << "; " << s.provenance << "]\n";
    std::cout << "N(" << cls.inst.d1 << ", " << cls.inst.d2 << ") = " << cls.count << "\n";
    if (cls.theorem_a_mode)
        std::cout << "theorem_a_exception = " << (cls.theorem_a_exception ? "true" : "false") << "\n";
    else
        std::cout << "theorem_b_exception = " << (cls.theorem_b_exception ? "true" : "false") << "\n";
    for (const auto& note : cls.notes)
        std::cout << "note: " << note << "\n";
    if (cls.discrepancy) {
        std::cout << "DISCREPANCY between structural and oracle routes:\n";
        for (const auto& d : cls.discrepancy_details)
            std::cout << "  " << d << "\n";
    }
}

void print_solve_csv(const Classification& cls) {
    std::cout << "d1,d2,x,m,n,case\n";
    for (const auto& s : cls.solutions)
        std::cout << cls.inst.d1 << "," << cls.inst.d2 << "," << s.sol.x << ","
                  << s.sol.m << "," << s.sol.n << "," << s.case_label << "\n";
}

int cmd_solve(const std::string& d1s, const std::string& d2s, unsigned long n_max,
              unsigned long z_bound, const std::string& format) {
    auto start = std::chrono::steady_clock::now();
    Instance inst{Integer(d1s), Integer(d2s)};
    if (auto v = inst.violation()) {
        std::cerr << "rnkit solve: " << *v << "\n";
        return 2;
    }
    Classification cls = classify(inst, n_max, z_bound);
    if (format == "json") {
        json j = to_json(cls);
        j["command"] = "solve";
        j["elapsed_ms"] = elapsed_ms(start);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_solve_csv(cls);
    } else {
        print_solve_text(cls);
    }
    return cls.discrepancy ? 3 : 0;
}

int cmd_scan(unsigned long d_max, unsigned long n_max, unsigned int jobs,
             const std::string& format) {
    auto start = std::chrono::steady_clock::now();
    auto rows = scan(d_max, n_max, jobs);
    std::size_t inconsistent = 0;
    for (const auto& r : rows)
        inconsistent += r.theorem_b_consistent ? 0 : 1;
    if (format == "json") {
        json j;
        j["command"] = "scan";
        j["bounds"] = {{"d_max", d_max}, {"n_max", n_max}};
        j["rows"] = json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"d1", r.d1.get_str()},
                                 {"d2", r.d2.get_str()},
                                 {"count", r.count},
                                 {"theorem_b_consistent", r.theorem_b_consistent}});
        j["inconsistent"] = inconsistent;
        j["elapsed_ms"] = elapsed_ms(start);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "d1,d2,count,theorem_b_consistent\n";
        for (const auto& r : rows)
            std::cout << r.d1 << "," << r.d2 << "," << r.count << ","
                      << (r.theorem_b_consistent ? "true" : "false") << "\n";
        std::cout << "inconsistent=" << inconsistent << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& lemma, bool all,
               const std::vector<std::string>& bound_overrides,
               const std::string& format) {
    auto start = std::chrono::steady_clock::now();
    SearchBounds bounds;
    for (const auto& kv : bound_overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "rnkit verify: bound override must be name=value: " << kv << "\n";
            return 2;
        }
        bounds[kv.substr(0, eq)] = std::stoul(kv.substr(eq + 1));
    }
    std::vector<LemmaReport> reports;
    try {
        if (all)
            reports = run_all_lemmas(bounds);
        else
            reports.push_back(run_lemma(lemma, bounds));
    } catch (const std::invalid_argument& e) {
        std::cerr << "rnkit verify: " << e.what() << "\n";
        return 2;
    }
    bool ok = true;
    if (format == "json") {
        json j;
        j["command"] = "verify";
        j["reports"] = json::array();
        for (const auto& rep : reports)
            j["reports"].push_back(to_json(rep));
        j["elapsed_ms"] = elapsed_ms(start);
        std::cout << j.dump(2) << "\n";
        for (const auto& rep : reports)
            ok = ok && rep.confirmed();
    } else {
        for (const auto& rep : reports) {
            std::cout << "Lemma " << rep.lemma << ": " << rep.verdict();
            if (!rep.found.empty() || !rep.claimed.empty())
                std::cout << " (claimed " << rep.claimed.size() << ", found "
                          << rep.found.size() << ")";
            std::cout << "\n";
            for (const auto& note : rep.notes)
                std::cout << "  note: " << note << "\n";
            ok = ok && rep.confirmed();
        }
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Ramanujan-Nagell solver and lemma verifier"};
    app.require_subcommand(1);

    std::string d1, d2;
    unsigned long n_max = default_n_max();
    unsigned long z_bound = rnkit::kDefaultZBound;
    std::string format = "text";

    auto* solve = app.add_subcommand("solve", "classify one instance (D1, D2)");
    solve->add_option("--d1", d1, "coefficient D1 (positive odd integer)")->required();
    solve->add_option("--d2", d2, "base D2 (positive odd integer)")->required();
    solve->add_option("--n-max", n_max, "exponent bound for the oracle");
    solve->add_option("--z-bound", z_bound, "bound for least-solution searches");
    solve->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    unsigned long d_max = 100;
    unsigned int jobs = 1;
    auto* scan_cmd = app.add_subcommand("scan", "brute-force census over a (D1, D2) grid");
    scan_cmd->add_option("--d-max", d_max, "upper bound on D1 and D2")->required();
    scan_cmd->add_option("--n-max", n_max, "exponent bound for the oracle");
    scan_cmd->add_option("--jobs", jobs, "parallel workers");
    scan_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string lemma;
    bool all = false;
    std::vector<std::string> overrides;
    auto* verify = app.add_subcommand("verify", "verify a lemma within bounds");
    verify->add_option("--lemma", lemma, "lemma id, e.g. 2.18");
    verify->add_flag("--all", all, "run the full lemma suite");
    verify->add_option("--bound", overrides, "bound override name=value (repeatable)");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(d1, d2, n_max, z_bound, format);
        if (scan_cmd->parsed())
            return cmd_scan(d_max, n_max, jobs, format);
        if (verify->parsed()) {
            if (!all && lemma.empty()) {
                std::cerr << "rnkit verify: need --lemma or --all\n";
                return 2;
            }
            return cmd_verify(lemma, all, overrides, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "rnkit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rnkit: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
