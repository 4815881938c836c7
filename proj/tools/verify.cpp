// verify <spec> [--suite <name>...] [--tol <x>] [--window <N>] [--quadrature <M>]
//        [--seed <k>] [--report <path>] [--json <path>]
// Exit: 0 all pass, 1 some check failed, 2 bad input, 3 ill-conditioned numerics.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockdual/instance_spec.hpp"
#include "fockdual/suites.hpp"

using namespace fockdual;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitIllConditioned = 3;

bool write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    f << body;
    return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify Fock-module identities on a finite-dimensional bimodule"};
    std::string spec_path, report_path, json_path;
    std::vector<std::string> suites;
    std::optional<double> tol;
    std::optional<int> window, quadrature;
    std::optional<std::uint64_t> seed;
    app.add_option("spec", spec_path, "instance file")->required();
    app.add_option("--suite", suites, "suites to run (default: all)");
    app.add_option("--tol", tol, "rank and kernel threshold (default 1e-9)");
    app.add_option("--window", window, "window radius N (default 3)")->check(CLI::PositiveNumber);
    app.add_option("--quadrature", quadrature, "quadrature points M (default 4N+2)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "random seed");
    app.add_option("--report", report_path, "write the text report here");
    app.add_option("--json", json_path, "write the structured report here");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    InstanceSpec spec = [&]() {
        try {
            return load_instance(spec_path);
        } catch (const ParseError& e) {
            std::cerr << "verify: " << spec_path << ": " << e.what() << '\n';
            std::exit(kExitInput);
        }
    }();

    SuiteConfig cfg;
    cfg.tol = tol.value_or(spec.tol.value_or(cfg.tol));
    cfg.radius = window.value_or(spec.window.value_or(cfg.radius));
    cfg.quadrature = quadrature.value_or(spec.quadrature.value_or(0));
    cfg.seed = seed.value_or(spec.seed.value_or(cfg.seed));
    if (!(cfg.tol > 0)) {
        std::cerr << "verify: --tol must be positive\n";
        return kExitInput;
    }
    if (suites.empty()) suites = spec.suites;
    if (suites.empty()) suites = suite_names();
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            std::cerr << "verify: unknown suite '" << s << "'\n";
            return kExitInput;
        }

    const auto start = std::chrono::steady_clock::now();
    // suites share nothing but the read-only bimodule
    std::vector<std::future<Report>> jobs;
    for (const auto& s : suites)
        jobs.push_back(std::async(std::launch::async, [&spec, &cfg, s]() { return run_suite(s, spec.bimodule, cfg); }));
    std::vector<Report> reports;
    try {
        for (auto& j : jobs) reports.push_back(j.get());
    } catch (const IllConditionedError& e) {
        std::cerr << "verify: ill-conditioned: " << e.what() << '\n';
        return kExitIllConditioned;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool pass = true;
    std::ostringstream text;
    text << "instance " << spec.target << "  N=" << cfg.radius << "  M=" << cfg.quadrature_points()
         << "  tol=" << cfg.tol << "  seed=" << cfg.seed << '\n';
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& r : reports) {
        pass = pass && r.passed();
        text << r.to_text();
        for (const auto& e : r.entries())
            entries.push_back({{"suite", e.suite},
                               {"check_id", e.check_id},
                               {"anchor", e.anchor},
                               {"violation", e.violation},
                               {"tolerance", e.tolerance},
                               {"pass", e.pass},
                               {"note", e.note}});
    }
    text << (pass ? "PASS" : "FAIL") << "  " << reports.size() << " suites in " << elapsed << " s\n";
    std::cout << text.str();

    if (!report_path.empty() && !write_file(report_path, text.str())) {
        std::cerr << "verify: cannot write " << report_path << '\n';
        return kExitInput;
    }
    if (!json_path.empty()) {
        const nlohmann::json doc = {{"instance", spec.target},
                                    {"seed", cfg.seed},
                                    {"window", cfg.radius},
                                    {"quadrature", cfg.quadrature_points()},
                                    {"tol", cfg.tol},
                                    {"pass", pass},
                                    {"elapsed_seconds", elapsed},
                                    {"entries", entries}};
        if (!write_file(json_path, doc.dump(2) + "\n")) {
            std::cerr << "verify: cannot write " << json_path << '\n';
            return kExitInput;
        }
    }
    return pass ? 0 : kExitFail;
}
