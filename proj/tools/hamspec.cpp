// hamspec command-line front end.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hamspec/harness.hpp"

int main(int argc, char** argv) {
    using namespace hamspec;
    ExperimentConfig cfg;
    CLI::App app{"Hamming-sphere spectra, Krawtchouk bounds and distance-set experiments over F_q^d"};
    app.add_option("command", cfg.command, "verify | bounds | theorem | search | lambda")
        ->required()
        ->check(CLI::IsMember({"verify", "bounds", "theorem", "search", "lambda"}));
    app.add_option("--d", cfg.d, "dimension")->required();
    app.add_option("--p", cfg.p, "field characteristic")->required();
    app.add_option("--l", cfg.l, "extension degree")->capture_default_str();
    app.add_option("--r", cfg.r, "distance (lambda: only this r; search: distance to avoid)");
    app.add_option("--size", cfg.size, "set size for theorem sampling");
    app.add_option("--trials", cfg.trials, "number of random trials")->capture_default_str();
    app.add_option("--steps", cfg.steps, "local-search steps for search")->capture_default_str();
    app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    app.add_option("--set", cfg.set_file, "set file for lambda");
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_flag("--assert-binary", cfg.assert_binary, "make failing bound cells fatal when q = 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    ExperimentReport report;
    try {
        report = run_experiment(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (const auto& w : report.warnings) std::cerr << "warning: " << w.get<std::string>() << '\n';
    const std::string body = cfg.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(cfg.out);
        if (!out) {
            std::cerr << "error: cannot write " << cfg.out << '\n';
            return kExitUsage;
        }
        out << body;
    }
    return report.exit_code;
}
