// Command line runner for the width laboratory suites.
//
// Exit codes: 0 all requested checks pass, 1 at least one check failed,
// 2 usage or configuration error.

#include "widthlab/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string joined(const std::vector<std::string>& items) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out;
}

// flat key=value lines, '#' starts a comment
void apply_config_file(const std::string& path, widthlab::RunConfig& cfg,
                       const CLI::App& app) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     " is not key=value");
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        // command line flags win over the file
        if (key == "suite") {
            if (app.count("--suite") == 0) cfg.suite = value;
        } else if (key == "seed") {
            if (app.count("--seed") == 0) cfg.seed = unsigned(std::stoul(value));
        } else if (key == "resolution") {
            if (app.count("--resolution") == 0) cfg.resolution = std::stoi(value);
        } else if (key == "gamma") {
            if (app.count("--gamma") == 0) cfg.gamma = std::stod(value);
        } else if (key == "tolerance-scale" || key == "tolerance_scale") {
            if (app.count("--tolerance-scale") == 0) cfg.tolerance_scale = std::stod(value);
        } else {
            cfg.options[key] = value;
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"widthlab: slice widths, sweepout tightening and free-boundary "
                 "varifold estimates in space-form balls"};

    widthlab::RunConfig cfg;
    std::string config_path, out_path, fixture;
    bool list = false;

    app.add_option("--suite", cfg.suite, "Suite to run: " + joined(widthlab::suite_names()));
    app.add_option("--seed", cfg.seed, "Random seed (default 42)");
    app.add_option("--resolution", cfg.resolution,
                   "Override the suite's pinned discretisation (0 keeps the default)");
    app.add_option("--gamma", cfg.gamma, "Correction factor of the monotone ratio (default 1)");
    app.add_option("--tolerance-scale", cfg.tolerance_scale,
                   "Scale every tolerance; exploratory runs only (default 1)");
    app.add_option("--config", config_path, "Flat key=value config file");
    app.add_option("--out", out_path,
                   "Output path for the JSON report or exported fixture "
                   "(WIDTHLAB_OUT is used when unset)");
    app.add_option("--export-fixture", fixture,
                   "Write a named fixture and exit: " + joined(widthlab::fixture_names()));
    app.add_flag("--list", list, "List suites and fixtures, then exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (out_path.empty()) {
            if (const char* env = std::getenv("WIDTHLAB_OUT")) out_path = env;
        }

        if (list) {
            std::cout << "suites:\n";
            for (const auto& s : widthlab::suite_names()) std::cout << "  " << s << "\n";
            std::cout << "fixtures:\n";
            for (const auto& f : widthlab::fixture_names()) std::cout << "  " << f << "\n";
            return 0;
        }

        if (!fixture.empty()) {
            std::string path = out_path;
            if (path.empty()) {
                const bool is_mesh =
                    fixture == "critical-catenoid" || fixture == "geodesic-disk-hyperbolic";
                path = fixture + (is_mesh ? ".off" : ".jsonl");
            }
            widthlab::export_fixture(fixture, path);
            std::cout << "wrote " << path << "\n";
            return 0;
        }

        if (!config_path.empty()) apply_config_file(config_path, cfg, app);

        if (cfg.suite.empty()) {
            std::cerr << "error: --suite is required (one of " << joined(widthlab::suite_names())
                      << ")\n";
            return 2;
        }

        const widthlab::SuiteReport report = widthlab::run_suite(cfg);
        std::cout << report.summary();
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open output path " + out_path);
            out << report.to_json();
            std::cout << "report written to " << out_path << "\n";
        }
        return report.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
