#pragma once

#include <map>
#include <string>
#include <vector>

namespace widthlab {

// Knobs shared by every suite. `resolution` overrides the suite's pinned
// discretisation (grid nodes, mesh rings, sample counts); 0 keeps the
// default. `tolerance_scale` widens or narrows every tolerance, for
// exploratory runs only - the defaults are the contract.
struct RunConfig {
    std::string suite;
    unsigned seed = 42;
    int resolution = 0;
    double gamma = 1.0;
    double tolerance_scale = 1.0;
    std::map<std::string, std::string> options;
};

struct Check {
    std::string name;
    std::string anchor; // provenance of the expected value
    int criterion = 0;  // acceptance criterion this check belongs to, 0 = supporting
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    unsigned seed = 0;
    std::vector<Check> checks;
    double elapsed_seconds = 0.0;

    bool pass() const;
    int criteria_mask() const; // bit i set when criterion i appears in the checks
    std::string to_json() const;
    std::string summary() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const RunConfig& config);

// Writes a named fixture: disk varifolds as jsonl, meshes as WIDTHOFF text.
void export_fixture(const std::string& name, const std::string& path);
std::vector<std::string> fixture_names();

} // namespace widthlab
