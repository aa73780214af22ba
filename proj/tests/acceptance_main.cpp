// Acceptance gate. Each criterion maps to one suite run restricted to the
// checks tagged with that criterion id, plus a wall clock budget. Prints one
// line per criterion and exits nonzero if any requested criterion fails.

#include <widthlab/suites.hpp>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct CriterionSpec {
    int id;
    const char* suite;
    double budget_seconds;
};

const std::vector<CriterionSpec>& criterion_table() {
    static const std::vector<CriterionSpec> table = {
        {1, "widths", 1.0},
        {2, "comparison", 10.0},
        {3, "sweepout-1d", 120.0},
        {4, "brendle", 60.0},
        {5, "varifold", 300.0},
        {6, "varifold", 30.0},
        {7, "stability", 120.0},
        {8, "isoperimetric", 30.0},
        {9, "stability", 10.0},
    };
    return table;
}

bool run_criterion(const CriterionSpec& spec) {
    widthlab::RunConfig cfg;
    cfg.suite = spec.suite;
    cfg.options["criterion"] = std::to_string(spec.id);

    widthlab::SuiteReport report;
    try {
        report = widthlab::run_suite(cfg);
    } catch (const std::exception& e) {
        std::printf("criterion %d [%s]: FAIL (exception: %s)\n", spec.id,
                    spec.suite, e.what());
        return false;
    }

    int relevant = 0;
    int failed = 0;
    std::string first_failure;
    for (const auto& check : report.checks) {
        if (check.criterion != spec.id) continue;
        ++relevant;
        if (!check.pass) {
            ++failed;
            if (first_failure.empty()) first_failure = check.name;
        }
    }

    const bool in_budget = report.elapsed_seconds <= spec.budget_seconds;
    const bool ok = relevant > 0 && failed == 0 && in_budget;

    if (ok) {
        std::printf("criterion %d [%s]: PASS (%d checks, %.2fs)\n", spec.id,
                    spec.suite, relevant, report.elapsed_seconds);
    } else if (relevant == 0) {
        std::printf("criterion %d [%s]: FAIL (no checks tagged)\n", spec.id,
                    spec.suite);
    } else if (failed > 0) {
        std::printf("criterion %d [%s]: FAIL (%d/%d checks failed, first: %s)\n",
                    spec.id, spec.suite, failed, relevant,
                    first_failure.c_str());
    } else {
        std::printf("criterion %d [%s]: FAIL (over budget: %.2fs > %.0fs)\n",
                    spec.id, spec.suite, report.elapsed_seconds,
                    spec.budget_seconds);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    bool all_ok = true;
    bool any = false;
    for (const auto& spec : criterion_table()) {
        if (only != 0 && spec.id != only) continue;
        any = true;
        if (!run_criterion(spec)) all_ok = false;
    }
    if (!any) {
        std::fprintf(stderr, "unknown criterion %d\n", only);
        return 2;
    }
    return all_ok ? 0 : 1;
}
