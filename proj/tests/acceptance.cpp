#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "wittsmooth/suites.hpp"

// Plain acceptance gate: runs every verification suite once with a fixed
// seed and prints one line per criterion. A criterion passes only if all
// of its checks pass and the suite stays inside its wall time budget.

int main() {
    using wittsmooth::suites::CheckResult;
    using wittsmooth::suites::SuiteReport;
    using wittsmooth::suites::run_suite;

    const std::uint64_t seed = 20240817u;

    struct Criterion {
        int number;
        const char* suite;
        long long budget_ms;
    };
    const std::vector<Criterion> criteria = {
        {1, "jacobi", 10000},    {2, "weyl", 10000},      {3, "p0", 10000},
        {4, "tensor", 20000},    {5, "induced", 30000},   {6, "iso", 30000},
        {7, "wphi", 60000},      {8, "whittaker", 60000}, {9, "smoothness", 60000},
        {10, "continuous", 30000},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        bool pass = false;
        std::string note;
        try {
            SuiteReport rep = run_suite(c.suite, seed);
            const bool in_time = rep.wall_time_ms < c.budget_ms;
            pass = rep.passed() && in_time;
            note = std::to_string(rep.checks.size()) + " checks, " +
                   std::to_string(rep.wall_time_ms) + " ms";
            if (!rep.passed()) {
                for (const CheckResult& chk : rep.checks)
                    if (!chk.pass) {
                        note += "; " + chk.name + ": " + chk.witness;
                        break;
                    }
            }
            if (!in_time)
                note += "; over the " + std::to_string(c.budget_ms) + " ms budget";
        } catch (const std::exception& e) {
            note = e.what();
        }
        std::cout << "criterion " << c.number << " (" << c.suite
                  << "): " << (pass ? "PASS" : "FAIL") << " [" << note << "]\n";
        if (!pass) all_ok = false;
    }
    std::cout << (all_ok ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return all_ok ? 0 : 1;
}
