// Acceptance runner: executes every verification suite and prints one
// pass/fail line per criterion.

#include "circletk/suites.hpp"

#include <cstdio>

int main() {
    bool all = true;
    for (const auto& name : circletk::suite_names()) {
        auto res = circletk::run_suite(name, 0);
        std::printf("[%s] %-24s checked=%-8ld failures=%ld%s%s\n", res.pass ? "PASS" : "FAIL",
                    res.name.c_str(), res.checked, res.failures,
                    res.detail.empty() ? "" : " ", res.detail.c_str());
        std::fflush(stdout);
        all = all && res.pass;
    }
    return all ? 0 : 1;
}
