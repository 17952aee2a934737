#ifndef CIRCLETK_SUITES_HPP
#define CIRCLETK_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace circletk {

struct SuiteResult {
    std::string name;
    bool pass = false;
    long checked = 0;
    long failures = 0;
    std::string detail;
};

// Named verification suites. Seeded suites are reproducible; seed is ignored
// by the exhaustive ones.
SuiteResult run_suite(const std::string& name, uint64_t seed);
std::vector<std::string> suite_names();

} // namespace circletk

#endif
