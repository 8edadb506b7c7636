#include <cstdio>

#include "mod2/verify.hpp"

// Runs every verification suite and prints one line per suite. Exits nonzero
// when any exact check fails.
int main() {
    mod2::verify::Options opt;
    auto suites = mod2::verify::run_all(opt);
    bool all = true;
    std::size_t index = 0;
    for (const auto& s : suites) {
        ++index;
        std::size_t failed = 0;
        for (const auto& c : s.checks)
            if (!c.passed) ++failed;
        std::printf("%2zu %s %-28s %s (%zu checks)\n", index, s.passed() ? "pass" : "FAIL",
                    s.name.c_str(), s.title.c_str(), s.checks.size());
        for (const auto& c : s.checks)
            if (!c.passed)
                std::printf("        %s: expected [%s], computed [%s]\n", c.name.c_str(),
                            c.expected.c_str(), c.computed.c_str());
        all = all && failed == 0;
    }
    std::printf("%s\n", all ? "acceptance: all suites pass" : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
