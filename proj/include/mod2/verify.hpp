#ifndef MOD2_VERIFY_HPP
#define MOD2_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mod2::verify {

/// One exact check: passed iff the computed text equals the expected text.
struct Check {
    std::string name;
    std::string statement;
    std::string expected;
    std::string computed;
    bool passed = false;
};

struct Suite {
    std::string name;
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
};

struct Options {
    std::size_t max_cycles = 100000;  // cap for simple-cycle enumeration
    std::uint64_t seed = 1;           // randomized property checks
    std::ostream* progress = nullptr; // one line per suite when set
};

/// Names of all suites, in report order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
Suite run_suite(const std::string& name, const Options& opt = {});

std::vector<Suite> run_all(const Options& opt = {});

} // namespace mod2::verify

#endif
