#ifndef ARCINV_SELFCHECK_HPP
#define ARCINV_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arcinv/fibers.hpp"

namespace arcinv {

struct SelfCheckConfig {
    int max_d = 3;           // completeness sweep and conversion round-trip
    int max_exp = 8;
    int order = 16;
    int fiber_vars = 6;      // fiber sweep over exponents {2,4,6,8,12,16}
    int recovery_d = 4;
    int recovery_exp = 10;
    unsigned jobs = 0;
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    double seconds = 0;

    bool passed() const { return failures == 0 && cases > 0; }
};

/// Closed-form fiber identities for P_{A,B} + R, with (A, B) the top level of
/// `form` and R the lower levels. Returns the names of violated identities.
std::vector<std::string> fiber_peeling_violations(const TwoPowerForm& form);

/// Runs every invariant sweep; each suite reports its case count.
std::vector<SuiteResult> run_selfcheck(const SelfCheckConfig& config);

}  // namespace arcinv

#endif  // ARCINV_SELFCHECK_HPP
