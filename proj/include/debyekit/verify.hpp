// verify.hpp - self-check suites run by `debyekit verify` and the acceptance run.
#ifndef DEBYEKIT_VERIFY_HPP
#define DEBYEKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dk {

struct CheckResult {
    std::string suite, name;
    bool pass = false;
    std::string measured, threshold;
    long count = 0;  // samples or grid points behind the check
};

/// bounds | resurgence | coeffs | terminant | stokes | inequalities | all.
/// `full` runs the acceptance-sized grids; otherwise smaller ones.
std::vector<CheckResult> verify_suite(const std::string& suite, int digits, std::uint64_t seed, bool full);

const std::vector<std::string>& verify_suite_names();

}  // namespace dk

#endif
