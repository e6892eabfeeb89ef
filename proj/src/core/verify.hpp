#ifndef QGMULT_CORE_VERIFY_HPP
#define QGMULT_CORE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qgm::verify {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool passed;
};

/// Runs the full cross-module invariant suite. Deterministic for a
/// fixed seed. Every check reports its worst observed residual against
/// the tolerance it is held to.
std::vector<CheckResult> run_all(std::uint64_t seed);

} // namespace qgm::verify

#endif
