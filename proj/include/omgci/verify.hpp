#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace omgci {

inline constexpr std::uint64_t kDefaultSeed = 20141215;

struct VerifyConfig {
    /// Draws for the 1e5-scale properties; the costlier suites scale down
    /// from this (see README).
    std::size_t samples = 100000;
    std::uint64_t seed = kDefaultSeed;
    /// Overrides keyed by the names returned from default_tolerances().
    std::map<std::string, double> tolerances;
};

/// Named tolerances used by run_verification, with their defaults.
const std::map<std::string, double>& default_tolerances();

struct PropertyResult {
    std::string name;
    /// What `worst` measures, e.g. "max |residual|" or "min slack".
    std::string metric;
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool passed() const { return violations == 0 && samples > 0; }
};

struct VerifyReport {
    std::vector<PropertyResult> properties;
    double seconds = 0.0;
    bool passed() const;
};

/// Runs every numerical property suite (identity, inequalities, derivatives,
/// dilation equivalence, supremum grid check, curve shapes, thresholds).
/// Throws DomainError for an unknown tolerance name.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace omgci
