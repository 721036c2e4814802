#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncc/markov.hpp"

namespace ncc {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    double worst = 0;        // largest deviation seen
    double tolerance = 0;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// Self-verification at desk scale: coefficient stability across (n, k), the
/// three structural identities behind g, the run-length form of f against the
/// general sum, the divergence form of g on positive chains, and the spectral
/// cross-check of log(lambda) against the run-length root. Deterministic for a
/// fixed seed; designed to finish well under a minute.
VerifyReport run_verify(std::uint64_t seed = 0);

/// Largest deviation of f_nk over n in [2m, 3m+2], k in [0, m] and of g_nk
/// over n in [3m, 3m+2], k in [0, m] from their base values. Exposed so tests
/// can feed deliberately corrupted chains.
double stability_deviation(const MarkovChain& chain);

}  // namespace ncc
