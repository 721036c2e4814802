#pragma once

#include <vector>

#include "ncc/asymptotics.hpp"
#include "ncc/channel.hpp"
#include "ncc/markov.hpp"

namespace ncc {

struct SweepRecord {
    double eps = 0;
    double lower = 0;
    double upper = 0;
    double asymptotic = 0;   // h0 + f eps log(1/eps) + g eps
    double residual = 0;     // midpoint - asymptotic
};

/// Entropy-rate sandwich across an eps grid against the expansion of the
/// chain. Grid values must be strictly positive.
std::vector<SweepRecord> run_sweep(const MarkovChain& chain, const std::vector<double>& eps_grid,
                                   int n);

struct SweepFit {
    double a = 0;   // constant
    double b = 0;   // eps log(1/eps) coefficient
    double c = 0;   // eps coefficient
};

/// Least-squares fit of the sandwich midpoints to a + b eps log(1/eps) + c eps,
/// each point weighted by 1/gap.
SweepFit fit_sweep(const std::vector<SweepRecord>& records);

}  // namespace ncc
