#pragma once

#include "ncc/bitword.hpp"
#include "ncc/markov.hpp"

namespace ncc {

/// Small-noise behavior of the joint word probability: positive at eps = 0,
/// vanishing linearly (one channel flip reaches the support), or faster.
enum class WordClass { AllowedPositive, ThetaEps, OEpsSquared };

/// d/deps of joint_xz_prob(chain, eps, k, u) at eps = 0: the sum of the word
/// probabilities over single flips of the channel-side symbols minus their
/// count times p(u).
double h_nk(const MarkovChain& chain, const BitWord& u, int k);

/// Decided from the exact support predicate and flip reachability, never from
/// small-eps evaluation.
WordClass classify_word(const MarkovChain& chain, const BitWord& u, int k);

/// Coefficient of eps log(1/eps) in the conditional-entropy expansion:
/// the sum of h_nk over boundary pairs (w in support, wv not).
double f_nk(const MarkovChain& chain, int n, int k);

/// Coefficient of eps: three sums over support pairs, boundary pairs, and
/// flip-reachable pairs. Internal consistency (h > 0 under every log) is
/// asserted and violations raise numeric_error.
double g_nk(const MarkovChain& chain, int n, int k);

/// Divergence form of the eps coefficient, valid only for strictly positive
/// kernels over the full context cube: sum over words of length 2m+1 of
/// p(z) log(p(z)/p(z with middle symbol flipped)).
double g_positive(const MarkovChain& chain);

struct AsymptoticExpansion {
    double h0 = 0;   // entropy rate at eps = 0
    double f = 0;    // eps log(1/eps) coefficient
    double g = 0;    // eps coefficient
};

/// (entropy rate, f at n = 2m k = 0, g at n = 3m k = 0).
AsymptoticExpansion expansion_of(const MarkovChain& chain);

}  // namespace ncc
