#pragma once

#include "ncc/markov.hpp"

namespace ncc::identity {

// The eps coefficient g_nk is a combination of three structured sums, each of
// which is constant once n and k clear small multiples of the chain order.
// Each sum below comes in two algebraically independent routes: the defining
// form at arbitrary (n, k), and a closed form referencing only words of
// bounded length. Their agreement is part of the self-verification suite.

/// sum over support pairs wv of (h_{n+1}(wv) p(w) - h_n(w) p(wv)) / p(w).
double sum_bilinear(const MarkovChain& chain, int n, int k);
/// Closed form of the same quantity at words of length <= 2m+1.
double closed_bilinear(const MarkovChain& chain);

/// sum over boundary pairs (w in support, wv not) of h log(h / p(w)).
double sum_boundary_log(const MarkovChain& chain, int n, int k);
double closed_boundary_log(const MarkovChain& chain);

/// sum over support pairs of h log p(v|w) plus the flip-reachable pair sum of
/// h log(h_{n+1}/h_n).
double sum_conditional_log(const MarkovChain& chain, int n, int k);
/// Closed form at words of length <= 3m+1. Includes the correction for
/// single-flip words whose truncated prefix stays in the support (the flips
/// straddling the conditioning boundary); see boundary_flip_correction.
double closed_conditional_log(const MarkovChain& chain);

/// The straddling-flip correction inside closed_conditional_log, exposed for
/// the unit tests (it vanishes on the golden-mean chain but not in general).
double boundary_flip_correction(const MarkovChain& chain);

}  // namespace ncc::identity
