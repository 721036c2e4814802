#pragma once

#include <cstddef>

#include "ncc/bitword.hpp"
#include "ncc/markov.hpp"

namespace ncc {

/// Crossover probability of the binary symmetric channel, restricted to
/// [0, 1/2]; values above 1/2 are rejected rather than folded.
class ChannelParameter {
public:
    ChannelParameter(double eps);   // NOLINT: implicit by design, validates
    double value() const { return eps_; }

private:
    double eps_;
};

/// eps log(1/eps) + (1-eps) log(1/(1-eps)), nats; H(0) = 0 exactly.
double binary_entropy(ChannelParameter eps);

/// P(X-part = first k symbols of w, Z-part = remaining symbols) for the chain
/// passed through BSC(eps). Forward recursion over contexts, O(|w| 2^m).
double joint_xz_prob(const MarkovChain& chain, ChannelParameter eps, int k, const BitWord& w);

inline constexpr int default_output_cap = 24;

/// H(Z_0 | Z_-n..Z_-1, X_-n..X_{-n+k-1}): the last symbol of a length-(n+1)
/// window conditioned on the previous n, the first k of which are clean input
/// symbols. k = 0 is the plain output conditional entropy.
double cond_entropy_partial(const MarkovChain& chain, ChannelParameter eps, int n, int k,
                            int cap = default_output_cap);

/// H(Z_0 | Z_-n..Z_-1) over all 2^{n+1} output words.
double cond_entropy_output(const MarkovChain& chain, ChannelParameter eps, int n,
                           int cap = default_output_cap);

/// Lower conditional entropy with the first m = order conditioning symbols
/// taken from the input chain itself.
double cond_entropy_birch_lower(const MarkovChain& chain, ChannelParameter eps, int n,
                                int cap = default_output_cap);

struct Sandwich {
    double lower = 0;
    double upper = 0;
    double gap() const { return upper - lower; }
    double midpoint() const { return 0.5 * (lower + upper); }
};

/// lower <= H(Z_eps) <= upper for n >= order.
Sandwich entropy_rate_sandwich(const MarkovChain& chain, ChannelParameter eps, int n,
                               int cap = default_output_cap);

}  // namespace ncc
