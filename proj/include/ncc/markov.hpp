#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ncc/bitword.hpp"
#include "ncc/constraint.hpp"

namespace ncc {

/// Stationary binary Markov chain of order m >= 1 with an explicit context set.
/// Kernel zeros are exact: support questions are decided combinatorially, never
/// by thresholding floats. Immutable after construction.
class MarkovChain {
public:
    using KernelRow = std::pair<BitWord, std::array<double, 2>>;

    /// Build from transition rows T(context, bit). Rows must sum to 1 within
    /// 1e-12, the positive-kernel context graph must be closed under positive
    /// transitions and strongly connected. The stationary law is solved
    /// directly for small context sets, by power iteration above 4096.
    static MarkovChain from_kernel(int order, std::vector<KernelRow> kernel);

    int order() const { return order_; }
    const std::vector<BitWord>& contexts() const { return contexts_; }

    /// T(ctx, bit); 0 for contexts outside the set.
    double transition(const BitWord& ctx, int bit) const;
    /// Stationary probability of a context.
    double stationary(const BitWord& ctx) const;

    /// Exact stationary probability of any finite word (marginal for short
    /// words, prefix-marginal times kernel product beyond the order).
    double word_prob(const BitWord& w) const;

    /// Combinatorial support predicate: agrees exactly with word_prob > 0.
    bool in_support(const BitWord& w) const;

    /// The finite-type constraint whose factors carve out this chain's support.
    const FiniteTypeConstraint& support_constraint() const { return *support_; }

    /// -sum pi(c) T(c,v) log T(c,v), natural log, 0 log 0 = 0.
    double entropy_rate() const;

private:
    int order_ = 1;
    std::vector<BitWord> contexts_;
    std::vector<std::array<double, 2>> kernel_;
    std::vector<double> pi_;
    std::vector<std::int32_t> slot_;   // context value -> row, -1 if absent
    std::shared_ptr<const FiniteTypeConstraint> support_;
};

/// Probability vector on the allowed words of length n+1 of a constraint,
/// shift-stationary by construction or by validation.
struct StationaryPVector {
    int n = 0;
    std::vector<BitWord> index;   // ascending words of length n+1
    std::vector<double> p;
};

double entropy_rate_markov(const MarkovChain& chain);

/// (n+1)-marginal of the chain on the index of its support constraint.
StationaryPVector pvector_of(const MarkovChain& chain, int n,
                             std::size_t cap = FiniteTypeConstraint::default_enum_cap);

/// Conditional entropy H(X_0 | X_-n..X_-1) of the finite process given by p.
double cond_entropy_words(const StationaryPVector& p);

/// Order-n chain whose (n+1)-marginals reproduce p exactly. Rejects p whose
/// shift-stationarity residual exceeds 1e-9.
MarkovChain chain_from_pvector(const StationaryPVector& p);

/// Convenience constructor used throughout the tests and the optimizers:
/// deterministic random kernel supported exactly on the constraint's
/// transitions, probabilities bounded away from 0 and 1.
MarkovChain random_chain(const FiniteTypeConstraint& c, int order, std::uint64_t seed);

}  // namespace ncc
