#pragma once

#include <cmath>

#include "ncc/bitword.hpp"
#include "ncc/constraint.hpp"
#include "ncc/markov.hpp"

namespace helpers {

inline ncc::BitWord w(const char* s) { return ncc::BitWord::parse(s); }

inline const double golden_ratio = (1.0 + std::sqrt(5.0)) / 2.0;

// maximum-entropy kernel on the no-11 constraint
inline ncc::MarkovChain golden_parry() {
    const double lam = golden_ratio;
    return ncc::MarkovChain::from_kernel(
        1, {{w("0"), {1.0 / lam, 1.0 / (lam * lam)}}, {w("1"), {1.0, 0.0}}});
}

// first-order chain with rows (1-p, p) and (1, 0)
inline ncc::MarkovChain no11_chain(double p) {
    return ncc::MarkovChain::from_kernel(1, {{w("0"), {1.0 - p, p}}, {w("1"), {1.0, 0.0}}});
}

inline ncc::MarkovChain fair_coin() {
    return ncc::MarkovChain::from_kernel(1, {{w("0"), {0.5, 0.5}}, {w("1"), {0.5, 0.5}}});
}

inline ncc::FiniteTypeConstraint no11() { return ncc::FiniteTypeConstraint({w("11")}); }
inline ncc::FiniteTypeConstraint full_shift() { return ncc::FiniteTypeConstraint({}); }

}  // namespace helpers
