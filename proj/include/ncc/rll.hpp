#pragma once

#include <optional>

#include "ncc/constraint.hpp"
#include "ncc/markov.hpp"

namespace ncc::rll {

/// (d, k) run-length limits; k unset means unbounded zero runs.
struct Params {
    int d = 0;
    std::optional<int> k;   // nullopt = infinity
};

/// Forbidden set {1 0^l 1 : 0 <= l < d} plus the (k+1)-zeros word when k is
/// finite. (0, infinity) is the full shift.
FiniteTypeConstraint constraint(const Params& p);

/// Root in (0, 1) of sum_{l=d}^{k} rho^{l+1} = 1 (geometric form for
/// unbounded k), bisected to 1e-14. log(1/rho0) is the noiseless capacity.
/// Rejects k = d, whose only root is 1.
double rho0(const Params& p);

/// The run-length form of the eps log(1/eps) coefficient: three sums over
/// probabilities of words 1 0^l 1, 1 0^l1 1 0^l2, 1 0^l. Unbounded-k tails are
/// summed in closed geometric form. Equals f_nk(chain, 2m, 0) for any chain
/// supported on the constraint; identically 1 when k <= 2d.
double f_general(const MarkovChain& chain, const Params& p);

/// f at the maximum-entropy chain as a rho0-power series times p(1), with
/// p(1) taken from the Parry marginal.
double f_maxentropy_closed_form(const Params& p);

/// Closed forms for the order-1 family on the no-11 constraint, parametrized
/// by the 0 -> 1 transition probability.
double family_f(double pi01);
/// Note family_g diverges like log(1/pi01) as pi01 -> 0.
double family_g(double pi01);

}  // namespace ncc::rll
