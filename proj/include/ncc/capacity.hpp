#pragma once

#include <cstdint>
#include <vector>

#include "ncc/channel.hpp"
#include "ncc/constraint.hpp"
#include "ncc/markov.hpp"

namespace ncc {

/// Small-noise expansion of the noisy constrained capacity:
/// C(eps) = c0 + c_log eps log(1/eps) + c_lin eps + ...
struct CapacityExpansion {
    double c0 = 0;
    double c_log = 0;
    double c_lin = 0;
};

/// (noiseless capacity, f - 1, g - 1) at the maximum-entropy chain.
CapacityExpansion capacity_expansion(const FiniteTypeConstraint& c);

struct OptimOptions {
    std::uint64_t seed = 0;
    int restarts = 4;            // random restarts beyond the Parry start
    int max_iterations = 10000;
    double grad_tol = 1e-9;      // max-norm of the projected gradient
    double fd_step = 1e-6;
};

struct HnResult {
    StationaryPVector maximizer;
    double value = 0;
    double min_entry = 0;        // boundary proximity of the maximizer
    int iterations = 0;
    bool converged = false;
};

/// sup of H(Z_0 | Z_-n..Z_-1) over shift-stationary laws on the allowed
/// (n+1)-words, by projected gradient ascent from the Parry marginals plus
/// seeded random restarts. Gradients are central differences taken along an
/// orthonormal basis of the stationarity subspace, so every evaluation point
/// is exactly feasible.
HnResult optimize_Hn(const FiniteTypeConstraint& c, int n, ChannelParameter eps,
                     const OptimOptions& opt = {});

struct HmResult {
    MarkovChain chain;
    Sandwich sandwich;           // entropy-rate bracket of the best chain
    int sandwich_n = 0;          // conditioning length that met (or capped) tol
    bool gap_met = false;
    int iterations = 0;
};

/// Ascent over order-m chains supported on the constraint (per-context logit
/// parametrization); the objective is the Birch sandwich midpoint with n grown
/// until the gap is below tol. Any feasible chain's lower bound is a valid
/// lower bound for h_m.
HmResult optimize_hm(const FiniteTypeConstraint& c, int m, ChannelParameter eps, double tol,
                     const OptimOptions& opt = {});

struct CapacitySandwich {
    double lower = 0;
    double upper = 0;
    double gap() const { return upper - lower; }
    double midpoint() const { return 0.5 * (lower + upper); }
};

/// (h_m lower bound - H(eps), sup_n bound - H(eps)).
CapacitySandwich capacity_sandwich(const FiniteTypeConstraint& c, ChannelParameter eps, int m, int n,
                                   double hm_tol = 1e-5, const OptimOptions& opt = {});

/// Derivatives along the one-parameter order-1 family on the no-11 constraint
/// at the entropy maximizer: k1 = H'', k2 = f', k3 = g' (central differences,
/// step 1e-5).
struct TaylorProbe {
    double k1 = 0;
    double k2 = 0;
    double k3 = 0;
    double p_max = 0;
};

TaylorProbe taylor_probe();

struct SharpnessRow {
    double eps = 0;
    double residual = 0;     // sandwich midpoint - H(eps) - expansion(eps)
    double uncertainty = 0;  // sandwich gap
};

/// Diagnostic sweep along pi01(eps) = p_max + alpha eps log(1/eps); alpha must
/// lie strictly inside (0, k2/|k1|). No asymptotic order is asserted.
std::vector<SharpnessRow> sharpness_probe(double alpha, const std::vector<ChannelParameter>& grid,
                                          int n = 10);

}  // namespace ncc
