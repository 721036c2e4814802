#pragma once

#include <vector>

#include "ncc/constraint.hpp"
#include "ncc/markov.hpp"

namespace ncc {

/// Perron eigendata of a constraint's vertex graph, restricted to the
/// bi-extendable vertices. left . right = 1 after scaling; right has unit max
/// entry before that scaling is applied to left.
struct PerronData {
    double lambda = 0;
    double rho = 0;                  // 1 / lambda
    std::vector<BitWord> vertices;   // bi-extendable words of length order()
    std::vector<double> left;
    std::vector<double> right;
};

/// Power iteration (on A + I, so periodic graphs converge too). Rejects
/// reducible constraints; residual above 1e-12 after 1e6 iterations is a
/// numeric_error.
PerronData perron(const FiniteTypeConstraint& c);

/// Maximum-entropy chain supported exactly on the constraint:
/// T(u -> u') = A(u,u') v(u') / (lambda v(u)), pi(u) = w(u) v(u).
/// A constraint of order 0 is lifted to its one-letter graph so the result is
/// always a valid chain of order >= 1 (the full shift gives the fair coin).
MarkovChain parry_chain(const FiniteTypeConstraint& c);

/// log(lambda), nats.
double noiseless_capacity(const FiniteTypeConstraint& c);

/// Central second difference (step 1e-4) of the word conditional entropy along
/// the segment t p + (1-t) q. Strictly negative in the interior whenever
/// p != q on an irreducible constraint.
double hessian_probe(const StationaryPVector& p, const StationaryPVector& q, double t);

}  // namespace ncc
