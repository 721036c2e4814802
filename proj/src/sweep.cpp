#include "ncc/sweep.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace ncc {

std::vector<SweepRecord> run_sweep(const MarkovChain& chain, const std::vector<double>& eps_grid,
                                   int n) {
    const AsymptoticExpansion exp = expansion_of(chain);
    std::vector<SweepRecord> out;
    out.reserve(eps_grid.size());
    for (double e : eps_grid) {
        if (!(e > 0.0)) throw std::invalid_argument("sweep grid must be strictly positive");
        const Sandwich s = entropy_rate_sandwich(chain, ChannelParameter(e), n);
        SweepRecord rec;
        rec.eps = e;
        rec.lower = s.lower;
        rec.upper = s.upper;
        rec.asymptotic = exp.h0 + exp.f * e * std::log(1.0 / e) + exp.g * e;
        rec.residual = s.midpoint() - rec.asymptotic;
        out.push_back(rec);
    }
    return out;
}

SweepFit fit_sweep(const std::vector<SweepRecord>& records) {
    if (records.size() < 3) throw std::invalid_argument("fit needs at least three grid points");
    const int rows = static_cast<int>(records.size());
    Eigen::MatrixXd A(rows, 3);
    Eigen::VectorXd y(rows);
    for (int i = 0; i < rows; ++i) {
        const SweepRecord& r = records[static_cast<std::size_t>(i)];
        // gaps below the double-roundoff scale of the two entropy passes carry
        // no information, so the floor treats such sandwiches as equally tight
        const double weight = 1.0 / std::max(r.upper - r.lower, 1e-12);
        A(i, 0) = weight;
        A(i, 1) = weight * r.eps * std::log(1.0 / r.eps);
        A(i, 2) = weight * r.eps;
        y(i) = weight * 0.5 * (r.lower + r.upper);
    }
    const Eigen::Vector3d coeff = A.colPivHouseholderQr().solve(y);
    return {coeff[0], coeff[1], coeff[2]};
}

}  // namespace ncc
