#include "ncc/verify.hpp"

#include <algorithm>
#include <cmath>

#include "ncc/asymptotics.hpp"
#include "ncc/identities.hpp"
#include "ncc/rll.hpp"
#include "ncc/spectral.hpp"

namespace ncc {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

double stability_deviation(const MarkovChain& chain) {
    const int m = chain.order();
    const double f_base = f_nk(chain, 2 * m, 0);
    const double g_base = g_nk(chain, 3 * m, 0);
    double worst = 0;
    for (int n = 2 * m; n <= 3 * m + 2; ++n)
        for (int k = 0; k <= m; ++k)
            worst = std::max(worst, std::abs(f_nk(chain, n, k) - f_base));
    for (int n = 3 * m; n <= 3 * m + 2; ++n)
        for (int k = 0; k <= m; ++k)
            worst = std::max(worst, std::abs(g_nk(chain, n, k) - g_base));
    return worst;
}

namespace {

void record(VerifyReport& report, const std::string& name, double worst, double tol,
            const std::string& detail = "") {
    report.checks.push_back({name, worst <= tol, worst, tol, detail});
}

double identity_deviation(const MarkovChain& chain) {
    const int m = chain.order();
    double worst = 0;
    const double cb = identity::closed_bilinear(chain);
    const double cl = identity::closed_boundary_log(chain);
    const double cc = identity::closed_conditional_log(chain);
    for (int k = 0; k <= m; ++k) {
        worst = std::max(worst, std::abs(identity::sum_bilinear(chain, 2 * m, k) - cb));
        worst = std::max(worst, std::abs(identity::sum_bilinear(chain, 2 * m + 1, k) - cb));
        worst = std::max(worst, std::abs(identity::sum_boundary_log(chain, 2 * m, k) - cl));
        worst = std::max(worst, std::abs(identity::sum_boundary_log(chain, 2 * m + 2, k) - cl));
        worst = std::max(worst, std::abs(identity::sum_conditional_log(chain, 3 * m, k) - cc));
        worst = std::max(worst, std::abs(identity::sum_conditional_log(chain, 3 * m + 1, k) - cc));
    }
    return worst;
}

}  // namespace

VerifyReport run_verify(std::uint64_t seed) {
    VerifyReport report;

    const rll::Params golden{1, std::nullopt};
    const rll::Params s13{1, 3};
    const rll::Params s2inf{2, std::nullopt};
    const rll::Params s24{2, 4};

    // frozen reference constants of the no-11 maximum-entropy chain; any
    // corruption of kernels or eigendata larger than ~1e-12 shows up here
    {
        const double lam = (1.0 + std::sqrt(5.0)) / 2.0;
        const MarkovChain parry = parry_chain(rll::constraint(golden));
        double worst = std::abs(entropy_rate_markov(parry) - std::log(lam));
        worst = std::max(worst, std::abs(f_nk(parry, 2, 0) -
                                         (1.0 - (2.0 * lam + 2.0) / (4.0 * lam + 3.0))));
        worst = std::max(worst, std::abs(parry.transition(BitWord(1, 0), 1) - 1.0 / (lam * lam)));
        record(report, "reference constants of the no-11 maximum-entropy chain", worst, 1e-12);
    }

    // coefficient stability across window length and clean-prefix length
    {
        double worst = 0;
        for (const rll::Params& p : {golden, s13, s2inf})
            worst = std::max(worst, stability_deviation(parry_chain(rll::constraint(p))));
        for (int r = 0; r < 3; ++r) {
            const FiniteTypeConstraint c = rll::constraint(golden);
            worst = std::max(worst, stability_deviation(random_chain(c, c.order(), seed + r)));
        }
        record(report, "coefficient stability over (n, k)", worst, 1e-12);
    }

    // the three structural identities behind the eps coefficient
    {
        double worst = identity_deviation(parry_chain(rll::constraint(golden)));
        for (int r = 0; r < 2; ++r) {
            const FiniteTypeConstraint c = rll::constraint(s13);
            worst = std::max(worst, identity_deviation(random_chain(c, c.order(), seed + 10 + r)));
        }
        record(report, "structural identities (bilinear / boundary-log / conditional-log)", worst,
               1e-12);
    }

    // run-length form of f against the general boundary sum
    {
        double worst = 0;
        for (const rll::Params& p : {golden, s13, s24}) {
            const FiniteTypeConstraint c = rll::constraint(p);
            for (int r = 0; r < 3; ++r) {
                const MarkovChain chain = random_chain(c, c.order(), seed + 20 + r);
                worst = std::max(worst, std::abs(rll::f_general(chain, p) -
                                                 f_nk(chain, 2 * chain.order(), 0)));
            }
        }
        record(report, "run-length f form vs general boundary sum", worst, 1e-12);
    }

    // divergence form of g on strictly positive chains
    {
        const FiniteTypeConstraint full({});
        double worst = 0;
        for (int r = 0; r < 3; ++r) {
            const MarkovChain chain = random_chain(full, 1, seed + 30 + r);
            worst = std::max(worst, std::abs(g_positive(chain) - g_nk(chain, 3, 0)));
            worst = std::max(worst, std::abs(f_nk(chain, 2, 0)));
        }
        record(report, "divergence form of g on positive kernels", worst, 1e-9);
    }

    // spectral radius against the run-length root
    {
        double worst = 0;
        for (const rll::Params& p : {golden, s13, s2inf, s24}) {
            const double cap = noiseless_capacity(rll::constraint(p));
            const double via_root = std::log(1.0 / rll::rho0(p));
            worst = std::max(worst, std::abs(cap - via_root));
        }
        record(report, "log(lambda) vs run-length root", worst, 1e-10);
    }

    return report;
}

}  // namespace ncc
