#include "ncc/rll.hpp"

#include <cmath>
#include <stdexcept>

#include "ncc/spectral.hpp"

namespace ncc::rll {
namespace {

void validate(const Params& p) {
    if (p.d < 0) throw std::invalid_argument("run-length d must be >= 0");
    if (p.k && *p.k < p.d) throw std::invalid_argument("run-length k must be >= d");
}

// p(1 0^L 1)
double run_prob(const MarkovChain& chain, int L) {
    return chain.word_prob(BitWord(L + 2, (std::uint64_t{1} << (L + 1)) | 1));
}

// sum_{L >= L0} p(1 0^L 1); geometric beyond the chain order since the walk
// sits in the all-zeros context
double run_tail(const MarkovChain& chain, int L0) {
    const int m = chain.order();
    const int L_star = std::max(L0, m) + 2;
    double s = 0;
    for (int L = L0; L < L_star; ++L) s += run_prob(chain, L);
    const double head = run_prob(chain, L_star);
    if (head == 0.0) return s;
    const double q = chain.transition(BitWord(m, 0), 0);
    return s + head / (1.0 - q);
}

}  // namespace

FiniteTypeConstraint constraint(const Params& p) {
    validate(p);
    std::vector<BitWord> forbidden;
    for (int l = 0; l < p.d; ++l) {
        // 1 0^l 1
        forbidden.emplace_back(l + 2, (std::uint64_t{1} << (l + 1)) | 1);
    }
    if (p.k) forbidden.emplace_back(*p.k + 1, 0);
    return FiniteTypeConstraint(std::move(forbidden));
}

double rho0(const Params& p) {
    validate(p);
    if (p.k && *p.k == p.d)
        throw std::invalid_argument("k = d has zero capacity; the root equation has no root below 1");
    auto excess = [&](double rho) {
        if (!p.k) return std::pow(rho, p.d + 1) / (1.0 - rho) - 1.0;
        double s = 0;
        for (int l = p.d; l <= *p.k; ++l) s += std::pow(rho, l + 1);
        return s - 1.0;
    };
    double lo = 0.0, hi = 1.0 - 1e-15;
    if (excess(hi) <= 0.0) throw std::invalid_argument("root equation has no root in (0,1)");
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double f_general(const MarkovChain& chain, const Params& p) {
    validate(p);
    const FiniteTypeConstraint c = constraint(p);
    for (const BitWord& f : c.minimal_forbidden())
        if (chain.in_support(f))
            throw std::invalid_argument("chain support is not contained in the constraint");

    double total = 0;
    if (p.k) {
        const int k = *p.k;
        for (int l2 = 0; l2 < p.d; ++l2)
            for (int l1 = p.d; l1 + l2 <= k - 1; ++l1) total += run_prob(chain, l1 + l2 + 1);
        for (int l1 = p.d; l1 <= k; ++l1) {
            const int l2 = k - l1;
            // 1 0^{l1} 1 0^{l2}
            const BitWord w(l1 + l2 + 2,
                            (((std::uint64_t{1} << (l1 + 1)) | 1) << l2));
            total += chain.word_prob(w);
        }
    } else {
        for (int l2 = 0; l2 < p.d; ++l2) total += run_tail(chain, p.d + l2 + 1);
    }
    for (int l = 1; l <= p.d; ++l) {
        // 1 0^l
        total += chain.word_prob(BitWord(l + 1, std::uint64_t{1} << l));
    }
    return total;
}

double f_maxentropy_closed_form(const Params& p) {
    validate(p);
    const FiniteTypeConstraint c = constraint(p);
    const MarkovChain parry = parry_chain(c);
    const double p1 = parry.word_prob(BitWord(1, 1));
    const double rho = rho0(p);

    // a trailing open run of l zeros can only complete to runs of length
    // max(l, d)..k, so the geometric factors start there
    double acc = 0;
    if (p.k) {
        const int k = *p.k;
        acc += std::pow(rho, k + 1);
        for (int l2 = 0; l2 < p.d; ++l2)
            for (int l1 = p.d; l1 + l2 <= k - 1; ++l1) acc += std::pow(rho, l1 + l2 + 2);
        for (int l1 = p.d; l1 <= k - 1; ++l1) {
            const int j0 = std::max(k - l1, p.d);
            acc += std::pow(rho, l1 + j0 + 2) * (1.0 - std::pow(rho, k - j0 + 1)) / (1.0 - rho);
        }
        for (int l = 1; l <= p.d; ++l) {
            const int j0 = std::max(l, p.d);
            acc += std::pow(rho, j0 + 1) * (1.0 - std::pow(rho, k - j0 + 1)) / (1.0 - rho);
        }
    } else {
        for (int l2 = 0; l2 < p.d; ++l2) acc += std::pow(rho, p.d + l2 + 2) / (1.0 - rho);
        for (int l = 1; l <= p.d; ++l) acc += std::pow(rho, std::max(l, p.d) + 1) / (1.0 - rho);
    }
    return p1 * acc;
}

double family_f(double pi01) {
    if (!(pi01 > 0.0 && pi01 <= 1.0)) throw std::invalid_argument("pi01 must lie in (0, 1]");
    return pi01 * (2.0 - pi01) / (1.0 + pi01);
}

double family_g(double pi01) {
    if (!(pi01 > 0.0 && pi01 < 1.0)) throw std::invalid_argument("pi01 must lie in (0, 1)");
    const double p = pi01;
    return ((2.0 * p - p * p) + (3.0 * p - 1.0 - p * p) * std::log(p) +
            (2.0 - 6.0 * p + 2.0 * p * p) * std::log(1.0 - p) +
            (2.0 * p * p - 2.0 * p) * std::log(2.0)) /
           (1.0 + p);
}

}  // namespace ncc::rll
