#include "ncc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "ncc/errors.hpp"

namespace ncc {
namespace {

struct KahanSum {
    double sum = 0, c = 0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

void check_nk(const MarkovChain& chain, int n, int k) {
    if (n < chain.order()) throw std::invalid_argument("need n >= chain order");
    if (k < 0 || k > chain.order()) throw std::invalid_argument("need 0 <= k <= chain order");
}

// support words of length n (chain support, not just constraint-allowed)
std::vector<BitWord> support_words(const MarkovChain& chain, int n) {
    std::vector<BitWord> out;
    for (const BitWord& w : chain.support_constraint().enumerate_allowed(n))
        if (chain.in_support(w)) out.push_back(w);
    return out;
}

// words reachable from the support by one flip of the channel-side symbols
// (the last len - k); complete for the linearly-vanishing class
std::vector<BitWord> theta_words(const MarkovChain& chain, int len, int k) {
    std::set<BitWord> seen;
    for (const BitWord& w : support_words(chain, len))
        for (int t = 0; t < len - k; ++t) {
            const BitWord flipped = w.flip_back(t);
            if (!chain.in_support(flipped)) seen.insert(flipped);
        }
    return {seen.begin(), seen.end()};
}

bool one_flip_reaches_support(const MarkovChain& chain, const BitWord& u, int k) {
    for (int t = 0; t < u.size() - k; ++t)
        if (chain.in_support(u.flip_back(t))) return true;
    return false;
}

}  // namespace

double h_nk(const MarkovChain& chain, const BitWord& u, int k) {
    if (k < 0 || k > u.size()) throw std::invalid_argument("h_nk: k out of range");
    const int zlen = u.size() - k;
    KahanSum acc;
    for (int t = 0; t < zlen; ++t) acc.add(chain.word_prob(u.flip_back(t)));
    return acc.sum - zlen * chain.word_prob(u);
}

WordClass classify_word(const MarkovChain& chain, const BitWord& u, int k) {
    if (k < 0 || k > u.size()) throw std::invalid_argument("classify_word: k out of range");
    if (chain.in_support(u)) return WordClass::AllowedPositive;
    if (one_flip_reaches_support(chain, u, k)) return WordClass::ThetaEps;
    return WordClass::OEpsSquared;
}

double f_nk(const MarkovChain& chain, int n, int k) {
    check_nk(chain, n, k);
    KahanSum acc;
    for (const BitWord& w : support_words(chain, n))
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (chain.in_support(wv)) continue;
            acc.add(h_nk(chain, wv, k));
        }
    return acc.sum;
}

double g_nk(const MarkovChain& chain, int n, int k) {
    check_nk(chain, n, k);
    const std::vector<BitWord> support = support_words(chain, n);

    KahanSum s1, s2, s3;
    for (const BitWord& w : support) {
        const double pw = chain.word_prob(w);
        const double hw = h_nk(chain, w, k);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            const double hwv = h_nk(chain, wv, k);
            if (chain.in_support(wv)) {
                const double pwv = chain.word_prob(wv);
                s1.add(hwv * std::log(pwv / pw) + (hwv * pw - hw * pwv) / pw);
            } else {
                if (!(hwv > 0.0))
                    throw numeric_error("boundary pair with nonpositive slope at " + wv.str());
                s2.add(hwv * std::log(hwv / pw));
            }
        }
    }
    for (const BitWord& w : theta_words(chain, n, k)) {
        const double hw = h_nk(chain, w, k);
        if (!(hw > 0.0))
            throw numeric_error("flip-reachable word with nonpositive slope at " + w.str());
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (!one_flip_reaches_support(chain, wv, k)) continue;   // vanishes faster than eps
            const double hwv = h_nk(chain, wv, k);
            if (!(hwv > 0.0))
                throw numeric_error("flip-reachable pair with nonpositive slope at " + wv.str());
            s3.add(hwv * std::log(hwv / hw));
        }
    }
    return -s1.sum - s2.sum - s3.sum;
}

double g_positive(const MarkovChain& chain) {
    const int m = chain.order();
    if (chain.contexts().size() != (std::size_t{1} << m))
        throw std::invalid_argument("divergence form needs the full context cube");
    for (const BitWord& c : chain.contexts())
        for (int b = 0; b < 2; ++b)
            if (chain.transition(c, b) <= 0.0)
                throw std::invalid_argument("divergence form needs a strictly positive kernel");
    const int len = 2 * m + 1;
    KahanSum acc;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        const BitWord z(len, v);
        const double p = chain.word_prob(z);
        const double pf = chain.word_prob(z.flip_back(m));   // middle symbol
        acc.add(p * std::log(p / pf));
    }
    return acc.sum;
}

AsymptoticExpansion expansion_of(const MarkovChain& chain) {
    const int m = chain.order();
    return {chain.entropy_rate(), f_nk(chain, 2 * m, 0), g_nk(chain, 3 * m, 0)};
}

}  // namespace ncc
