#include "ncc/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ncc/errors.hpp"

namespace ncc {
namespace {

// compensated accumulation; terms are fed in a deterministic order
struct KahanSum {
    double sum = 0, c = 0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

ChannelParameter::ChannelParameter(double eps) : eps_(eps) {
    if (!(eps >= 0.0 && eps <= 0.5))
        throw std::invalid_argument("crossover probability must lie in [0, 1/2]");
}

double binary_entropy(ChannelParameter eps) {
    const double e = eps.value();
    double h = 0;
    if (e > 0) h += e * std::log(1.0 / e);
    if (e < 1) h += (1.0 - e) * std::log(1.0 / (1.0 - e));
    return h;
}

double joint_xz_prob(const MarkovChain& chain, ChannelParameter eps, int k, const BitWord& w) {
    const int N = w.size();
    if (k < 0 || k > N) throw std::invalid_argument("joint_xz_prob: k out of range");
    const double e = eps.value();
    const int m = chain.order();
    const auto& ctxs = chain.contexts();
    const std::size_t nc = ctxs.size();

    // per-position factor: indicator for clean symbols, noise weight beyond
    auto factor = [&](int pos, int bit) {
        if (pos < k) return bit == w[pos] ? 1.0 : 0.0;
        return bit == w[pos] ? 1.0 - e : e;
    };

    if (N <= m) {
        // align w with the most recent N symbols of the context window
        double total = 0;
        for (std::size_t i = 0; i < nc; ++i) {
            double weight = chain.stationary(ctxs[i]);
            for (int t = 0; t < N && weight != 0.0; ++t)
                weight *= factor(t, ctxs[i][m - N + t]);
            total += weight;
        }
        return total;
    }

    std::vector<double> beta(nc), next(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        double weight = chain.stationary(ctxs[i]);
        for (int t = 0; t < m && weight != 0.0; ++t) weight *= factor(t, ctxs[i][t]);
        beta[i] = weight;
    }
    for (int pos = m; pos < N; ++pos) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < nc; ++i) {
            if (beta[i] == 0.0) continue;
            for (int b = 0; b < 2; ++b) {
                const double t = chain.transition(ctxs[i], b);
                if (t == 0.0) continue;
                const double f = factor(pos, b);
                if (f == 0.0) continue;
                // successor row: shift the context and append b
                const BitWord succ = ctxs[i].append(b).suffix(m);
                const auto it = std::lower_bound(ctxs.begin(), ctxs.end(), succ);
                next[static_cast<std::size_t>(it - ctxs.begin())] += beta[i] * t * f;
            }
        }
        beta.swap(next);
    }
    double total = 0;
    for (double x : beta) total += x;
    return total;
}

namespace {

// H(last symbol | previous n) over all words of length n+1 whose first k
// symbols are clean input. One depth-first pass over the output tree carrying
// the context-indexed forward weights; entropy terms are collected and
// compensated-summed in nonincreasing probability order.
double cond_entropy_tree(const MarkovChain& chain, double e, int n, int k, int cap) {
    if (n + 1 > cap)
        throw resource_error("conditioning length " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    if (k > n) throw std::invalid_argument("clean prefix longer than the conditioning window");
    const int m = chain.order();
    const int N = n + 1;
    const auto& ctxs = chain.contexts();
    const std::size_t nc = ctxs.size();

    // successor row and stationary tables
    std::vector<std::array<int, 2>> succ(nc);
    for (std::size_t i = 0; i < nc; ++i)
        for (int b = 0; b < 2; ++b) {
            const BitWord s = ctxs[i].append(b).suffix(m);
            const auto it = std::lower_bound(ctxs.begin(), ctxs.end(), s);
            succ[i][static_cast<std::size_t>(b)] =
                it != ctxs.end() && *it == s ? static_cast<int>(it - ctxs.begin()) : -1;
        }

    struct Term {
        double p;
        double value;
    };
    std::vector<Term> terms;
    terms.reserve(std::size_t{1} << std::min(N, 22));

    // level weights: beta[level][i] = P(word prefix so far, context = i).
    // For levels < m the "context" is the partially specified window, handled
    // by keeping per-context weights from the start (stationary law filtered
    // symbol by symbol: position t constrains context symbol t for t < m).
    std::vector<std::vector<double>> beta(static_cast<std::size_t>(N) + 1,
                                          std::vector<double>(nc, 0.0));
    for (std::size_t i = 0; i < nc; ++i) beta[0][i] = chain.stationary(ctxs[i]);

    auto level_sum = [&](int level) {
        double s = 0;
        for (double x : beta[static_cast<std::size_t>(level)]) s += x;
        return s;
    };

    auto extend = [&](int level, int bit) {
        // symbol weight for this position
        auto fac = [&](int b) {
            if (level < k) return b == bit ? 1.0 : 0.0;
            return b == bit ? 1.0 - e : e;
        };
        const auto& cur = beta[static_cast<std::size_t>(level)];
        auto& nxt = beta[static_cast<std::size_t>(level) + 1];
        std::fill(nxt.begin(), nxt.end(), 0.0);
        if (level < m) {
            // the context window itself covers this position
            for (std::size_t i = 0; i < nc; ++i) {
                if (cur[i] == 0.0) continue;
                const double f = fac(ctxs[i][level]);
                if (f != 0.0) nxt[i] = cur[i] * f;
            }
        } else {
            for (std::size_t i = 0; i < nc; ++i) {
                if (cur[i] == 0.0) continue;
                for (int b = 0; b < 2; ++b) {
                    const double t = chain.transition(ctxs[i], b);
                    if (t == 0.0) continue;
                    const double f = fac(b);
                    if (f == 0.0) continue;
                    nxt[static_cast<std::size_t>(succ[i][static_cast<std::size_t>(b)])] +=
                        cur[i] * t * f;
                }
            }
        }
    };

    // iterative DFS over the word tree
    std::function<void(int)> walk = [&](int level) {
        if (level == n) {
            const double sigma = level_sum(n);
            if (sigma <= 0.0) return;
            for (int bit = 0; bit < 2; ++bit) {
                extend(level, bit);
                const double p = level_sum(N);
                if (p > 0.0) terms.push_back({p, -p * std::log(p / sigma)});
            }
            return;
        }
        for (int bit = 0; bit < 2; ++bit) {
            extend(level, bit);
            if (level_sum(level + 1) > 0.0) walk(level + 1);
        }
    };
    walk(0);

    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.p != b.p) return a.p > b.p;
        return a.value > b.value;
    });
    KahanSum acc;
    for (const Term& t : terms) acc.add(t.value);
    return acc.sum;
}

}  // namespace

double cond_entropy_partial(const MarkovChain& chain, ChannelParameter eps, int n, int k, int cap) {
    return cond_entropy_tree(chain, eps.value(), n, k, cap);
}

double cond_entropy_output(const MarkovChain& chain, ChannelParameter eps, int n, int cap) {
    return cond_entropy_tree(chain, eps.value(), n, 0, cap);
}

double cond_entropy_birch_lower(const MarkovChain& chain, ChannelParameter eps, int n, int cap) {
    if (n < chain.order())
        throw std::invalid_argument("lower bound needs n >= chain order");
    return cond_entropy_tree(chain, eps.value(), n, chain.order(), cap);
}

Sandwich entropy_rate_sandwich(const MarkovChain& chain, ChannelParameter eps, int n, int cap) {
    return {cond_entropy_birch_lower(chain, eps, n, cap), cond_entropy_output(chain, eps, n, cap)};
}

}  // namespace ncc
