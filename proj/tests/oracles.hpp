#pragma once

// Test-only oracles, kept deliberately independent of the library's
// algorithmic paths: plain filtering instead of pruned search, exhaustive
// enumeration instead of forward recursions, long-double accumulation instead
// of compensated sums.

#include <cmath>
#include <cstdint>
#include <vector>

#include "ncc/bitword.hpp"
#include "ncc/markov.hpp"

namespace oracle {

// every length-n word, kept iff no forbidden factor
inline std::vector<ncc::BitWord> brute_allowed(const std::vector<ncc::BitWord>& forbidden, int n) {
    std::vector<ncc::BitWord> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const ncc::BitWord w(n, v);
        bool ok = true;
        for (const ncc::BitWord& f : forbidden)
            if (w.contains(f)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

// stationary law by plain power iteration on the context-to-context kernel
inline std::vector<double> power_iteration_stationary(const ncc::MarkovChain& chain, int iters = 20000) {
    const auto& ctxs = chain.contexts();
    const std::size_t n = ctxs.size();
    std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n);
    for (int it = 0; it < iters; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b) {
                const double t = chain.transition(ctxs[i], b);
                if (t == 0.0) continue;
                const ncc::BitWord succ = ctxs[i].append(b).suffix(chain.order());
                for (std::size_t j = 0; j < n; ++j)
                    if (ctxs[j] == succ) next[j] += pi[i] * t;
            }
        for (std::size_t i = 0; i < n; ++i) next[i] = 0.5 * (next[i] + pi[i]);
        pi.swap(next);
    }
    return pi;
}

// output-word law by full (input word) x (noise word) enumeration
inline std::vector<long double> brute_output_law(const ncc::MarkovChain& chain, double eps, int len) {
    std::vector<long double> pz(std::size_t{1} << len, 0.0L);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
        const double px = chain.word_prob(ncc::BitWord(len, x));
        if (px == 0.0) continue;
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << len); ++z) {
            const int d = std::popcount(x ^ z);
            pz[z] += static_cast<long double>(px) *
                     std::pow(static_cast<long double>(eps), d) *
                     std::pow(static_cast<long double>(1.0 - eps), len - d);
        }
    }
    return pz;
}

inline double brute_cond_entropy_output(const ncc::MarkovChain& chain, double eps, int n) {
    const int len = n + 1;
    const auto pz = brute_output_law(chain, eps, len);
    std::vector<long double> prefix(std::size_t{1} << n, 0.0L);
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << len); ++z) prefix[z >> 1] += pz[z];
    long double h = 0.0L;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << len); ++z)
        if (pz[z] > 0.0L) h -= pz[z] * std::log(pz[z] / prefix[z >> 1]);
    return static_cast<double>(h);
}

// joint law with the first m symbols clean, by enumerating noise completions
inline double brute_cond_entropy_birch_lower(const ncc::MarkovChain& chain, double eps, int n) {
    const int m = chain.order();
    const int len = n + 1;
    std::vector<long double> pj(std::size_t{1} << len, 0.0L);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
        const std::uint64_t xpart = w >> (len - m);
        long double total = 0.0L;
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << (len - m)); ++u) {
            const double px = chain.word_prob(ncc::BitWord(len, (xpart << (len - m)) | u));
            if (px == 0.0) continue;
            const std::uint64_t zpart = w & ((std::uint64_t{1} << (len - m)) - 1);
            const int d = std::popcount(u ^ zpart);
            total += static_cast<long double>(px) *
                     std::pow(static_cast<long double>(eps), d) *
                     std::pow(static_cast<long double>(1.0 - eps), (len - m) - d);
        }
        pj[w] = total;
    }
    std::vector<long double> prefix(std::size_t{1} << n, 0.0L);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) prefix[w >> 1] += pj[w];
    long double h = 0.0L;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w)
        if (pj[w] > 0.0L) h -= pj[w] * std::log(pj[w] / prefix[w >> 1]);
    return static_cast<double>(h);
}

// root of sum_{l=d}^{k} r^{l+1} = 1 by bisection, written against the raw sum
inline double rll_root(int d, int k) {
    auto value = [&](double r) {
        double s = 0;
        for (int l = d; l <= k; ++l) s += std::pow(r, l + 1);
        return s;
    };
    double lo = 0, hi = 1;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (value(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
