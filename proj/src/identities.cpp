#include "ncc/identities.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "ncc/asymptotics.hpp"

namespace ncc::identity {
namespace {

std::vector<BitWord> support_words(const MarkovChain& chain, int n) {
    std::vector<BitWord> out;
    for (const BitWord& w : chain.support_constraint().enumerate_allowed(n))
        if (chain.in_support(w)) out.push_back(w);
    return out;
}

bool flip_reaches(const MarkovChain& chain, const BitWord& u, int k) {
    for (int t = 0; t < u.size() - k; ++t)
        if (chain.in_support(u.flip_back(t))) return true;
    return false;
}

// sum over the last `count` flip positions of w inside wv = w+v, i.e. the
// probabilities p(w with symbol t flipped, v) for t = 0..count-1 of w
double near_flip_sum(const MarkovChain& chain, const BitWord& w, int v, int count) {
    double s = 0;
    for (int t = 0; t < count; ++t) s += chain.word_prob(w.flip_back(t).append(v));
    return s;
}

double log_cond(const MarkovChain& chain, const BitWord& suffix_m, int v) {
    return std::log(chain.word_prob(suffix_m.append(v)) / chain.word_prob(suffix_m));
}

}  // namespace

double sum_bilinear(const MarkovChain& chain, int n, int k) {
    double s = 0;
    for (const BitWord& w : support_words(chain, n)) {
        const double pw = chain.word_prob(w);
        const double hw = h_nk(chain, w, k);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (!chain.in_support(wv)) continue;
            s += (h_nk(chain, wv, k) * pw - hw * chain.word_prob(wv)) / pw;
        }
    }
    return s;
}

double closed_bilinear(const MarkovChain& chain) {
    const int m = chain.order();
    double s = 0;
    for (const BitWord& w : support_words(chain, 2 * m))
        for (int v = 0; v < 2; ++v)
            if (!chain.in_support(w.append(v))) s -= near_flip_sum(chain, w, v, m);
    for (const BitWord& u : support_words(chain, m))
        for (int v = 0; v < 2; ++v)
            if (chain.in_support(u.append(v))) s += chain.word_prob(u.append(1 - v));
    return s - 1.0;
}

double sum_boundary_log(const MarkovChain& chain, int n, int k) {
    double s = 0;
    for (const BitWord& w : support_words(chain, n)) {
        const double pw = chain.word_prob(w);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (chain.in_support(wv)) continue;
            const double h = h_nk(chain, wv, k);
            s += h * std::log(h / pw);
        }
    }
    return s;
}

double closed_boundary_log(const MarkovChain& chain) {
    const int m = chain.order();
    double s = 0;
    for (const BitWord& w : support_words(chain, 2 * m)) {
        const double pw = chain.word_prob(w);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (chain.in_support(wv)) continue;
            // only the last m flips of w and the flip of v itself can repair a
            // boundary pair, so the slope is this bounded sum
            const double h = near_flip_sum(chain, w, v, m) + chain.word_prob(w.append(1 - v));
            s += h * std::log(h / pw);
        }
    }
    return s;
}

double sum_conditional_log(const MarkovChain& chain, int n, int k) {
    double s = 0;
    for (const BitWord& w : support_words(chain, n)) {
        const double pw = chain.word_prob(w);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (!chain.in_support(wv)) continue;
            s += h_nk(chain, wv, k) * std::log(chain.word_prob(wv) / pw);
        }
    }
    std::set<BitWord> theta;
    for (const BitWord& w : support_words(chain, n))
        for (int t = 0; t < n - k; ++t)
            if (!chain.in_support(w.flip_back(t))) theta.insert(w.flip_back(t));
    for (const BitWord& w : theta) {
        const double hw = h_nk(chain, w, k);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (!flip_reaches(chain, wv, k)) continue;
            const double hwv = h_nk(chain, wv, k);
            s += hwv * std::log(hwv / hw);
        }
    }
    return s;
}

double boundary_flip_correction(const MarkovChain& chain) {
    const int m = chain.order();
    const int n3 = 3 * m;
    double s = 0;
    // pairs (y, v) with yv in the support whose flip at depth t in (m-1, 2m-1]
    // lands on a word that is off-support yet keeps its leading 2m symbols
    // alive: these flips straddle the conditioning boundary and fall outside
    // the collapsed per-depth sums
    for (const BitWord& y : support_words(chain, n3)) {
        const BitWord sfx = y.suffix(m);
        for (int t = m; t < 2 * m; ++t) {
            const BitWord w = y.flip_back(t);
            if (chain.in_support(w)) continue;
            if (!chain.in_support(w.prefix(n3 - m))) continue;
            for (int v = 0; v < 2; ++v) {
                const double pyv = chain.word_prob(y.append(v));
                if (pyv > 0.0) s += pyv * log_cond(chain, sfx, v);
            }
        }
    }
    return s;
}

double closed_conditional_log(const MarkovChain& chain) {
    const int m = chain.order();
    const int n3 = 3 * m;

    double cond = 0;   // sum p(uv) log p(v|u) over allowed (m+1)-words
    for (const BitWord& u : support_words(chain, m)) {
        const double pu = chain.word_prob(u);
        for (int v = 0; v < 2; ++v) {
            const BitWord uv = u.append(v);
            const double puv = chain.word_prob(uv);
            if (puv > 0.0) cond += puv * std::log(puv / pu);
        }
    }

    double mid = 0;   // bounded-flip weights against the conditional log at 2m
    for (const BitWord& w : support_words(chain, 2 * m)) {
        const BitWord sfx = w.suffix(m);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (!chain.in_support(wv)) continue;
            const double weight = near_flip_sum(chain, w, v, m) + chain.word_prob(w.append(1 - v));
            mid += weight * log_cond(chain, sfx, v);
        }
    }

    double tail = 0;   // flip-reachable pairs whose leading 2m symbols stay alive
    std::set<BitWord> theta;
    for (const BitWord& w : support_words(chain, n3))
        for (int t = 0; t < n3; ++t)
            if (!chain.in_support(w.flip_back(t))) theta.insert(w.flip_back(t));
    for (const BitWord& w : theta) {
        if (!chain.in_support(w.prefix(2 * m))) continue;
        const double hw = h_nk(chain, w, 0);
        for (int v = 0; v < 2; ++v) {
            const BitWord wv = w.append(v);
            if (!flip_reaches(chain, wv, 0)) continue;
            const double hwv = h_nk(chain, wv, 0);
            tail += hwv * std::log(hwv / hw);
        }
    }

    return -(m + 1) * cond + mid + tail - boundary_flip_correction(chain);
}

}  // namespace ncc::identity
