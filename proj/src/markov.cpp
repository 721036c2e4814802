#include "ncc/markov.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ncc/errors.hpp"

namespace ncc {
namespace {

constexpr double row_sum_tol = 1e-12;
constexpr double stationary_tol = 1e-9;

std::vector<int> scc_of(const std::vector<std::vector<int>>& adj);

// context graph restricted to positive transitions must be one SCC
bool positive_graph_irreducible(const std::vector<BitWord>& ctxs,
                                const std::vector<std::array<double, 2>>& kernel,
                                const std::vector<std::int32_t>& slot, int order) {
    const int n = static_cast<int>(ctxs.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < 2; ++b) {
            if (kernel[i][static_cast<std::size_t>(b)] <= 0.0) continue;
            const BitWord next = ctxs[i].append(b).suffix(order);
            const int j = slot[next.value()];
            if (j < 0) return false;   // walks out of the context set
            adj[i].push_back(j);
        }
    const std::vector<int> comp = scc_of(adj);
    return std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; });
}

std::vector<int> scc_of(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0, next_comp = 0;
    struct Frame { int v; std::size_t e; };
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        std::vector<Frame> frames{{s, 0}};
        index[s] = low[s] = next_index++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            auto& [v, e] = frames.back();
            bool down = false;
            while (e < adj[v].size()) {
                int w = adj[v][e++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                    down = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (down) continue;
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            int fin = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[fin]);
        }
    }
    return comp;
}

std::vector<double> solve_stationary(const std::vector<BitWord>& ctxs,
                                     const std::vector<std::array<double, 2>>& kernel,
                                     const std::vector<std::int32_t>& slot, int order) {
    const int n = static_cast<int>(ctxs.size());
    auto successor = [&](int i, int b) {
        return slot[ctxs[i].append(b).suffix(order).value()];
    };
    if (n <= 4096) {
        // pi (P - I) = 0 with sum pi = 1: overwrite one column with ones
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            for (int b = 0; b < 2; ++b) {
                const double t = kernel[i][static_cast<std::size_t>(b)];
                if (t > 0.0) A(successor(i, b), i) += t;   // transposed P
            }
            A(i, i) -= 1.0;
        }
        for (int j = 0; j < n; ++j) A(n - 1, j) = 1.0;
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
        rhs(n - 1) = 1.0;
        const Eigen::VectorXd pi = A.partialPivLu().solve(rhs);
        return {pi.data(), pi.data() + n};
    }
    std::vector<double> pi(static_cast<std::size_t>(n), 1.0 / n), next(static_cast<std::size_t>(n));
    for (long iter = 0; iter < 1000000; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b) {
                const double t = kernel[i][static_cast<std::size_t>(b)];
                if (t > 0.0) next[successor(i, b)] += pi[i] * t;
            }
        // damping keeps periodic context graphs convergent
        double diff = 0;
        for (int i = 0; i < n; ++i) {
            next[i] = 0.5 * (next[i] + pi[i]);
            diff = std::max(diff, std::abs(next[i] - pi[i]));
        }
        pi.swap(next);
        if (diff <= 1e-14) return pi;
    }
    throw numeric_error("stationary law power iteration did not converge");
}

}  // namespace

MarkovChain MarkovChain::from_kernel(int order, std::vector<KernelRow> kernel) {
    if (order < 1) throw std::invalid_argument("chain order must be >= 1");
    if (kernel.empty()) throw std::invalid_argument("empty kernel");
    std::sort(kernel.begin(), kernel.end(),
              [](const KernelRow& a, const KernelRow& b) { return a.first < b.first; });

    MarkovChain chain;
    chain.order_ = order;
    chain.slot_.assign(std::size_t{1} << order, -1);
    for (const auto& [ctx, row] : kernel) {
        if (ctx.size() != order) throw std::invalid_argument("context length differs from order");
        if (chain.slot_[ctx.value()] != -1) throw std::invalid_argument("duplicate context " + ctx.str());
        if (row[0] < 0 || row[1] < 0 || std::abs(row[0] + row[1] - 1.0) > row_sum_tol)
            throw std::invalid_argument("kernel row for " + ctx.str() + " is not a distribution");
        chain.slot_[ctx.value()] = static_cast<std::int32_t>(chain.contexts_.size());
        chain.contexts_.push_back(ctx);
        chain.kernel_.push_back(row);
    }
    for (std::size_t i = 0; i < chain.contexts_.size(); ++i)
        for (int b = 0; b < 2; ++b)
            if (chain.kernel_[i][static_cast<std::size_t>(b)] > 0.0 &&
                chain.slot_[chain.contexts_[i].append(b).suffix(order).value()] < 0)
                throw std::invalid_argument("positive transition leaves the context set from " +
                                            chain.contexts_[i].str());
    if (!positive_graph_irreducible(chain.contexts_, chain.kernel_, chain.slot_, order))
        throw std::invalid_argument("positive-kernel context graph is not irreducible");

    chain.pi_ = solve_stationary(chain.contexts_, chain.kernel_, chain.slot_, order);

    // support constraint: kernel zeros plus missing contexts, reduced
    std::vector<BitWord> forb;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << order); ++v)
        if (chain.slot_[v] < 0) forb.emplace_back(order, v);
    for (std::size_t i = 0; i < chain.contexts_.size(); ++i)
        for (int b = 0; b < 2; ++b)
            if (chain.kernel_[i][static_cast<std::size_t>(b)] == 0.0)
                forb.push_back(chain.contexts_[i].append(b));
    chain.support_ = std::make_shared<const FiniteTypeConstraint>(std::move(forb));
    return chain;
}

double MarkovChain::transition(const BitWord& ctx, int bit) const {
    if (ctx.size() != order_) throw std::invalid_argument("context length differs from order");
    const int s = slot_[ctx.value()];
    return s < 0 ? 0.0 : kernel_[static_cast<std::size_t>(s)][static_cast<std::size_t>(bit)];
}

double MarkovChain::stationary(const BitWord& ctx) const {
    if (ctx.size() != order_) throw std::invalid_argument("context length differs from order");
    const int s = slot_[ctx.value()];
    return s < 0 ? 0.0 : pi_[static_cast<std::size_t>(s)];
}

double MarkovChain::word_prob(const BitWord& w) const {
    const int L = w.size();
    if (L == 0) return 1.0;
    if (L <= order_) {
        double total = 0;
        for (std::size_t i = 0; i < contexts_.size(); ++i)
            if (contexts_[i].suffix(L) == w) total += pi_[i];
        return total;
    }
    int s = slot_[w.prefix(order_).value()];
    if (s < 0) return 0.0;
    double prob = pi_[static_cast<std::size_t>(s)];
    BitWord ctx = w.prefix(order_);
    for (int i = order_; i < L; ++i) {
        const int b = w[i];
        const double t = kernel_[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)];
        if (t == 0.0) return 0.0;
        prob *= t;
        ctx = ctx.append(b).suffix(order_);
        s = slot_[ctx.value()];
    }
    return prob;
}

bool MarkovChain::in_support(const BitWord& w) const {
    const int L = w.size();
    if (L == 0) return true;
    if (L <= order_) {
        for (const BitWord& c : contexts_)
            if (c.suffix(L) == w) return true;   // pi > 0 on every context
        return false;
    }
    int s = slot_[w.prefix(order_).value()];
    if (s < 0) return false;
    BitWord ctx = w.prefix(order_);
    for (int i = order_; i < L; ++i) {
        const int b = w[i];
        if (kernel_[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)] == 0.0) return false;
        ctx = ctx.append(b).suffix(order_);
        s = slot_[ctx.value()];
    }
    return true;
}

double MarkovChain::entropy_rate() const {
    double h = 0;
    for (std::size_t i = 0; i < contexts_.size(); ++i)
        for (int b = 0; b < 2; ++b) {
            const double t = kernel_[i][static_cast<std::size_t>(b)];
            if (t > 0.0) h -= pi_[i] * t * std::log(t);
        }
    return h;
}

double entropy_rate_markov(const MarkovChain& chain) { return chain.entropy_rate(); }

StationaryPVector pvector_of(const MarkovChain& chain, int n, std::size_t cap) {
    if (n < 0) throw std::invalid_argument("pvector_of: negative n");
    StationaryPVector out;
    out.n = n;
    out.index = chain.support_constraint().enumerate_allowed(n + 1, cap);
    out.p.reserve(out.index.size());
    for (const BitWord& w : out.index) out.p.push_back(chain.word_prob(w));
    return out;
}

double cond_entropy_words(const StationaryPVector& p) {
    double h = 0;
    const std::size_t count = p.index.size();
    for (std::size_t i = 0; i < count;) {
        std::size_t j = i;
        double prefix = 0;
        while (j < count && p.index[j].drop_last() == p.index[i].drop_last()) prefix += p.p[j++];
        for (std::size_t t = i; t < j; ++t)
            if (p.p[t] > 0.0) h -= p.p[t] * std::log(p.p[t] / prefix);
        i = j;
    }
    return h;
}

MarkovChain chain_from_pvector(const StationaryPVector& pv) {
    const int n = pv.n;
    if (n < 1) throw std::invalid_argument("chain_from_pvector needs n >= 1");
    if (pv.index.size() != pv.p.size()) throw std::invalid_argument("index/probability size mismatch");

    double total = 0;
    for (double x : pv.p) {
        if (x < 0) throw std::invalid_argument("negative probability entry");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probabilities do not sum to 1");

    // prefix and suffix marginals over the n-words; stationarity means they agree
    struct Marg { double pre = 0, suf = 0; };
    std::vector<BitWord> shorts;
    std::vector<Marg> marg;
    auto find = [&](const BitWord& w) -> Marg& {
        const auto it = std::lower_bound(shorts.begin(), shorts.end(), w);
        if (it != shorts.end() && *it == w) return marg[static_cast<std::size_t>(it - shorts.begin())];
        const auto pos = static_cast<std::size_t>(it - shorts.begin());
        shorts.insert(it, w);
        marg.insert(marg.begin() + static_cast<std::ptrdiff_t>(pos), Marg{});
        return marg[pos];
    };
    for (std::size_t i = 0; i < pv.index.size(); ++i) {
        find(pv.index[i].drop_last()).pre += pv.p[i];
        find(pv.index[i].drop_first()).suf += pv.p[i];
    }
    for (std::size_t i = 0; i < shorts.size(); ++i)
        if (std::abs(marg[i].pre - marg[i].suf) > stationary_tol)
            throw std::invalid_argument("p-vector is not shift-stationary at " + shorts[i].str());

    std::vector<MarkovChain::KernelRow> rows;
    for (std::size_t i = 0; i < shorts.size(); ++i) {
        if (marg[i].pre <= 0.0) continue;
        std::array<double, 2> row{0.0, 0.0};
        for (int b = 0; b < 2; ++b) {
            const BitWord wb = shorts[i].append(b);
            const auto it = std::lower_bound(pv.index.begin(), pv.index.end(), wb);
            const double pwb = (it != pv.index.end() && *it == wb)
                                   ? pv.p[static_cast<std::size_t>(it - pv.index.begin())]
                                   : 0.0;
            row[static_cast<std::size_t>(b)] = pwb == 0.0 ? 0.0 : pwb / marg[i].pre;
        }
        const double s = row[0] + row[1];
        if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("conditional row does not normalize");
        row[0] = row[0] == 0.0 ? 0.0 : row[0] / s;
        row[1] = row[1] == 0.0 ? 0.0 : row[1] / s;
        rows.emplace_back(shorts[i], row);
    }
    return MarkovChain::from_kernel(n, std::move(rows));
}

MarkovChain random_chain(const FiniteTypeConstraint& c, int order, std::uint64_t seed) {
    if (order < std::max(1, c.order()))
        throw std::invalid_argument("chain order below the constraint order");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    const std::vector<BitWord> ctxs = c.essential_words(order);
    auto essential = [&](const BitWord& w) {
        return std::binary_search(ctxs.begin(), ctxs.end(), w);
    };
    std::vector<MarkovChain::KernelRow> rows;
    for (const BitWord& ctx : ctxs) {
        const bool ok0 = c.allows(ctx.append(0)) && essential(ctx.append(0).suffix(order));
        const bool ok1 = c.allows(ctx.append(1)) && essential(ctx.append(1).suffix(order));
        std::array<double, 2> row{0.0, 0.0};
        if (ok0 && ok1) {
            const double a = unit(rng);
            row = {1.0 - a, a};
        } else if (ok0) {
            row = {1.0, 0.0};
        } else {
            row = {0.0, 1.0};
        }
        rows.emplace_back(ctx, row);
    }
    return MarkovChain::from_kernel(order, std::move(rows));
}

}  // namespace ncc
