#include "ncc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ncc/errors.hpp"

namespace ncc {
namespace {

constexpr long max_power_iters = 1000000;
constexpr double eigen_tol = 1e-15;
constexpr double residual_tol = 1e-12;

// adjacency restricted to the bi-extendable vertices
struct CoreGraph {
    std::vector<BitWord> vertices;
    std::vector<std::vector<double>> a;
};

CoreGraph core_graph(const FiniteTypeConstraint& c) {
    const auto& g = c.graph();
    CoreGraph core;
    std::vector<int> map(g.vertices.size(), -1);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.essential[i]) {
            map[i] = static_cast<int>(core.vertices.size());
            core.vertices.push_back(g.vertices[i]);
        }
    core.a.assign(core.vertices.size(), std::vector<double>(core.vertices.size(), 0.0));
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (map[i] < 0) continue;
        for (std::size_t j = 0; j < g.vertices.size(); ++j)
            if (map[j] >= 0) core.a[static_cast<std::size_t>(map[i])][static_cast<std::size_t>(map[j])] =
                g.adjacency[i][j];
    }
    return core;
}

// dominant eigenpair of a nonnegative irreducible matrix by power iteration on
// A + I, which is primitive whatever the period of A; the extra eigenvalue 1
// is subtracted at the end. Deterministic all-ones start.
std::pair<double, std::vector<double>> dominant(const std::vector<std::vector<double>>& a,
                                                bool transpose) {
    const std::size_t n = a.size();
    std::vector<double> x(n, 1.0), y(n);
    double lambda = 0;
    for (long iter = 0; iter < max_power_iters; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = x[i];   // the +I term
            for (std::size_t j = 0; j < n; ++j) s += (transpose ? a[j][i] : a[i][j]) * x[j];
            y[i] = s;
        }
        const double norm = *std::max_element(y.begin(), y.end());
        if (norm <= 0) throw numeric_error("vertex graph has no cycles");
        for (std::size_t i = 0; i < n; ++i) y[i] /= norm;
        x.swap(y);
        if (std::abs(norm - 1.0 - lambda) <= eigen_tol && iter > 2) return {norm - 1.0, x};
        lambda = norm - 1.0;
    }
    throw numeric_error("power iteration did not converge");
}

}  // namespace

PerronData perron(const FiniteTypeConstraint& c) {
    if (!c.irreducible()) throw std::invalid_argument("constraint is not irreducible");
    const CoreGraph core = core_graph(c);
    const std::size_t n = core.vertices.size();

    auto [lambda, right] = dominant(core.a, false);
    auto [lambda_l, left] = dominant(core.a, true);
    (void)lambda_l;

    // right normalized to unit max entry by the iteration; scale left so that
    // left . right = 1
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += left[i] * right[i];
    for (std::size_t i = 0; i < n; ++i) left[i] /= dot;

    for (std::size_t i = 0; i < n; ++i) {
        double rv = 0, lv = 0;
        for (std::size_t j = 0; j < n; ++j) {
            rv += core.a[i][j] * right[j];
            lv += left[j] * core.a[j][i];
        }
        if (std::abs(rv - lambda * right[i]) > residual_tol ||
            std::abs(lv - lambda * left[i]) > residual_tol)
            throw numeric_error("eigenpair residual above tolerance");
        if (!(right[i] > 0) || !(left[i] > 0))
            throw numeric_error("eigenvector not strictly positive");
    }

    PerronData out;
    out.lambda = lambda;
    out.rho = 1.0 / lambda;
    out.vertices = core.vertices;
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

MarkovChain parry_chain(const FiniteTypeConstraint& c) {
    if (!c.irreducible()) throw std::invalid_argument("constraint is not irreducible");
    if (c.order() == 0) {
        // lift to the one-letter graph so the result is a genuine chain
        std::vector<BitWord> letters = c.essential_words(1);
        if (letters.empty()) throw std::invalid_argument("constraint admits no bi-infinite words");
        std::vector<MarkovChain::KernelRow> rows;
        const double t = 1.0 / static_cast<double>(letters.size());
        for (const BitWord& a : letters) {
            std::array<double, 2> row{0.0, 0.0};
            for (const BitWord& b : letters)
                row[static_cast<std::size_t>(b.back())] = t;   // all letter pairs allowed at order 0
            rows.emplace_back(a, row);
        }
        return MarkovChain::from_kernel(1, std::move(rows));
    }

    const PerronData pd = perron(c);
    const std::size_t n = pd.vertices.size();
    const CoreGraph core = core_graph(c);
    std::vector<MarkovChain::KernelRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::array<double, 2> row{0.0, 0.0};
        for (int b = 0; b < 2; ++b) {
            const BitWord next = pd.vertices[i].append(b).suffix(c.order());
            const auto it = std::lower_bound(pd.vertices.begin(), pd.vertices.end(), next);
            if (it == pd.vertices.end() || *it != next) continue;
            const std::size_t j = static_cast<std::size_t>(it - pd.vertices.begin());
            if (core.a[i][j] > 0)
                row[static_cast<std::size_t>(b)] = pd.right[j] / (pd.lambda * pd.right[i]);
        }
        rows.emplace_back(pd.vertices[i], row);
    }
    return MarkovChain::from_kernel(c.order(), std::move(rows));
}

double noiseless_capacity(const FiniteTypeConstraint& c) { return std::log(perron(c).lambda); }

double hessian_probe(const StationaryPVector& p, const StationaryPVector& q, double t) {
    if (p.index != q.index) throw std::invalid_argument("p and q live on different indices");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("need interior t");
    const double step = 1e-4;
    auto at = [&](double s) {
        StationaryPVector r;
        r.n = p.n;
        r.index = p.index;
        r.p.resize(p.p.size());
        for (std::size_t i = 0; i < p.p.size(); ++i) r.p[i] = s * p.p[i] + (1.0 - s) * q.p[i];
        return cond_entropy_words(r);
    };
    return (at(t + step) - 2.0 * at(t) + at(t - step)) / (step * step);
}

}  // namespace ncc
