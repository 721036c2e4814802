#include "ncc/capacity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ncc/asymptotics.hpp"
#include "ncc/errors.hpp"
#include "ncc/rll.hpp"
#include "ncc/spectral.hpp"

namespace ncc {
namespace {

constexpr double entry_floor = 1e-12;

// orthonormal basis of the tangent space of the feasible set: probability
// normalization plus shift-stationarity, both linear
Eigen::MatrixXd stationarity_nullspace(const std::vector<BitWord>& index) {
    const int dims = static_cast<int>(index.size());
    std::vector<BitWord> shorts;
    for (const BitWord& w : index) {
        shorts.push_back(w.drop_last());
        shorts.push_back(w.drop_first());
    }
    std::sort(shorts.begin(), shorts.end());
    shorts.erase(std::unique(shorts.begin(), shorts.end()), shorts.end());
    const int rows = 1 + static_cast<int>(shorts.size());
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(rows, dims);
    for (int j = 0; j < dims; ++j) {
        C(0, j) = 1.0;
        const auto pre = std::lower_bound(shorts.begin(), shorts.end(), index[j].drop_last());
        const auto suf = std::lower_bound(shorts.begin(), shorts.end(), index[j].drop_first());
        C(1 + static_cast<int>(pre - shorts.begin()), j) += 1.0;
        C(1 + static_cast<int>(suf - shorts.begin()), j) -= 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(C);
    lu.setThreshold(1e-10);
    const Eigen::MatrixXd kernel = lu.kernel();
    if (kernel.cols() == 0) return Eigen::MatrixXd::Zero(dims, 0);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dims, kernel.cols());
    return q;
}

double hn_objective(const std::vector<BitWord>& index, const Eigen::VectorXd& x, int n,
                    double eps) {
    StationaryPVector pv;
    pv.n = n;
    pv.index = index;
    pv.p.assign(x.data(), x.data() + x.size());
    if (eps == 0.0) return cond_entropy_words(pv);
    const MarkovChain chain = chain_from_pvector(pv);
    return cond_entropy_output(chain, ChannelParameter(eps), n);
}

bool feasible(const Eigen::VectorXd& x) {
    for (int i = 0; i < x.size(); ++i)
        if (!(x[i] > entry_floor)) return false;
    return true;
}

}  // namespace

CapacityExpansion capacity_expansion(const FiniteTypeConstraint& c) {
    if (!c.irreducible()) throw std::invalid_argument("constraint is not irreducible");
    const AsymptoticExpansion e = expansion_of(parry_chain(c));
    return {noiseless_capacity(c), e.f - 1.0, e.g - 1.0};
}

HnResult optimize_Hn(const FiniteTypeConstraint& c, int n, ChannelParameter eps,
                     const OptimOptions& opt) {
    if (!c.irreducible()) throw std::invalid_argument("constraint is not irreducible");
    if (n < std::max(1, c.order())) throw std::invalid_argument("need n >= constraint order");

    const MarkovChain parry = parry_chain(c);
    const StationaryPVector start = pvector_of(parry, n);
    const std::vector<BitWord>& index = start.index;
    const int dims = static_cast<int>(index.size());
    const Eigen::MatrixXd basis = stationarity_nullspace(index);
    const int free_dims = static_cast<int>(basis.cols());
    const double e = eps.value();

    auto ascend = [&](Eigen::VectorXd x, int& iters_used) {
        double value = hn_objective(index, x, n, e);
        int iter = 0;
        for (; iter < opt.max_iterations; ++iter) {
            Eigen::VectorXd grad(free_dims);
            for (int d = 0; d < free_dims; ++d) {
                const Eigen::VectorXd dir = basis.col(d);
                const double up = hn_objective(index, x + opt.fd_step * dir, n, e);
                const double dn = hn_objective(index, x - opt.fd_step * dir, n, e);
                grad[d] = (up - dn) / (2.0 * opt.fd_step);
            }
            if (grad.lpNorm<Eigen::Infinity>() <= opt.grad_tol) {
                iters_used = iter;
                return std::pair{x, value};
            }
            const Eigen::VectorXd step_dir = basis * grad;
            double step = 0.5;
            bool moved = false;
            for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
                const Eigen::VectorXd cand = x + step * step_dir;
                if (!feasible(cand)) continue;
                const double cand_value = hn_objective(index, cand, n, e);
                if (cand_value > value) {
                    x = cand;
                    value = cand_value;
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                iters_used = iter;
                return std::pair{x, value};
            }
        }
        iters_used = iter;
        return std::pair{x, value};
    };

    Eigen::VectorXd x0 = Eigen::Map<const Eigen::VectorXd>(start.p.data(), dims);
    int iters = 0;
    auto [best_x, best_value] = ascend(x0, iters);
    int best_iters = iters;

    for (int r = 0; r < opt.restarts; ++r) {
        const MarkovChain seed_chain =
            random_chain(c, std::max(1, c.order()), opt.seed * 1000003ULL + static_cast<std::uint64_t>(r) + 1);
        const StationaryPVector sp = pvector_of(seed_chain, n);
        Eigen::VectorXd xr = Eigen::Map<const Eigen::VectorXd>(sp.p.data(), dims);
        auto [x, value] = ascend(xr, iters);
        if (value > best_value) {
            best_value = value;
            best_x = x;
            best_iters = iters;
        }
    }

    HnResult out;
    out.maximizer.n = n;
    out.maximizer.index = index;
    out.maximizer.p.assign(best_x.data(), best_x.data() + dims);
    out.value = best_value;
    out.min_entry = best_x.minCoeff();
    out.iterations = best_iters;
    out.converged = best_iters < opt.max_iterations;
    return out;
}

namespace {

struct HmParam {
    std::vector<BitWord> contexts;
    std::vector<std::array<char, 2>> allowed;   // transitions open under the constraint
    std::vector<int> free_slots;                // contexts with both transitions open
};

HmParam hm_parametrize(const FiniteTypeConstraint& c, int m) {
    HmParam par;
    par.contexts = c.essential_words(m);
    auto essential = [&](const BitWord& w) {
        return std::binary_search(par.contexts.begin(), par.contexts.end(), w);
    };
    for (std::size_t i = 0; i < par.contexts.size(); ++i) {
        const BitWord& u = par.contexts[i];
        std::array<char, 2> ok{0, 0};
        for (int b = 0; b < 2; ++b)
            ok[static_cast<std::size_t>(b)] =
                c.allows(u.append(b)) && essential(u.append(b).suffix(m));
        if (!ok[0] && !ok[1]) throw numeric_error("essential context without successor");
        par.allowed.push_back(ok);
        if (ok[0] && ok[1]) par.free_slots.push_back(static_cast<int>(i));
    }
    return par;
}

MarkovChain hm_chain(const HmParam& par, int m, const Eigen::VectorXd& theta) {
    std::vector<MarkovChain::KernelRow> rows;
    int t = 0;
    for (std::size_t i = 0; i < par.contexts.size(); ++i) {
        std::array<double, 2> row{0.0, 0.0};
        if (par.allowed[i][0] && par.allowed[i][1]) {
            const double p1 = 1.0 / (1.0 + std::exp(-theta[t++]));
            row = {1.0 - p1, p1};
        } else if (par.allowed[i][0]) {
            row = {1.0, 0.0};
        } else {
            row = {0.0, 1.0};
        }
        rows.emplace_back(par.contexts[i], row);
    }
    return MarkovChain::from_kernel(m, std::move(rows));
}

constexpr int hm_n_cap = 18;

Sandwich hm_sandwich(const MarkovChain& chain, ChannelParameter eps, double tol, int& n_used,
                     bool& met) {
    int n = std::max(chain.order(), n_used);
    Sandwich s = entropy_rate_sandwich(chain, eps, n);
    while (s.gap() > tol && n < hm_n_cap) s = entropy_rate_sandwich(chain, eps, ++n);
    n_used = n;
    met = s.gap() <= tol;
    return s;
}

}  // namespace

HmResult optimize_hm(const FiniteTypeConstraint& c, int m, ChannelParameter eps, double tol,
                     const OptimOptions& opt) {
    if (!c.irreducible()) throw std::invalid_argument("constraint is not irreducible");
    if (m < std::max(1, c.order())) throw std::invalid_argument("need m >= constraint order");

    // Parry chain expressed at order m as the start
    const MarkovChain parry = parry_chain(c);
    const HmParam par = hm_parametrize(c, m);
    const int free_dims = static_cast<int>(par.free_slots.size());
    Eigen::VectorXd theta(free_dims);
    for (int t = 0; t < free_dims; ++t) {
        const BitWord& ctx = par.contexts[static_cast<std::size_t>(par.free_slots[static_cast<std::size_t>(t)])];
        const double p1 = parry.transition(ctx.suffix(parry.order()), 1);
        const double clamped = std::clamp(p1, 1e-5, 1.0 - 1e-5);
        theta[t] = std::log(clamped / (1.0 - clamped));
    }

    if (eps.value() == 0.0) {
        const MarkovChain chain = hm_chain(par, m, theta);
        const double h = chain.entropy_rate();
        return {chain, {h, h}, m, true, 0};
    }

    int n_used = std::max(m, c.order());
    bool met = false;
    auto objective = [&](const Eigen::VectorXd& th) {
        return hm_sandwich(hm_chain(par, m, th), eps, tol, n_used, met).midpoint();
    };

    double value = objective(theta);
    const double fd = 1e-5;
    const double gtol = std::max(opt.grad_tol, 1e-8);
    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        Eigen::VectorXd grad(free_dims);
        for (int d = 0; d < free_dims; ++d) {
            Eigen::VectorXd up = theta, dn = theta;
            up[d] += fd;
            dn[d] -= fd;
            grad[d] = (objective(up) - objective(dn)) / (2.0 * fd);
        }
        if (free_dims == 0 || grad.lpNorm<Eigen::Infinity>() <= gtol) break;
        double step = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
            const Eigen::VectorXd cand = theta + step * grad;
            const double cand_value = objective(cand);
            if (cand_value > value) {
                theta = cand;
                value = cand_value;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }

    const MarkovChain best = hm_chain(par, m, theta);
    const Sandwich s = hm_sandwich(best, eps, tol, n_used, met);
    return {best, s, n_used, met, iter};
}

CapacitySandwich capacity_sandwich(const FiniteTypeConstraint& c, ChannelParameter eps, int m, int n,
                                   double hm_tol, const OptimOptions& opt) {
    const double h_eps = binary_entropy(eps);
    const HmResult hm = optimize_hm(c, m, eps, hm_tol, opt);
    const HnResult hn = optimize_Hn(c, n, eps, opt);
    return {hm.sandwich.lower - h_eps, hn.value - h_eps};
}

TaylorProbe taylor_probe() {
    const FiniteTypeConstraint no11 = rll::constraint({1, std::nullopt});
    const MarkovChain parry = parry_chain(no11);
    const double p_max = parry.transition(BitWord::parse("0"), 1);

    auto entropy_at = [](double p) {
        return MarkovChain::from_kernel(
                   1, {{BitWord::parse("0"), {1.0 - p, p}}, {BitWord::parse("1"), {1.0, 0.0}}})
            .entropy_rate();
    };
    const double step = 1e-5;
    TaylorProbe out;
    out.p_max = p_max;
    out.k1 = (entropy_at(p_max + step) - 2.0 * entropy_at(p_max) + entropy_at(p_max - step)) /
             (step * step);
    out.k2 = (rll::family_f(p_max + step) - rll::family_f(p_max - step)) / (2.0 * step);
    out.k3 = (rll::family_g(p_max + step) - rll::family_g(p_max - step)) / (2.0 * step);
    return out;
}

std::vector<SharpnessRow> sharpness_probe(double alpha, const std::vector<ChannelParameter>& grid,
                                          int n) {
    const TaylorProbe probe = taylor_probe();
    const double limit = probe.k2 / std::abs(probe.k1);
    if (!(alpha > 0.0 && alpha < limit))
        throw std::invalid_argument("alpha must lie strictly inside (0, k2/|k1|)");
    const FiniteTypeConstraint no11 = rll::constraint({1, std::nullopt});
    const CapacityExpansion exp = capacity_expansion(no11);

    std::vector<SharpnessRow> rows;
    for (const ChannelParameter eps : grid) {
        const double e = eps.value();
        if (!(e > 0.0 && e <= 1e-2))
            throw std::invalid_argument("sharpness grid must lie in (0, 1e-2]");
        const double elog = e * std::log(1.0 / e);
        const double p = probe.p_max + alpha * elog;
        const MarkovChain chain = MarkovChain::from_kernel(
            1, {{BitWord::parse("0"), {1.0 - p, p}}, {BitWord::parse("1"), {1.0, 0.0}}});
        const Sandwich s = entropy_rate_sandwich(chain, eps, n);
        const double predicted = exp.c0 + exp.c_log * elog + exp.c_lin * e;
        rows.push_back({e, s.midpoint() - binary_entropy(eps) - predicted, std::max(s.gap(), 0.0)});
    }
    return rows;
}

}  // namespace ncc
