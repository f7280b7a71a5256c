#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "c2b/elicitation.hpp"
#include "c2b/error.hpp"

namespace c2b {

namespace {

using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

// theta = (alpha1, beta1, gamma1, alpha2, beta2, gamma2)
Gauss2 to_params(const Vector6& t) { return {t[0], t[1], t[2], t[3], t[4], t[5]}; }

Vector6 to_theta(const Gauss2& g) {
    Vector6 t;
    t << g.alpha1, g.beta1, g.gamma1, g.alpha2, g.beta2, g.gamma2;
    return t;
}

double cost_at(std::span<const double> xs, std::span<const double> mus, const Vector6& t) {
    if (!(t[2] > 0.0 && t[5] > 0.0)) return std::numeric_limits<double>::infinity();
    const Gauss2 g = to_params(t);
    double c = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = gauss2_raw(g, xs[i]) - mus[i];
        c += r * r;
    }
    return 0.5 * c;
}

// Accumulates J^T J and J^T r for the residual gauss2(x) - mu.
void normal_equations(std::span<const double> xs, std::span<const double> mus, const Vector6& t,
                      Matrix6& jtj, Vector6& jtr) {
    const Gauss2 g = to_params(t);
    jtj.setZero();
    jtr.setZero();
    Vector6 row;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double z1 = (xs[i] - g.beta1) / g.gamma1;
        const double z2 = (xs[i] - g.beta2) / g.gamma2;
        const double e1 = std::exp(-z1 * z1);
        const double e2 = std::exp(-z2 * z2);
        const double r = g.alpha1 * e1 + g.alpha2 * e2 - mus[i];
        row << e1, g.alpha1 * e1 * 2.0 * z1 / g.gamma1, g.alpha1 * e1 * 2.0 * z1 * z1 / g.gamma1,
            e2, g.alpha2 * e2 * 2.0 * z2 / g.gamma2, g.alpha2 * e2 * 2.0 * z2 * z2 / g.gamma2;
        jtj.selfadjointView<Eigen::Lower>().rankUpdate(row);
        jtr += r * row;
    }
    jtj = jtj.selfadjointView<Eigen::Lower>();
}

}  // namespace

Gauss2Fit fit_gauss2(std::span<const double> xs, std::span<const double> mus, const Gauss2& init,
                     const FitOptions& options) {
    if (xs.size() != mus.size()) throw std::invalid_argument("fit_gauss2: xs and mus differ in length");
    if (xs.size() < 6) throw DatasetError("fit_gauss2 needs at least 6 points");
    if (!(init.gamma1 > 0.0 && init.gamma2 > 0.0))
        throw std::invalid_argument("fit_gauss2: initial gammas must be positive");

    Vector6 theta = to_theta(init);
    double cost = cost_at(xs, mus, theta);

    Gauss2Fit fit;
    fit.initial_cost = cost;

    constexpr double tiny_cost = 1e-30;
    constexpr double max_damping = 1e16;
    // Damping is relative to the largest diagonal entry of J^T J, updated by
    // the gain ratio (Nielsen's rule).
    double damping = 1e-3;
    double growth = 2.0;
    bool accepted_any = false;

    Matrix6 jtj;
    Vector6 jtr;
    while (fit.iterations < options.max_iter && cost > tiny_cost) {
        normal_equations(xs, mus, theta, jtj, jtr);
        const double scale = std::max(jtj.diagonal().maxCoeff(), 1e-300);

        bool stepped = false;
        bool done = false;
        while (damping <= max_damping) {
            Matrix6 lhs = jtj;
            lhs.diagonal().array() += damping * scale;
            const Vector6 step = lhs.ldlt().solve(-jtr);
            const Vector6 candidate = theta + step;
            const double candidate_cost = step.allFinite() ? cost_at(xs, mus, candidate)
                                                           : std::numeric_limits<double>::infinity();
            if (candidate_cost < cost) {
                const double predicted = -step.dot(jtr) - 0.5 * step.dot(jtj * step);
                const double gain = predicted > 0.0 ? (cost - candidate_cost) / predicted : 0.0;
                const double rel_decrease = (cost - candidate_cost) / cost;
                theta = candidate;
                cost = candidate_cost;
                damping = std::max(damping * std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * gain - 1.0, 3)), 1e-15);
                growth = 2.0;
                stepped = true;
                done = rel_decrease < options.rel_cost_tol ||
                       step.norm() < options.step_tol * (1.0 + theta.norm());
                break;
            }
            damping *= growth;
            growth *= 2.0;
        }
        if (!stepped) {
            // No damped step reduces the cost: a (local) minimum for this scheme.
            fit.converged = accepted_any;
            break;
        }
        accepted_any = true;
        ++fit.iterations;
        if (done) {
            fit.converged = true;
            break;
        }
    }
    if (cost <= tiny_cost) fit.converged = true;

    if (!accepted_any && fit.initial_cost > tiny_cost)
        throw FitError("fit_gauss2: no step reduced the initial cost");

    fit.params = to_params(theta);
    fit.final_cost = cost;
    fit.rms = std::sqrt(2.0 * cost / static_cast<double>(xs.size()));
    return fit;
}

}  // namespace c2b
