#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "c2b/elicitation.hpp"
#include "c2b/error.hpp"

namespace c2b {

namespace {

// Row-major I x k membership matrix for fixed centers.
std::vector<double> update_memberships(std::span<const double> x, const std::vector<double>& v,
                                       double m) {
    const std::size_t k = v.size();
    const double p = 2.0 / (m - 1.0);
    std::vector<double> u(x.size() * k, 0.0);
    std::vector<double> d(k);
    for (std::size_t i = 0; i < x.size(); ++i) {
        double* row = &u[i * k];
        for (std::size_t j = 0; j < k; ++j) d[j] = std::abs(x[i] - v[j]);
        const auto nearest = std::min_element(d.begin(), d.end());
        if (*nearest == 0.0) {
            row[nearest - d.begin()] = 1.0;
            continue;
        }
        // mu_ij = 1 / sum_l (d_ij / d_il)^p, scaled by the nearest distance for range safety
        double total = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = std::pow(*nearest / d[j], p);
            total += row[j];
        }
        for (std::size_t j = 0; j < k; ++j) row[j] /= total;
    }
    return u;
}

std::vector<double> update_centers(std::span<const double> x, const std::vector<double>& u,
                                   const std::vector<double>& previous, double m) {
    const std::size_t k = previous.size();
    std::vector<double> num(k, 0.0);
    std::vector<double> den(k, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const double w = std::pow(u[i * k + j], m);
            num[j] += w * x[i];
            den[j] += w;
        }
    std::vector<double> v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = den[j] > 0.0 ? num[j] / den[j] : previous[j];
    return v;
}

double objective(std::span<const double> x, const std::vector<double>& u,
                 const std::vector<double>& v, double m) {
    const std::size_t k = v.size();
    double j_total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const double d = x[i] - v[j];
            j_total += std::pow(u[i * k + j], m) * d * d;
        }
    return j_total;
}

}  // namespace

std::size_t ClusterModel::points() const noexcept {
    return centers.empty() ? 0 : memberships.size() / centers.size();
}

double ClusterModel::membership(std::size_t point, std::size_t cluster) const noexcept {
    return memberships[point * centers.size() + cluster];
}

std::vector<double> ClusterModel::column(std::size_t cluster) const {
    std::vector<double> col(points());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = membership(i, cluster);
    return col;
}

double fcm_objective(std::span<const double> values, const ClusterModel& model, double fuzzifier) {
    return objective(values, model.memberships, model.centers, fuzzifier);
}

ClusterModel fcm(std::span<const double> values, std::span<const double> initial_centers,
                 const FcmOptions& options) {
    const std::size_t k = initial_centers.size();
    if (values.empty()) throw DatasetError("fuzzy c-means needs at least one point");
    if (k == 0) throw std::invalid_argument("fuzzy c-means needs at least one cluster");
    if (k > values.size())
        throw DatasetError("cannot form " + std::to_string(k) + " clusters from " +
                           std::to_string(values.size()) + " points");
    if (!(options.fuzzifier > 1.0)) throw std::invalid_argument("fuzzifier m must exceed 1");
    if (options.max_iter < 1) throw std::invalid_argument("max_iter must be positive");

    const double m = options.fuzzifier;
    ClusterModel model;
    std::vector<double> v(initial_centers.begin(), initial_centers.end());

    for (int it = 1; it <= options.max_iter; ++it) {
        const std::vector<double> u = update_memberships(values, v, m);
        std::vector<double> next = update_centers(values, u, v, m);
        model.objective.push_back(objective(values, u, next, m));
        double shift = 0.0;
        for (std::size_t j = 0; j < k; ++j) shift = std::max(shift, std::abs(next[j] - v[j]));
        v = std::move(next);
        model.iterations = it;
        if (shift < options.tol) {
            model.converged = true;
            break;
        }
    }

    // Order clusters by center so that term LC1 is the lowest.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> sorted(k);
    for (std::size_t j = 0; j < k; ++j) sorted[j] = v[order[j]];

    model.centers = std::move(sorted);
    model.memberships = update_memberships(values, model.centers, m);
    return model;
}

ClusterModel fcm(std::span<const double> values, std::size_t k, const FcmOptions& options) {
    if (k == 0) throw std::invalid_argument("fuzzy c-means needs at least one cluster");
    if (k > values.size())
        throw DatasetError("cannot form " + std::to_string(k) + " clusters from " +
                           std::to_string(values.size()) + " points");

    std::vector<double> seeds;
    if (values.size() >= 2) seeds = subtractive_clusters(values);
    if (seeds.size() != k) {
        std::vector<double> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        seeds.clear();
        const double n = static_cast<double>(sorted.size());
        for (std::size_t j = 0; j < k; ++j) {
            const auto idx = static_cast<std::size_t>((static_cast<double>(j) + 0.5) * n / static_cast<double>(k));
            seeds.push_back(sorted[std::min(idx, sorted.size() - 1)]);
        }
    }
    return fcm(values, seeds, options);
}

}  // namespace c2b
