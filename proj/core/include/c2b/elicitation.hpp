#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "c2b/membership.hpp"
#include "c2b/variable.hpp"

namespace c2b {

/// 1-D measurements of one variable, optionally labelled (e.g. by country).
struct TrainingSet {
    std::vector<double> values;
    std::vector<std::string> labels;  // empty, or one per value
    Domain domain;

    /// Throws DatasetError for label/value size mismatch or out-of-domain values.
    void validate() const;
};

/// Hyperparameters of Chiu's subtractive clustering. `radius` is the cluster
/// radius as a fraction of the (normalized) data range.
struct SubtractiveOptions {
    double radius = 0.5;
    double squash = 1.25;
    double accept_ratio = 0.5;
    double reject_ratio = 0.15;
};

/// Estimates cluster centers (and thereby their number) with subtractive
/// clustering on data min-max normalized to [0, 1]. Returns centers sorted
/// ascending in data units.
///
/// Throws DatasetError for fewer than two values, std::invalid_argument for
/// out-of-range options.
std::vector<double> subtractive_clusters(std::span<const double> values,
                                         const SubtractiveOptions& options = {});

struct FcmOptions {
    double fuzzifier = 2.0;  // m > 1
    double tol = 1e-6;       // max center shift
    int max_iter = 500;
};

/// Fuzzy partition of I points into k clusters.
struct ClusterModel {
    std::vector<double> centers;      // ascending
    std::vector<double> memberships;  // I x k, row-major, columns follow centers
    std::vector<double> objective;    // objective after every iteration
    int iterations = 0;
    bool converged = false;

    std::size_t clusters() const noexcept { return centers.size(); }
    std::size_t points() const noexcept;
    double membership(std::size_t point, std::size_t cluster) const noexcept;
    std::vector<double> column(std::size_t cluster) const;
};

/// Fuzzy c-means from the given initial centers (k = initial_centers.size()).
/// A point coinciding with a center belongs to it with degree 1.
/// Non-convergence is reported through `converged`, not an exception.
ClusterModel fcm(std::span<const double> values, std::span<const double> initial_centers,
                 const FcmOptions& options = {});

/// Fuzzy c-means with k clusters seeded deterministically: from the
/// subtractive centers when their count is k, otherwise from k evenly spaced
/// order statistics.
ClusterModel fcm(std::span<const double> values, std::size_t k,
                 const FcmOptions& options = {});

/// FCM objective sum_i sum_j mu_ij^m (x_i - v_j)^2.
double fcm_objective(std::span<const double> values, const ClusterModel& model, double fuzzifier);

struct FitOptions {
    int max_iter = 500;
    double rel_cost_tol = 1e-9;
    double step_tol = 1e-10;
};

struct Gauss2Fit {
    Gauss2 params;
    double rms = 0.0;
    double initial_cost = 0.0;  // 0.5 * sum r^2 at the initial guess
    double final_cost = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Least-squares fit of the two-term Gaussian to (xs, mus) with a
/// Levenberg-Marquardt iteration; gammas are kept positive.
/// Needs at least six points. Throws FitError if no step reduces the cost.
Gauss2Fit fit_gauss2(std::span<const double> xs, std::span<const double> mus,
                     const Gauss2& init, const FitOptions& options = {});

struct ElicitationConfig {
    SubtractiveOptions subtractive;
    FcmOptions fcm;
    FitOptions fit;
    double max_fit_rms = 0.15;
    double coverage_threshold = 0.2;
    VariableKind kind = VariableKind::interval;
};

struct ElicitationResult {
    LinguisticVariable variable;
    std::vector<double> subtractive_centers;
    ClusterModel clusters;
    std::vector<Gauss2Fit> fits;  // one per term
    CoverageReport coverage;      // over the data's convex hull
};

/// Subtractive clustering -> fuzzy c-means -> one Gauss2 fit per cluster.
/// Terms are named LC1..LCk in ascending center order.
/// Throws FitError when a fit's RMS exceeds `max_fit_rms`.
ElicitationResult elicit_variable(std::string name, const TrainingSet& data,
                                  const ElicitationConfig& config = {});

}  // namespace c2b
