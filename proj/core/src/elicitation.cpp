#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "c2b/elicitation.hpp"
#include "c2b/error.hpp"

namespace c2b {

namespace {

// Initial bump centers are v -/+ offset * spread for each offset.
constexpr double fit_start_offsets[] = {0.0, 0.25, 0.5, 1.0};

}  // namespace

void TrainingSet::validate() const {
    if (!(domain.lo < domain.hi)) throw DatasetError("training domain must satisfy lo < hi");
    if (!labels.empty() && labels.size() != values.size())
        throw DatasetError("training set has " + std::to_string(labels.size()) + " labels for " +
                           std::to_string(values.size()) + " values");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || !domain.contains(values[i])) {
            std::ostringstream os;
            os << "value " << values[i] << " at index " << i << " is outside [" << domain.lo << ", "
               << domain.hi << "]";
            throw DatasetError(os.str());
        }
    }
}

ElicitationResult elicit_variable(std::string name, const TrainingSet& data,
                                  const ElicitationConfig& config) {
    data.validate();
    if (data.values.size() < 2) throw DatasetError("dataset too small: need at least 2 values");

    const std::span<const double> x(data.values);
    std::vector<double> seeds = subtractive_clusters(x, config.subtractive);
    ClusterModel model = fcm(x, seeds, config.fcm);

    const double m = config.fcm.fuzzifier;
    const double min_spread = 1e-3 * data.domain.span();
    std::vector<Gauss2Fit> fits;
    std::vector<Term> terms;
    for (std::size_t j = 0; j < model.clusters(); ++j) {
        const std::vector<double> mus = model.column(j);
        const double v = model.centers[j];
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double w = std::pow(mus[i], m);
            num += w * (x[i] - v) * (x[i] - v);
            den += w;
        }
        const double spread = std::max(den > 0.0 ? std::sqrt(num / den) : 0.0, min_spread);

        // The symmetric start keeps both bumps identical forever (equal Jacobian
        // columns), so also start from split centers and keep the cheapest fit.
        std::optional<Gauss2Fit> best;
        for (double offset : fit_start_offsets) {
            const Gauss2 init{0.5, v - offset * spread, spread, 0.5, v + offset * spread, spread};
            Gauss2Fit fit = fit_gauss2(x, mus, init, config.fit);
            if (!best || fit.final_cost < best->final_cost) best = fit;
        }
        Gauss2Fit fit = *best;
        const std::string term = "LC" + std::to_string(j + 1);
        if (fit.rms > config.max_fit_rms) {
            std::ostringstream os;
            os << "fit of term " << term << " has RMS residual " << fit.rms << " above the ceiling "
               << config.max_fit_rms;
            throw FitError(os.str());
        }
        terms.push_back({term, fit.params});
        fits.push_back(fit);
    }

    LinguisticVariable var(std::move(name), config.kind, data.domain, std::move(terms));
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    CoverageReport cov = coverage(var, Domain{*lo, *hi}, config.coverage_threshold);
    return {std::move(var), std::move(seeds), std::move(model), std::move(fits), cov};
}

}  // namespace c2b
