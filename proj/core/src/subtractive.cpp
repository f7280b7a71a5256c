#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "c2b/elicitation.hpp"
#include "c2b/error.hpp"

namespace c2b {

namespace {

// Index of the largest potential; ties go to the smallest coordinate so the
// outcome does not depend on input order.
std::size_t argmax_potential(const std::vector<double>& potential, const std::vector<double>& z) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < potential.size(); ++i) {
        if (potential[i] > potential[best] ||
            (potential[i] == potential[best] && z[i] < z[best]))
            best = i;
    }
    return best;
}

}  // namespace

std::vector<double> subtractive_clusters(std::span<const double> values,
                                         const SubtractiveOptions& options) {
    if (values.size() < 2) throw DatasetError("dataset too small: subtractive clustering needs at least 2 points");
    if (!(options.radius > 0.0 && options.radius <= 1.0))
        throw std::invalid_argument("subtractive clustering radius must be in (0, 1]");
    if (!(options.squash > 0.0)) throw std::invalid_argument("squash factor must be positive");
    if (!(options.reject_ratio >= 0.0 && options.reject_ratio <= options.accept_ratio &&
          options.accept_ratio <= 1.0))
        throw std::invalid_argument("need 0 <= reject ratio <= accept ratio <= 1");

    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double range = *hi_it - lo;
    if (range == 0.0) return {lo};

    const std::size_t n = values.size();
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = (values[i] - lo) / range;

    const double ra = options.radius;
    const double rb = options.squash * ra;
    const double alpha = 4.0 / (ra * ra);
    const double beta = 4.0 / (rb * rb);

    std::vector<double> potential(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double d = z[i] - z[j];
            potential[i] += std::exp(-alpha * d * d);
        }

    std::vector<double> centers;
    auto accept = [&](std::size_t k) {
        const double pk = potential[k];
        const double zk = z[k];
        centers.push_back(zk);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = z[i] - zk;
            potential[i] -= pk * std::exp(-beta * d * d);
        }
    };

    std::size_t k = argmax_potential(potential, z);
    const double first = potential[k];
    accept(k);

    while (centers.size() < n) {
        k = argmax_potential(potential, z);
        const double pk = potential[k];
        if (pk > options.accept_ratio * first) {
            accept(k);
        } else if (pk < options.reject_ratio * first) {
            break;
        } else {
            double dmin = std::numeric_limits<double>::infinity();
            for (double c : centers) dmin = std::min(dmin, std::abs(z[k] - c));
            if (dmin / ra + pk / first >= 1.0) {
                accept(k);
            } else {
                potential[k] = 0.0;
            }
        }
    }

    std::sort(centers.begin(), centers.end());
    for (double& c : centers) c = lo + c * range;
    return centers;
}

}  // namespace c2b
