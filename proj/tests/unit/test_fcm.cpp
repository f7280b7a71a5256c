#include <doctest.h>

#include <cmath>
#include <numeric>

#include "c2b/error.hpp"
#include "c2b/fixtures.hpp"
#include "generators.hpp"

using namespace c2b;

namespace {

// Textbook alternating optimization, independent of the library code.
std::vector<double> oracle_fcm(const std::vector<double>& x, std::vector<double> v, double m, double tol,
                               int max_iter) {
    const std::size_t k = v.size();
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> num(k, 0.0);
        std::vector<double> den(k, 0.0);
        for (double xi : x) {
            std::vector<double> u(k, 0.0);
            std::size_t hit = k;
            for (std::size_t j = 0; j < k; ++j)
                if (xi == v[j]) hit = j;
            if (hit < k) {
                u[hit] = 1.0;
            } else {
                for (std::size_t j = 0; j < k; ++j) {
                    double s = 0.0;
                    for (std::size_t l = 0; l < k; ++l) s += std::pow(std::abs(xi - v[j]) / std::abs(xi - v[l]), 2.0 / (m - 1.0));
                    u[j] = 1.0 / s;
                }
            }
            for (std::size_t j = 0; j < k; ++j) {
                num[j] += std::pow(u[j], m) * xi;
                den[j] += std::pow(u[j], m);
            }
        }
        double shift = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double next = num[j] / den[j];
            shift = std::max(shift, std::abs(next - v[j]));
            v[j] = next;
        }
        if (shift < tol) break;
    }
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("one cluster sits at the mean") {
    const std::vector<double> x{1, 2, 3, 10};
    const std::vector<double> init{7.0};
    const auto model = fcm(x, init);
    CHECK(model.centers[0] == doctest::Approx(4.0));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(model.membership(i, 0) == 1.0);
    CHECK(model.converged);
}

TEST_CASE("a point on a center belongs to it fully") {
    const std::vector<double> x{0, 0, 0, 10, 10, 10};
    const std::vector<double> init{0.0, 10.0};
    const auto model = fcm(x, init);
    CHECK(model.centers == std::vector<double>{0.0, 10.0});
    CHECK(model.membership(0, 0) == 1.0);
    CHECK(model.membership(0, 1) == 0.0);
    CHECK(model.membership(5, 1) == 1.0);
}

TEST_CASE("individualism partition matches an independent implementation") {
    const auto data = fixtures::hofstede_training_set();
    const auto seeds = subtractive_clusters(data.values);
    const auto model = fcm(data.values, seeds);
    CHECK(model.converged);
    const auto oracle = oracle_fcm(data.values, seeds, 2.0, 1e-6, 500);
    REQUIRE(model.centers.size() == oracle.size());
    for (std::size_t j = 0; j < oracle.size(); ++j) CHECK(std::abs(model.centers[j] - oracle[j]) < 1e-6);
}

TEST_CASE("seeding with k clusters") {
    const auto data = fixtures::hofstede_training_set();
    CHECK(fcm(data.values, 2).centers.size() == 2);
    CHECK(fcm(data.values, 3).centers.size() == 3);
    CHECK_THROWS_AS(fcm(data.values, 111), DatasetError);
    CHECK_THROWS_AS(fcm(data.values, 0), std::invalid_argument);
    const std::vector<double> init{1.0, 2.0};
    CHECK_THROWS_AS(fcm(data.values, init, {.fuzzifier = 1.0}), std::invalid_argument);
}

TEST_CASE("property: FCM invariants on random data") {
    testing::Gen gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(static_cast<std::size_t>(gen.integer(3, 80)));
        for (double& v : x) v = gen.uniform(0, 100);
        const std::size_t k = static_cast<std::size_t>(gen.integer(1, std::min<int>(4, static_cast<int>(x.size()))));
        std::vector<double> init(k);
        for (double& v : init) v = gen.uniform(0, 100);

        const auto model = fcm(x, init);
        for (std::size_t i = 0; i < x.size(); ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                REQUIRE(model.membership(i, j) >= 0.0);
                row += model.membership(i, j);
            }
            REQUIRE(std::abs(row - 1.0) < 1e-12);
        }
        REQUIRE(std::is_sorted(model.centers.begin(), model.centers.end()));
        for (std::size_t t = 1; t < model.objective.size(); ++t)
            REQUIRE(model.objective[t] <= model.objective[t - 1] * (1.0 + 1e-12));

        const auto oracle = oracle_fcm(x, init, 2.0, 1e-6, 500);
        if (model.converged)
            for (std::size_t j = 0; j < k; ++j) REQUIRE(std::abs(model.centers[j] - oracle[j]) < 1e-6);

        // Memberships are unchanged by an affine change of units.
        const double a = gen.uniform(0.5, 3);
        const double b = gen.uniform(-20, 20);
        std::vector<double> xs(x.size());
        std::vector<double> is(k);
        std::transform(x.begin(), x.end(), xs.begin(), [&](double v) { return a * v + b; });
        std::transform(init.begin(), init.end(), is.begin(), [&](double v) { return a * v + b; });
        const auto scaled = fcm(xs, is);
        if (model.converged && scaled.converged)
            for (std::size_t i = 0; i < model.memberships.size(); ++i)
                REQUIRE(std::abs(scaled.memberships[i] - model.memberships[i]) < 1e-4);
    }
}
