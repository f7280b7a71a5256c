#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "c2b/membership.hpp"
#include "c2b/variable.hpp"

namespace c2b::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

    Trapezoid trapezoid(Domain d) {
        std::array<double, 4> p{};
        for (double& v : p) v = uniform(d.lo, d.hi);
        std::sort(p.begin(), p.end());
        // Shoulders and degenerate edges show up in practice.
        if (integer(0, 4) == 0) p[0] = p[1];
        if (integer(0, 4) == 0) p[3] = p[2];
        return {p[0], p[1], p[2], p[3]};
    }

    Gauss2 gauss2(Domain d) {
        return {uniform(-0.5, 1.5), uniform(d.lo, d.hi), uniform(0.01, 1.0) * d.span(),
                uniform(-0.5, 1.5), uniform(d.lo, d.hi), uniform(0.01, 1.0) * d.span()};
    }

    CrispLabel crisp(int max_code) {
        CrispLabel l;
        for (int c = 0; c <= max_code; ++c)
            if (integer(0, 2) == 0) l.levels.push_back(c);
        if (l.levels.empty()) l.levels.push_back(integer(0, max_code));
        return l;
    }

    MembershipFunction any_mf(Domain d) {
        switch (integer(0, 2)) {
            case 0: return trapezoid(d);
            case 1: return gauss2(d);
            default: return crisp(static_cast<int>(d.hi));
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace c2b::testing
