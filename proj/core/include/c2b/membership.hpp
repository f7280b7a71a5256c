#pragma once

#include <string>
#include <variant>
#include <vector>

namespace c2b {

/// Piecewise-linear trapezoid with feet at `a`, `d` and plateau on [b, c].
/// Shoulders are expressed with a == b (left) or c == d (right).
struct Trapezoid {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

/// Sum of two Gaussian bumps:
///   alpha1 * exp(-(x - beta1)^2 / gamma1^2) + alpha2 * exp(-(x - beta2)^2 / gamma2^2)
/// Degrees are clamped to [0, 1] on evaluation.
struct Gauss2 {
    double alpha1 = 0.0;
    double beta1 = 0.0;
    double gamma1 = 1.0;
    double alpha2 = 0.0;
    double beta2 = 0.0;
    double gamma2 = 1.0;

    friend bool operator==(const Gauss2&, const Gauss2&) = default;
};

/// Crisp set over discrete codes: degree 1 on any listed level, 0 elsewhere.
struct CrispLabel {
    std::vector<int> levels;  // sorted, unique

    friend bool operator==(const CrispLabel&, const CrispLabel&) = default;
};

using MembershipFunction = std::variant<Trapezoid, Gauss2, CrispLabel>;

/// Unclamped two-term Gaussian formula.
double gauss2_raw(const Gauss2& g, double x) noexcept;

/// Degree of membership of `x`, always in [0, 1].
double degree(const MembershipFunction& mf, double x) noexcept;

/// Returns an empty string when `mf` is well formed, otherwise a reason.
std::string check(const MembershipFunction& mf);

/// "trapezoid", "gauss2" or "crisp".
const char* type_name(const MembershipFunction& mf) noexcept;

}  // namespace c2b
