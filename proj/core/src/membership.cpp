#include "c2b/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace c2b {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double trapezoid_degree(const Trapezoid& t, double x) noexcept {
    if (x < t.a || x > t.d) return 0.0;
    if (x >= t.b && x <= t.c) return 1.0;
    if (x < t.b) return (x - t.a) / (t.b - t.a);
    return (t.d - x) / (t.d - t.c);
}

double crisp_degree(const CrispLabel& l, double x) noexcept {
    const double r = std::round(x);
    if (r != x) return 0.0;
    return std::binary_search(l.levels.begin(), l.levels.end(), static_cast<int>(r)) ? 1.0 : 0.0;
}

}  // namespace

double gauss2_raw(const Gauss2& g, double x) noexcept {
    const double z1 = (x - g.beta1) / g.gamma1;
    const double z2 = (x - g.beta2) / g.gamma2;
    return g.alpha1 * std::exp(-z1 * z1) + g.alpha2 * std::exp(-z2 * z2);
}

double degree(const MembershipFunction& mf, double x) noexcept {
    const double mu = std::visit(overloaded{
                                     [x](const Trapezoid& t) { return trapezoid_degree(t, x); },
                                     [x](const Gauss2& g) { return gauss2_raw(g, x); },
                                     [x](const CrispLabel& l) { return crisp_degree(l, x); },
                                 },
                                 mf);
    if (!(mu > 0.0)) return 0.0;  // also maps NaN to 0
    return std::min(mu, 1.0);
}

std::string check(const MembershipFunction& mf) {
    return std::visit(
        overloaded{
            [](const Trapezoid& t) -> std::string {
                if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c) ||
                    !std::isfinite(t.d))
                    return "trapezoid breakpoints must be finite";
                if (!(t.a <= t.b)) return "trapezoid requires a <= b";
                if (!(t.b <= t.c)) return "trapezoid requires b <= c";
                if (!(t.c <= t.d)) return "trapezoid requires c <= d";
                return {};
            },
            [](const Gauss2& g) -> std::string {
                for (double v : {g.alpha1, g.beta1, g.gamma1, g.alpha2, g.beta2, g.gamma2})
                    if (!std::isfinite(v)) return "gauss2 parameters must be finite";
                if (!(g.gamma1 > 0.0)) return "gauss2 requires gamma1 > 0";
                if (!(g.gamma2 > 0.0)) return "gauss2 requires gamma2 > 0";
                return {};
            },
            [](const CrispLabel& l) -> std::string {
                if (l.levels.empty()) return "crisp label needs at least one level";
                if (!std::is_sorted(l.levels.begin(), l.levels.end()) ||
                    std::adjacent_find(l.levels.begin(), l.levels.end()) != l.levels.end())
                    return "crisp label levels must be sorted and unique";
                return {};
            },
        },
        mf);
}

const char* type_name(const MembershipFunction& mf) noexcept {
    switch (mf.index()) {
        case 0: return "trapezoid";
        case 1: return "gauss2";
        default: return "crisp";
    }
}

}  // namespace c2b
