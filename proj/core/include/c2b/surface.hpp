#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "c2b/inference.hpp"

namespace c2b {

/// `variable=lo:hi:steps`; sample i sits at lo + i * (hi - lo) / (steps - 1),
/// a single step samples lo only.
struct AxisSpec {
    std::string variable;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t steps = 1;

    double at(std::size_t i) const noexcept;
};

/// Throws std::invalid_argument on malformed text.
AxisSpec parse_axis(std::string_view text);

/// Output of one variable over a 1-D or 2-D input grid, row-major
/// (the first axis varies slowest).
struct SurfaceGrid {
    std::vector<AxisSpec> axes;
    std::string output;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j = 0) const noexcept;
};

/// Evaluates `output` on the grid. Inputs not on an axis are taken from
/// `fixed`. Cells are evaluated in parallel when `threads` > 1.
SurfaceGrid compute_surface(const FuzzyInferenceSystem& fis, std::vector<AxisSpec> axes,
                            std::string_view output, const Profile& fixed = {},
                            unsigned threads = 1);

/// 1-D: two columns `axis,output`. 2-D: header row `a\b,b0,b1,...`, then one
/// row per value of the first axis.
std::string to_csv(const SurfaceGrid& grid);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

}  // namespace c2b
