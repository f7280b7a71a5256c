#include "c2b/surface.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <stdexcept>
#include <thread>

namespace c2b {

namespace {

double parse_double(std::string_view s, std::string_view what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("axis " + std::string(what) + " '" + std::string(s) + "' is not a number");
    return v;
}

}  // namespace

double AxisSpec::at(std::size_t i) const noexcept {
    if (steps <= 1 || i == 0) return lo;
    if (i + 1 == steps) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

AxisSpec parse_axis(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw std::invalid_argument("axis must look like var=lo:hi:steps, got '" + std::string(text) + "'");
    AxisSpec axis;
    axis.variable = std::string(text.substr(0, eq));
    std::string_view rest = text.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw std::invalid_argument("axis must look like var=lo:hi:steps, got '" + std::string(text) + "'");
    axis.lo = parse_double(rest.substr(0, c1), "lower bound");
    axis.hi = parse_double(rest.substr(c1 + 1, c2 - c1 - 1), "upper bound");
    const std::string_view steps = rest.substr(c2 + 1);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), n);
    if (steps.empty() || ec != std::errc() || ptr != steps.data() + steps.size() || n == 0)
        throw std::invalid_argument("axis steps must be a positive integer, got '" + std::string(steps) + "'");
    if (axis.hi < axis.lo) throw std::invalid_argument("axis upper bound is below lower bound");
    axis.steps = n;
    return axis;
}

double SurfaceGrid::at(std::size_t i, std::size_t j) const noexcept {
    const std::size_t cols = axes.size() == 2 ? axes[1].steps : 1;
    return values[i * cols + j];
}

SurfaceGrid compute_surface(const FuzzyInferenceSystem& fis, std::vector<AxisSpec> axes,
                            std::string_view output, const Profile& fixed, unsigned threads) {
    if (axes.empty() || axes.size() > 2) throw std::invalid_argument("surface needs one or two axes");
    if (axes.size() == 2 && axes[0].variable == axes[1].variable)
        throw std::invalid_argument("surface axes must name different variables");

    SurfaceGrid grid{std::move(axes), std::string(output), {}};
    const std::size_t rows = grid.axes[0].steps;
    const std::size_t cols = grid.axes.size() == 2 ? grid.axes[1].steps : 1;
    grid.values.assign(rows * cols, 0.0);

    auto cell = [&](std::size_t idx) {
        Profile p = fixed;
        p.insert_or_assign(grid.axes[0].variable, grid.axes[0].at(idx / cols));
        if (grid.axes.size() == 2) p.insert_or_assign(grid.axes[1].variable, grid.axes[1].at(idx % cols));
        grid.values[idx] = fis.evaluate(p, output);
    };

    // Probe one cell on the calling thread so bad profiles throw here.
    cell(0);
    const std::size_t total = grid.values.size();
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::size_t i = 1; i < total; ++i) cell(i);
        return grid;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = 1 + w; i < total; i += workers) cell(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return grid;
}

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string to_csv(const SurfaceGrid& grid) {
    std::string out;
    const AxisSpec& a = grid.axes.at(0);
    if (grid.axes.size() == 1) {
        out += a.variable + "," + grid.output + "\n";
        for (std::size_t i = 0; i < a.steps; ++i)
            out += format_number(a.at(i)) + "," + format_number(grid.at(i)) + "\n";
        return out;
    }
    const AxisSpec& b = grid.axes[1];
    out += a.variable + "\\" + b.variable;
    for (std::size_t j = 0; j < b.steps; ++j) out += "," + format_number(b.at(j));
    out += "\n";
    for (std::size_t i = 0; i < a.steps; ++i) {
        out += format_number(a.at(i));
        for (std::size_t j = 0; j < b.steps; ++j) out += "," + format_number(grid.at(i, j));
        out += "\n";
    }
    return out;
}

}  // namespace c2b
