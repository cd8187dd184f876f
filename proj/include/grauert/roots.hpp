#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grauert/errors.hpp"

namespace grauert::roots {

/// `count` points spaced evenly in log10 between lo and hi (inclusive).
inline std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> grid;
    if (count <= 0) return grid;
    grid.reserve(static_cast<std::size_t>(count));
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < count; ++i) {
        const double e = count == 1 ? a : a + (b - a) * i / (count - 1);
        grid.push_back(std::pow(10.0, e));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

/// Bisection on a bracket with f(lo), f(hi) of opposite sign; stops when the
/// bracket is narrower than tol.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw SearchError("bisection: no sign change in bracket");
    for (int it = 0; it < 400 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Adjacent grid pairs where the sampled sign of f changes.
template <class F>
std::vector<std::pair<double, double>> sign_changes(F&& f, std::span<const double> grid) {
    std::vector<std::pair<double, double>> out;
    if (grid.empty()) return out;
    double prev = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = f(grid[i]);
        if ((prev > 0.0) != (cur > 0.0)) out.emplace_back(grid[i - 1], grid[i]);
        prev = cur;
    }
    return out;
}

}  // namespace grauert::roots
