#pragma once

#include <functional>

namespace grauert::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;     // estimated absolute error
    int evaluations = 0;
    int intervals = 0;
};

struct Options {
    double abs_tol = 1e-10;
    int max_intervals = 4000;
};

// Globally adaptive 21-point Gauss-Kronrod quadrature on a finite [a, b].
//
// Subdivides the interval with the largest error estimate until the summed
// estimate drops below max(abs_tol, 50 * eps * |integral|); the relative
// floor is the roundoff limit of the rule itself. Throws NumericError with
// the achieved estimate when the interval budget runs out.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

}  // namespace grauert::quad
