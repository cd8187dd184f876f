#pragma once

// Test-only reference computations. Nothing here calls into the library's
// quadrature or profile code.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

/// u(t) = (t-1)/(t log t) in long double; not usable exactly at t = 1.
inline double u_long(double t) {
    const long double tl = t;
    return static_cast<double>((tl - 1.0L) / (tl * std::log(tl)));
}

/// v(t) = int_0^t tau u^2 dtau via tau = e^{-x} on (0, min(t,1)] (exp-sinh on a
/// half-line) plus direct tanh-sinh in tau on [1, t].
inline double v(double t) {
    using namespace boost::math::quadrature;
    const double x0 = t < 1.0 ? -std::log(t) : 0.0;
    auto fx = [](double x) {
        if (std::abs(x) < 1e-6) return 1.0 - x + 7.0 * x * x / 12.0;
        const double e = -std::expm1(-x);
        return e * e / (x * x);
    };
    exp_sinh<double> es;
    double total = es.integrate([&](double y) { return fx(x0 + y); }, 1e-14);
    if (t > 1.0) {
        auto ftau = [](double tau) {
            if (std::abs(tau - 1.0) < 1e-6) return 1.0 + (tau - 1.0) * (tau - 1.0) / 12.0;
            const double l = std::log(tau);
            return (tau - 1.0) * (tau - 1.0) / (tau * l * l);
        };
        tanh_sinh<double> ts;
        total += ts.integrate(ftau, 1.0, t, 1e-14);
    }
    return total;
}

/// Central difference of f at x with step h.
template <class F>
double central(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Second central difference.
template <class F>
double central2(F&& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

/// d/dT = (d/dx - i d/dy)/2 of a real function of complex T at 0, fourth order.
inline std::complex<double> wirtinger4(const std::function<double(std::complex<double>)>& f, double h) {
    auto dx = [&](double s) { return (f({s, 0.0}) - f({-s, 0.0})) / (2.0 * s); };
    auto dy = [&](double s) { return (f({0.0, s}) - f({0.0, -s})) / (2.0 * s); };
    const double gx = (4.0 * dx(h / 2) - dx(h)) / 3.0;
    const double gy = (4.0 * dy(h / 2) - dy(h)) / 3.0;
    return {gx / 2.0, -gy / 2.0};
}

inline double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace oracle
