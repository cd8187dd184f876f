#include "grauert/radial_profiles.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "grauert/errors.hpp"
#include "grauert/quadrature.hpp"
#include "grauert/roots.hpp"

namespace grauert {
namespace {

void require_positive(double t, const char* who) {
    if (!std::isfinite(t) || t <= 0.0) {
        std::ostringstream msg;
        msg << who << ": squared radius must be finite and positive, got " << t;
        throw DomainError(msg.str());
    }
}

// With s = log t, u(t) = phi(s) where phi(s) = (1 - e^{-s}) / s.
// Below this |s| the Taylor series of phi is used; the closed-form
// derivatives cancel badly there.
constexpr double kSeriesRadius = 0.5;
constexpr int kSeriesTerms = 28;

// phi(s) = sum_k (-s)^k / (k+1)!
struct Phi {
    double d0;
    double d1;
    double d2;
};

Phi phi_series(double s) {
    Phi out{0.0, 0.0, 0.0};
    // coef_k = (-1)^k / (k+1)!
    double coef = 1.0;
    std::array<double, kSeriesTerms> c{};
    for (int k = 0; k < kSeriesTerms; ++k) {
        c[k] = coef;
        coef *= -1.0 / (k + 2);
    }
    // Horner from the top term down.
    for (int k = kSeriesTerms - 1; k >= 0; --k) out.d0 = out.d0 * s + c[k];
    for (int k = kSeriesTerms - 1; k >= 1; --k) out.d1 = out.d1 * s + k * c[k];
    for (int k = kSeriesTerms - 1; k >= 2; --k) out.d2 = out.d2 * s + k * (k - 1) * c[k];
    return out;
}

Phi phi_closed(double t, double s) {
    // e^{-s} = 1/t; g = 1 - 1/t, g' = 1/t, g'' = -1/t
    const double inv_t = 1.0 / t;
    const double g = 1.0 - inv_t;
    return {g / s,
            inv_t / s - g / (s * s),
            -inv_t / s - 2.0 * inv_t / (s * s) + 2.0 * g / (s * s * s)};
}

// Integrand of v in the variable s = log tau: (tau u(tau))^2 = (expm1(s)/s)^2.
double log_integrand(double s) {
    if (s == 0.0) return 1.0;
    const double q = std::expm1(s) / s;
    return q * q;
}

// int_{-inf}^{-1/y_max} (expm1(s)/s)^2 ds, after s = -1/y.
double left_tail(double y_max, double tol) {
    auto f = [](double y) {
        const double e = -std::expm1(-1.0 / y);
        return e * e;
    };
    return quad::integrate(f, 0.0, y_max, {tol}).value;
}

}  // namespace

UValues eval_u(double t, int order) {
    require_positive(t, "eval_u");
    if (order < 0 || order > 2) throw DomainError("eval_u: derivative order must be 0, 1 or 2");
    const double s = std::log(t);
    const Phi p = std::abs(s) < kSeriesRadius ? phi_series(s) : phi_closed(t, s);
    UValues out;
    out.u = p.d0;
    // d/dt = (1/t) d/ds
    if (order >= 1) out.du = p.d1 / t;
    if (order >= 2) out.d2u = (p.d2 - p.d1) / (t * t);
    return out;
}

double eval_v(double t, const ProfileOptions& opts) {
    require_positive(t, "eval_v");
    const double L = std::log(t);
    const double tol = opts.abs_tol;
    if (L <= -1.0) return left_tail(-1.0 / L, tol);
    return left_tail(1.0, 0.5 * tol) + quad::integrate(log_integrand, -1.0, L, {0.5 * tol}).value;
}

UDerivs U_derivs_from(double t, const UValues& uv, double v) {
    const double u = uv.u;
    const double du = uv.du;
    const double d2u = uv.d2u;
    const double t2 = t * t;
    UDerivs d;
    d.d1 = v / t;
    d.d2 = u * u - v / t2;
    d.d3 = 2.0 * u * du - u * u / t + 2.0 * v / (t2 * t);
    d.d4 = 2.0 * du * du + 2.0 * u * d2u - 2.0 * u * du / t + 3.0 * u * u / t2 -
           6.0 * v / (t2 * t2);
    return d;
}

UDerivs eval_U_derivs(double t, const ProfileOptions& opts) {
    return U_derivs_from(t, eval_u(t, 2), eval_v(t, opts));
}

double eval_eta(double t, const ProfileOptions& opts) {
    const double u = eval_u(t, 0).u;
    return t * t * u * u - eval_v(t, opts);
}

ProfileValues eval_profile(double t, const ProfileOptions& opts) {
    const UValues uv = eval_u(t, 2);
    const double v = eval_v(t, opts);
    const UDerivs d = U_derivs_from(t, uv, v);
    ProfileValues p;
    p.t = t;
    p.u = uv.u;
    p.du = uv.du;
    p.d2u = uv.d2u;
    p.v = v;
    p.dU = d.d1;
    p.d2U = d.d2;
    p.d3U = d.d3;
    p.d4U = d.d4;
    p.eta = t * t * uv.u * uv.u - v;
    return p;
}

EtaThreshold find_eta_threshold(const ProfileOptions& opts) {
    constexpr double lo = 1e-6;
    constexpr double hi = 1e6;
    auto eta = [&](double t) { return eval_eta(t, opts); };

    const auto grid = roots::log_grid(lo, hi, 241);
    std::size_t i = grid.size() - 1;
    if (eta(grid[i]) <= 0.0) throw SearchError("eta is not positive at the top of the search range");
    while (i > 0 && eta(grid[i - 1]) > 0.0) --i;
    if (i == 0) throw SearchError("eta has no sign change in (1e-6, 1e6)");

    EtaThreshold out;
    out.t_r = roots::bisect(eta, grid[i - 1], grid[i], 1e-8);
    out.eta_at_root = eta(out.t_r);

    const auto audit = roots::log_grid(out.t_r, hi, 257);
    for (std::size_t k = 1; k < audit.size(); ++k) {
        if (eta(audit[k]) <= 0.0) {
            std::ostringstream msg;
            msg << "eta is not positive at t = " << audit[k] << " above the threshold " << out.t_r;
            throw SearchError(msg.str());
        }
        ++out.grid_points_checked;
    }
    return out;
}

double eval_potential(double t, const ProfileOptions& opts) {
    require_positive(t, "eval_potential");
    // With s = log tau: int_0^L v(e^s) ds = L v(t) - int_0^L s (expm1(s)/s)^2 ds
    const double L = std::log(t);
    if (L == 0.0) return 0.0;
    auto f = [](double s) { return s * log_integrand(s); };
    const double moment = quad::integrate(f, 0.0, L, {0.5 * opts.abs_tol}).value;
    return L * eval_v(t, {0.5 * opts.abs_tol}) - moment;
}

}  // namespace grauert
