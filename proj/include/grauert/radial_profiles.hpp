#pragma once

// Scalar functions behind the Grauert potential on the punctured space.
//
//   u(t) = (t - 1) / (t log t)          positive on (0, inf), u(1) = 1
//   v(t) = int_0^t tau u(tau)^2 dtau    v' = t u^2
//   U'(t) = v / t,  U''(t) = u^2 - v / t^2
//   eta(t) = t^2 u^2 - v
//
// All functions take the squared radius t = |z|^2 and throw DomainError
// for t <= 0 or non-finite t.

namespace grauert {

struct ProfileOptions {
    // Absolute tolerance for the quadrature behind v(t).
    double abs_tol = 1e-10;
};

struct UValues {
    double u = 0.0;
    double du = 0.0;   // u'(t)
    double d2u = 0.0;  // u''(t)
};

struct UDerivs {
    double d1 = 0.0;  // U'
    double d2 = 0.0;  // U''
    double d3 = 0.0;  // U'''
    double d4 = 0.0;  // U''''
};

struct ProfileValues {
    double t = 0.0;
    double u = 0.0;
    double du = 0.0;
    double d2u = 0.0;
    double v = 0.0;
    double dU = 0.0;
    double d2U = 0.0;
    double d3U = 0.0;
    double d4U = 0.0;
    double eta = 0.0;
};

/// u and its first `order` derivatives (order in 0..2). Entries beyond the
/// requested order are left at zero. Continuous through the removable
/// singularity at t = 1.
UValues eval_u(double t, int order = 2);

/// v(t) by adaptive quadrature in the logarithmic variable.
double eval_v(double t, const ProfileOptions& opts = {});

/// U', U'', U''', U'''' from the closed-form derivatives of u and v' = t u^2.
UDerivs eval_U_derivs(double t, const ProfileOptions& opts = {});

/// Same, reusing a v(t) value the caller already has.
UDerivs U_derivs_from(double t, const UValues& u, double v);

double eval_eta(double t, const ProfileOptions& opts = {});

/// Everything above at one t, with a single v evaluation.
ProfileValues eval_profile(double t, const ProfileOptions& opts = {});

struct EtaThreshold {
    double t_r = 0.0;              // largest zero of eta
    double eta_at_root = 0.0;
    int grid_points_checked = 0;   // positivity audit on (t_r, 1e6]
};

/// Largest zero t_R of eta in (1e-6, 1e6), found by scanning a logarithmic
/// grid downward from 1e6 and bisecting to 1e-8. Verifies eta > 0 on a
/// logarithmic grid over (t_R, 1e6]; throws SearchError otherwise.
EtaThreshold find_eta_threshold(const ProfileOptions& opts = {});

/// Radial potential relative to base point 1: int_1^t v(tau) / tau dtau.
double eval_potential(double t, const ProfileOptions& opts = {});

}  // namespace grauert
