#pragma once

#include <utility>
#include <vector>

#include "grauert/radial_profiles.hpp"

// One-variable curvature profiles in t = |z|^2.
//
//  cn:    curvature of the leaves through the orthogonality locus of the
//         diagonal field on punctured C^n, n >= 2 (independent of alpha)
//  ball:  same for the slice metric on B^N minus A, slice radius r^2
//  cstar: conformal curvature of the n = 1 metric (1 + t u^2)|dz|^2

namespace grauert {

enum class ProfileFamily { PuncturedCn, BallComplement, CStar };

struct ProfileSpec {
    ProfileFamily family = ProfileFamily::PuncturedCn;
    int N = 2;        // BallComplement only
    double r2 = 1.0;  // BallComplement only

    static ProfileSpec punctured_cn() { return {}; }
    static ProfileSpec cstar() { return {ProfileFamily::CStar, 0, 0.0}; }
    /// Throws DomainError unless N >= 2 and 0 < r2 <= 1.
    static ProfileSpec ball_complement(int N, double r2);

    /// Upper end of the domain of definition (infinity for the unbounded families).
    double upper_limit() const;
};

double kappa_profile_cn(double t, const ProfileOptions& opts = {});

/// Requires 0 < t < spec.r2.
double kappa_profile_ball(const ProfileSpec& spec, double t, const ProfileOptions& opts = {});

/// The ball profile with the Bergman contributions switched off; reduces to
/// kappa_profile_cn. Used to cross-check the ball formula.
double kappa_profile_ball_without_bergman(double t, double r2, const ProfileOptions& opts = {});

struct CStarCurvature {
    double f = 0.0;   // -P/Q
    double P = 0.0;
    double Q = 0.0;
    double M1 = 0.0;  // P = 2 (M1 + M2)
    double M2 = 0.0;
    double M1_log = 0.0;  // M1 rebuilt from (t-1)^2 - t log^2 t
    double M2_log = 0.0;  // M2 rebuilt from its logarithmic form
};

/// Curvature of (1 + t u(t)^2)|dz|^2 on C^*. Needs no quadrature.
CStarCurvature kappa_profile_cstar(double t);

/// (t-1)^2 - t (log t)^2; nonnegative iff log u(|z|^2) is subharmonic.
double log_u_hessian_sign(double t);

struct ScanOptions {
    int grid_points = 1024;
    double grid_lo = 1e-8;
    double bisection_tol = 1e-9;
};

struct MinZero {
    double a = 0.0;
    double f_at_a = 0.0;
    int positive_points_checked = 0;
};

/// Least zero of kappa_profile_cn in (0, 1): sign scan on a logarithmic grid
/// followed by bisection. Throws SearchError if no sign change is found or
/// if f fails to be positive on the audit grid below the root.
MinZero find_min_zero_a(const ScanOptions& scan = {}, const ProfileOptions& opts = {});

/// All brackets [t_i, t_{i+1}] of the scan grid over [lo, hi] where the
/// sampled sign of kappa_profile_cn changes. No completeness claim.
std::vector<std::pair<double, double>> cn_sign_changes(double lo, double hi, int grid_points,
                                                       const ProfileOptions& opts = {});

}  // namespace grauert
