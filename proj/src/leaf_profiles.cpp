#include "grauert/leaf_profiles.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "grauert/errors.hpp"
#include "grauert/roots.hpp"

namespace grauert {

ProfileSpec ProfileSpec::ball_complement(int N, double r2) {
    if (N < 2) throw DomainError("ball profile: ambient dimension N must be >= 2");
    if (!(r2 > 0.0 && r2 <= 1.0)) throw DomainError("ball profile: r^2 must lie in (0, 1]");
    return {ProfileFamily::BallComplement, N, r2};
}

double ProfileSpec::upper_limit() const {
    return family == ProfileFamily::BallComplement ? r2 : std::numeric_limits<double>::infinity();
}

double kappa_profile_cn(double t, const ProfileOptions& opts) {
    const double u = eval_u(t, 0).u;
    const double v = eval_v(t, opts);
    const double s = t + v;
    return -2.0 * (3.0 * t * t * u * u - 2.0 * v + t) / (s * s);
}

namespace {

double ball_profile(double t, double r2, double bergman, const ProfileOptions& opts) {
    if (!(t > 0.0 && t < r2)) {
        std::ostringstream msg;
        msg << "ball profile: t = " << t << " outside (0, " << r2 << ")";
        throw DomainError(msg.str());
    }
    const double u = eval_u(t, 0).u;
    const double v = eval_v(t, opts);
    const double gap = r2 - t;
    const double num = 3.0 * t * t * u * u - 2.0 * v + t + bergman * t * (r2 + 2.0 * t) / (gap * gap);
    const double den = t + v + bergman * t / gap;
    return -2.0 * num / (den * den);
}

}  // namespace

double kappa_profile_ball(const ProfileSpec& spec, double t, const ProfileOptions& opts) {
    if (spec.family != ProfileFamily::BallComplement)
        throw DomainError("kappa_profile_ball needs a BallComplement spec");
    return ball_profile(t, spec.r2, spec.N + 1.0, opts);
}

double kappa_profile_ball_without_bergman(double t, double r2, const ProfileOptions& opts) {
    return ball_profile(t, r2, 0.0, opts);
}

CStarCurvature kappa_profile_cstar(double t) {
    const UValues d = eval_u(t, 2);
    const double u = d.u;
    const double u1 = d.du;
    const double u2 = d.d2u;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double u_sq = u * u;
    const double u_cu = u_sq * u;

    CStarCurvature out;
    out.M1 = 2.0 * t3 * u_cu * u2 + 2.0 * t2 * u_cu * u1 - 2.0 * t3 * u_sq * u1 * u1;
    out.M2 = u_sq + 2.0 * t2 * u1 * u1 + 2.0 * t2 * u * u2 + 6.0 * t * u * u1;
    out.P = 2.0 * (out.M1 + out.M2);
    const double base = 1.0 + t * u_sq;
    out.Q = base * base * base;
    out.f = -out.P / out.Q;

    // The logarithmic forms have a removable 0/0 at t = 1.
    const double lg = std::log(t);
    if (lg != 0.0) {
        const double tm1 = t - 1.0;
        const double lg2 = lg * lg;
        const double m1_tilde = tm1 * tm1 - t * lg2;
        const double m2_tilde = tm1 * tm1 * lg2 + 2.0 * lg2 + 6.0 * tm1 * tm1 - 8.0 * tm1 * lg +
                                2.0 * tm1 * lg2 - 4.0 * tm1 * tm1 * lg;
        out.M1_log = 2.0 * t3 * tm1 * tm1 * m1_tilde / std::pow(t * lg, 6);
        out.M2_log = m2_tilde / (t2 * lg2 * lg2);
    } else {
        out.M1_log = out.M1;
        out.M2_log = out.M2;
    }
    return out;
}

double log_u_hessian_sign(double t) {
    if (!std::isfinite(t) || t <= 0.0) throw DomainError("log_u_hessian_sign: t must be positive");
    const double lg = std::log(t);
    const double tm1 = t - 1.0;
    return tm1 * tm1 - t * lg * lg;
}

std::vector<std::pair<double, double>> cn_sign_changes(double lo, double hi, int grid_points,
                                                       const ProfileOptions& opts) {
    const auto grid = roots::log_grid(lo, hi, grid_points);
    return roots::sign_changes([&](double t) { return kappa_profile_cn(t, opts); }, grid);
}

MinZero find_min_zero_a(const ScanOptions& scan, const ProfileOptions& opts) {
    auto f = [&](double t) { return kappa_profile_cn(t, opts); };
    const auto grid = roots::log_grid(scan.grid_lo, 1.0, scan.grid_points);
    const auto brackets = roots::sign_changes(f, grid);
    if (brackets.empty()) throw SearchError("kappa profile has no sign change in (0, 1)");
    const auto [lo, hi] = brackets.front();
    if (f(lo) <= 0.0) throw SearchError("kappa profile is not positive below its first sign change");

    MinZero out;
    out.a = roots::bisect(f, lo, hi, scan.bisection_tol);
    out.f_at_a = f(out.a);

    const auto audit = roots::log_grid(scan.grid_lo, out.a * (1.0 - 1e-3), 64);
    for (double t : audit) {
        if (f(t) <= 0.0) {
            std::ostringstream msg;
            msg << "kappa profile not positive at t = " << t << " below the first zero " << out.a;
            throw SearchError(msg.str());
        }
        ++out.positive_points_checked;
    }
    return out;
}

}  // namespace grauert
