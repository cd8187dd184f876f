#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "grauert/errors.hpp"
#include "grauert/leaf_profiles.hpp"
#include "grauert/roots.hpp"
#include "grauert/verify.hpp"

namespace grauert {
namespace {

double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CVector random_point(Eigen::Index dim, double t, Rng& rng) {
    CVector z = random_complex(dim, rng);
    return z * std::sqrt(t / z.squaredNorm());
}

double log_uniform(double lo, double hi, Rng& rng) {
    std::uniform_real_distribution<double> e(std::log(lo), std::log(hi));
    return std::exp(e(rng));
}

ClaimResult c1(const ProfileOptions& opts) {
    ClaimResult r{"C1", "v(1) = 2 log 2 by quadrature, and v(1) < 2", {}, 1e-6, false};
    const double v1 = eval_v(1.0, opts);
    const double exact = 2.0 * std::numbers::ln2;
    r.computed = {{"v1", v1}, {"two_log_two", exact}, {"abs_diff", std::abs(v1 - exact)}};
    r.pass = v1 >= 1.386293 && v1 <= 1.386296 && std::abs(v1 - exact) < r.threshold && v1 < 2.0;
    return r;
}

ClaimResult c2(const ProfileOptions& opts) {
    ClaimResult r{"C2", "leafwise profile f(1) < 0 (n >= 2)", {}, 1e-4, false};
    const double f1 = kappa_profile_cn(1.0, opts);
    const double v1 = 2.0 * std::numbers::ln2;
    const double expected = -2.0 * (4.0 - 2.0 * v1) / ((1.0 + v1) * (1.0 + v1));
    r.computed = {{"f1", f1}, {"expected", expected}};
    r.pass = std::abs(f1 - expected) < r.threshold && f1 < 0.0;
    return r;
}

ClaimResult c3(const ProfileOptions& opts) {
    ClaimResult r{"C3", "f(10^-k) > 0 and increasing for k = 2..8 (divergence at 0)", {}, 0.0, true};
    double prev = -INFINITY;
    for (int k = 2; k <= 8; ++k) {
        const double f = kappa_profile_cn(std::pow(10.0, -k), opts);
        r.computed.emplace_back("f_1e-" + std::to_string(k), f);
        if (!(f > 0.0 && f > prev)) r.pass = false;
        prev = f;
    }
    return r;
}

ClaimResult c4(const ProfileOptions& opts) {
    ClaimResult r{"C4", "least zero a of f lies in (0, 1) with f > 0 below it", {}, 1e-6, false};
    try {
        const MinZero z = find_min_zero_a({}, opts);
        r.computed = {{"a", z.a}, {"f_at_a", z.f_at_a}, {"positive_checks", double(z.positive_points_checked)}};
        r.pass = z.a > 0.0 && z.a < 1.0 && std::abs(z.f_at_a) < r.threshold;
    } catch (const SearchError&) {
        r.pass = false;
    }
    return r;
}

ClaimResult c5(const RunConfig& cfg, const ProfileOptions& opts, const EtaThreshold* eta) {
    ClaimResult r{"C5", "eta threshold t_R exists and kappa < 0 on S beyond it", {}, 1e-6, false};
    if (!eta) return r;
    r.computed = {{"t_R", eta->t_r}, {"eta_at_t_R", eta->eta_at_root}};
    bool ok = std::abs(eta->eta_at_root) < r.threshold && eta->grid_points_checked > 0;
    const DiagonalField F(cfg.n, cfg.alpha);
    for (double mult : {2.0, 10.0}) {
        const PointC z = sample_S(F, mult * eta->t_r, cfg.seed);
        const double k = kappa_closed_on_S(GrauertPunctured{cfg.n}, F, z, opts);
        r.computed.emplace_back(mult == 2.0 ? "kappa_2tR" : "kappa_10tR", k);
        ok = ok && k < 0.0;
    }
    r.pass = ok;
    return r;
}

ClaimResult c6(const RunConfig& cfg, const ProfileOptions& opts) {
    ClaimResult r{"C6", "curvature on S is independent of alpha", {}, 1e-10, true};
    std::set<double> alphas = {-0.5, -1.0, -2.0, -7.0, cfg.alpha};
    double worst = 0.0;
    for (double t : {0.01, 1.0, 10.0}) {
        double lo = INFINITY, hi = -INFINITY;
        for (double a : alphas) {
            const DiagonalField F(cfg.n, a);
            const double k = kappa_closed_on_S(GrauertPunctured{cfg.n}, F, sample_S(F, t, cfg.seed), opts);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
        worst = std::max(worst, (hi - lo) / std::abs(hi));
    }
    r.computed = {{"max_relative_spread", worst}};
    r.pass = worst < r.threshold;
    return r;
}

ClaimResult c7(const RunConfig& cfg, const ProfileOptions& opts) {
    ClaimResult r{"C7", "ball profile: f(r^2/2) < 0, f -> -6/(N+1) at r^2, f grows without bound at 0", {}, 1e-3,
                  true};
    const ProfileSpec spec = ProfileSpec::ball_complement(cfg.N, cfg.r2());
    const double half = kappa_profile_ball(spec, spec.r2 / 2.0, opts);
    const double edge = kappa_profile_ball(spec, spec.r2 - 1e-6, opts);
    const double limit = -6.0 / (cfg.N + 1.0);
    r.computed = {{"N", double(cfg.N)}, {"r2", spec.r2}, {"f_half", half}, {"f_edge", edge}, {"limit", limit}};
    r.pass = half < 0.0 && std::abs(edge - limit) < r.threshold;
    double prev = -INFINITY;
    for (int k = 2; k <= 8; ++k) {
        const double t = std::pow(10.0, -k);
        if (t >= spec.r2 / 2.0) continue;
        const double f = kappa_profile_ball(spec, t, opts);
        r.computed.emplace_back("f_1e-" + std::to_string(k), f);
        if (!(f > 0.0 && f > prev)) r.pass = false;
        prev = f;
    }
    return r;
}

ClaimResult c8() {
    ClaimResult r{"C8", "C*: f <= 0, f -> -4 at 0, f -> 0 at infinity, (t-1)^2 >= t log^2 t", {}, 1e-2, false};
    const double f0 = kappa_profile_cstar(1e-8).f;
    const double finf = kappa_profile_cstar(1e6).f;
    double fmax = -INFINITY;
    double smin = INFINITY;
    for (double t : roots::log_grid(1e-6, 1e6, 256)) {
        fmax = std::max(fmax, kappa_profile_cstar(t).f);
        smin = std::min(smin, log_u_hessian_sign(t));
    }
    r.computed = {{"f_1e-8", f0}, {"f_1e6", finf}, {"max_f", fmax}, {"min_hessian_sign", smin}};
    r.pass = std::abs(f0 + 4.0) < r.threshold && std::abs(finf) < r.threshold && fmax <= 1e-12 && smin >= -1e-12;
    return r;
}

ClaimResult c9(const RunConfig& cfg, const ProfileOptions& opts) {
    ClaimResult r{"C9", "Bergman metric has constant HSC -4/(N+1)", {}, 1e-6, true};
    std::set<int> dims = {1, 2, 3, cfg.N};
    Rng rng(cfg.seed);
    double worst = 0.0;
    for (int N : dims) {
        for (int i = 0; i < 20; ++i) {
            std::uniform_real_distribution<double> rad(0.0, 0.9);
            const PointC z(random_point(N, rad(rng), rng));
            const TangentC X(random_complex(N, rng));
            worst = std::max(worst, std::abs(hsc(BergmanBall{N}, z, X, opts) + 4.0 / (N + 1.0)));
        }
    }
    r.computed = {{"max_abs_deviation", worst}};
    r.pass = worst < r.threshold;
    return r;
}

ClaimResult c10(const RunConfig& cfg, const ProfileOptions& opts) {
    ClaimResult r{"C10", "g and HSC are invariant under unitary rotations", {}, 1e-10, false};
    Rng rng(cfg.seed);
    double worst_g = 0.0;
    double worst_k = 0.0;
    for (int i = 0; i < 100; ++i) {
        const CMatrix U = random_unitary(cfg.n, rng);
        const PointC z(random_point(cfg.n, log_uniform(0.1, 10.0, rng), rng));
        const TangentC X(random_complex(cfg.n, rng));
        const PointC Uz(U * z.coords);
        const TangentC UX(U * X.coords);
        worst_g = std::max(worst_g, rel_err(grauert_metric(z, X, opts), grauert_metric(Uz, UX, opts)));
        const GrauertPunctured kind{cfg.n};
        worst_k = std::max(worst_k, rel_err(hsc(kind, z, X, opts), hsc(kind, Uz, UX, opts)));
    }
    r.computed = {{"max_rel_err_metric", worst_g}, {"max_rel_err_hsc", worst_k}};
    r.pass = worst_g < r.threshold && worst_k < r.threshold;
    return r;
}

ClaimResult c11(const RunConfig& cfg, const ProfileOptions& opts) {
    ClaimResult r{"C11", "HSC along the field dominates the leaf curvature on S", {}, 1e-6, true};
    Rng rng(cfg.seed);
    const DiagonalField F(cfg.n, cfg.alpha);
    const GrauertPunctured kind{cfg.n};
    double min_gap = INFINITY;
    for (int i = 0; i < 50; ++i) {
        const PointC z = sample_S(F, log_uniform(1e-2, 1e2, rng), rng);
        const double gap = hsc(kind, z, field_eval(F, z).X, opts) - kappa_closed_on_S(kind, F, z, opts);
        min_gap = std::min(min_gap, gap);
    }
    r.computed = {{"min_hsc_minus_kappa", min_gap}};
    r.pass = min_gap >= -r.threshold;
    return r;
}

ClaimResult c12(const RunConfig& cfg, const ProfileOptions& opts, const EtaThreshold* eta) {
    ClaimResult r{"C12", "HSC < 0 on directions orthogonal to z beyond t_R", {}, 0.0, false};
    if (!eta) return r;
    Rng rng(cfg.seed);
    const GrauertPunctured kind{cfg.n};
    double worst = -INFINITY;
    for (int i = 0; i < 50; ++i) {
        const double t = (i % 2 == 0 ? 2.0 : 10.0) * eta->t_r;
        const CVector z = random_point(cfg.n, t, rng);
        CVector V = random_complex(cfg.n, rng);
        V -= (z.dot(V) / z.squaredNorm()) * z;
        worst = std::max(worst, hsc(kind, PointC(z), TangentC(V), opts));
    }
    r.computed = {{"max_hsc", worst}, {"t_R", eta->t_r}};
    r.pass = worst < 0.0;
    return r;
}

}  // namespace

std::vector<ClaimResult> cmd_claims(const RunConfig& cfg) {
    cfg.validate();
    const ProfileOptions opts = cfg.profile_options();

    std::optional<EtaThreshold> eta;
    try {
        eta = find_eta_threshold(opts);
    } catch (const SearchError&) {
    }
    const EtaThreshold* eta_ptr = eta ? &*eta : nullptr;

    return {c1(opts),           c2(opts),           c3(opts),           c4(opts),
            c5(cfg, opts, eta_ptr), c6(cfg, opts),  c7(cfg, opts),      c8(),
            c9(cfg, opts),      c10(cfg, opts),     c11(cfg, opts),     c12(cfg, opts, eta_ptr)};
}

}  // namespace grauert
