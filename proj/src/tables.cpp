#include <cmath>
#include <sstream>

#include "grauert/errors.hpp"
#include "grauert/leaf_profiles.hpp"
#include "grauert/roots.hpp"
#include "grauert/verify.hpp"

namespace grauert {
namespace {

void usage_check(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

CVector random_point(Eigen::Index dim, double t, Rng& rng) {
    CVector z = random_complex(dim, rng);
    return z * std::sqrt(t / z.squaredNorm());
}

}  // namespace

CVector parse_complex_list(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + item + "' in complex list");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw UsageError("cannot parse number '" + item + "' in complex list");
        parts.push_back(x);
    }
    if (parts.size() % 2 != 0) throw UsageError("complex list needs an even number of reals (re,im pairs)");
    CVector v(static_cast<Eigen::Index>(parts.size() / 2));
    for (std::size_t i = 0; i < parts.size() / 2; ++i) v(static_cast<Eigen::Index>(i)) = Complex(parts[2 * i], parts[2 * i + 1]);
    return v;
}

CVector RunConfig::slice_point() const {
    if (w.size() == 0) return CVector::Zero(N);
    return w;
}

MetricKind RunConfig::metric_kind() const {
    if (metric == "grauert") return GrauertPunctured{n};
    if (metric == "bergman") return BergmanBall{N};
    return BallComplement::make(N, n, slice_point());
}

void RunConfig::validate() const {
    usage_check(n >= 2, "--n must be at least 2");
    usage_check(N >= 2, "--N must be at least 2");
    usage_check(std::isfinite(alpha) && alpha < 0.0, "--alpha must be negative");
    usage_check(std::isfinite(t_min) && std::isfinite(t_max) && t_min > 0.0 && t_min < t_max,
                "need 0 < --t-min < --t-max");
    usage_check(steps >= 2, "--steps must be at least 2");
    usage_check(!radius_list.empty(), "--radius-list must not be empty");
    for (double t : radius_list) usage_check(std::isfinite(t) && t > 0.0, "--radius-list entries must be positive");
    usage_check(tol > 0.0 && std::isfinite(tol), "--tol must be positive");
    usage_check(metric == "grauert" || metric == "ball" || metric == "bergman",
                "--metric must be grauert, ball or bergman");
    usage_check(samples >= 1, "--samples must be positive");
    usage_check(refine_iters >= 0, "--refine-iters must be nonnegative");
    usage_check(std::isfinite(T_span) && T_span > 0.0, "--T-span must be positive");
    if (w.size() != 0) {
        usage_check(w.size() == N, "--w must have N complex coordinates");
        for (int j = 0; j < std::min(n, N); ++j)
            usage_check(w(j) == Complex(0.0, 0.0), "--w must have its first n coordinates zero");
        usage_check(w.squaredNorm() < 1.0, "--w must lie inside the unit ball");
    }
    if (metric == "ball") usage_check(n <= N, "--metric ball needs n <= N");
    if (z) {
        const Eigen::Index dim = metric == "grauert" ? n : N;
        usage_check(z->size() == dim, "--z has the wrong number of coordinates for the metric");
    }
}

Table cmd_profiles(const RunConfig& cfg) {
    cfg.validate();
    const ProfileOptions opts = cfg.profile_options();
    const ProfileSpec ball = ProfileSpec::ball_complement(cfg.N, cfg.r2());

    Table table;
    table.columns = {"t", "u", "v", "eta", "f_cn", "f_cstar", "f_ball"};
    for (double t : roots::log_grid(cfg.t_min, cfg.t_max, cfg.steps)) {
        const ProfileValues p = eval_profile(t, opts);
        const double s = t + p.v;
        const double f_cn = -2.0 * (3.0 * t * t * p.u * p.u - 2.0 * p.v + t) / (s * s);
        Cell f_ball;
        if (t < ball.r2) f_ball = kappa_profile_ball(ball, t, opts);
        table.rows.push_back({t, p.u, p.v, p.eta, f_cn, kappa_profile_cstar(t).f, f_ball});
    }
    return table;
}

namespace {

// A base point for the configured metric at squared radius t: on S for the
// Grauert metric, on S_w for the ball complement, generic for Bergman.
PointC scan_point(const RunConfig& cfg, const DiagonalField& F, double t, Rng& rng) {
    if (cfg.metric == "grauert") return sample_S(F, t, rng);
    if (cfg.metric == "ball") {
        const auto kind = std::get<BallComplement>(cfg.metric_kind());
        return sample_S_w(kind, F, t, rng);
    }
    return PointC(random_point(cfg.N, t, rng));
}

}  // namespace

Table cmd_scan(const RunConfig& cfg) {
    cfg.validate();
    const ProfileOptions opts = cfg.profile_options();
    const MetricKind kind = cfg.metric_kind();
    const DiagonalField F(cfg.n, cfg.alpha);
    Rng rng(cfg.seed);

    Table table;
    table.columns = {"t", "kappa_S", "hsc_field", "k_minus", "k_plus", "evaluations"};
    for (double t : cfg.radius_list) {
        const PointC z = scan_point(cfg, F, t, rng);
        Cell kappa;
        if (cfg.metric != "bergman") kappa = kappa_closed_on_S(kind, F, z, opts);
        const double along = hsc(kind, z, field_eval_ambient(F, z).X, opts);
        const ExtremalHsc ext = extremal_hsc(kind, z, {cfg.samples, cfg.refine_iters, cfg.seed}, opts);
        table.rows.push_back({t, kappa, along, ext.k_minus, ext.k_plus, static_cast<double>(ext.evaluations)});
    }
    return table;
}

Table cmd_flow(const RunConfig& cfg) {
    cfg.validate();
    const ProfileOptions opts = cfg.profile_options();
    const MetricKind kind = cfg.metric_kind();
    const DiagonalField F(cfg.n, cfg.alpha);

    PointC base;
    if (cfg.z) {
        base = PointC(*cfg.z);
    } else {
        Rng rng(cfg.seed);
        const double t = cfg.metric == "grauert" ? 1.0 : (cfg.metric == "ball" ? 0.5 * cfg.r2() : 0.25);
        base = scan_point(cfg, F, t, rng);
    }
    check_domain(kind, base);
    const LeafDensity h = make_leaf_density(kind, F, base, opts);

    Table table;
    table.columns = {"T_re", "T_im"};
    for (Eigen::Index j = 0; j < base.dim(); ++j) {
        table.columns.push_back("z" + std::to_string(j + 1) + "_re");
        table.columns.push_back("z" + std::to_string(j + 1) + "_im");
    }
    for (const char* c : {"h", "kappa_fd", "status"}) table.columns.emplace_back(c);

    const int half = (cfg.steps - 1) / 2;
    const Complex dir = std::polar(1.0, cfg.T_angle);
    const double dT = half > 0 ? cfg.T_span / half : cfg.T_span;

    auto make_row = [&](int k) -> std::optional<std::vector<Cell>> {
        const Complex T = dir * (dT * k);
        std::vector<Cell> row{T.real(), T.imag()};
        try {
            const PointC Z = flow(F, base, T);
            check_domain(kind, Z);
            const double hv = h(T);
            const double kfd = kappa_fd(kind, F, Z, 1e-3, opts);
            for (Eigen::Index j = 0; j < Z.dim(); ++j) {
                row.emplace_back(Z.coords(j).real());
                row.emplace_back(Z.coords(j).imag());
            }
            row.emplace_back(hv);
            row.emplace_back(kfd);
            row.emplace_back(std::string("ok"));
            return row;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    };
    auto warning_row = [&](int k) {
        const Complex T = dir * (dT * k);
        std::vector<Cell> row{T.real(), T.imag()};
        row.resize(table.columns.size() - 1);
        row.emplace_back(std::string("leaves domain"));
        std::ostringstream msg;
        const double im = T.imag() == 0.0 ? 0.0 : T.imag();
        msg << "leaf leaves the domain at T = " << T.real() << (im < 0 ? "" : "+") << im << "i";
        table.warnings.push_back(msg.str());
        return row;
    };

    std::vector<std::vector<Cell>> below;
    std::vector<std::vector<Cell>> above;
    for (int k = 0; k <= half; ++k) {
        auto row = make_row(k);
        if (!row) {
            above.push_back(warning_row(k));
            break;
        }
        above.push_back(std::move(*row));
    }
    for (int k = -1; k >= -half; --k) {
        auto row = make_row(k);
        if (!row) {
            below.push_back(warning_row(k));
            break;
        }
        below.push_back(std::move(*row));
    }
    for (auto it = below.rbegin(); it != below.rend(); ++it) table.rows.push_back(std::move(*it));
    for (auto& r : above) table.rows.push_back(std::move(r));
    return table;
}

}  // namespace grauert
