#include "grauert/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "grauert/errors.hpp"

namespace grauert {
namespace {

constexpr double kOrthogonalityTol = 1e-8;

void require_on_S(const CVector& z, const CVector& X) {
    const double ortho = std::abs(inner(z, X));
    if (!(ortho < kOrthogonalityTol * z.norm() * X.norm())) {
        std::ostringstream msg;
        msg << "point is not on the orthogonality locus: |<z, X(z)>| = " << ortho;
        throw DomainError(msg.str());
    }
}

double grauert_closed(const DiagonalField& F, const PointC& z, const ProfileOptions& opts) {
    if (z.dim() != F.n) throw DomainError("kappa_closed_on_S: point dimension differs from the field");
    const FieldValues fv = field_eval(F, z);
    const CVector& X = fv.X.coords;
    require_on_S(z.coords, X);

    const double t = z.norm_sq();
    const double u = eval_u(t, 0).u;
    const double v = eval_v(t, opts);
    const double x2 = X.squaredNorm();
    const double x6 = x2 * x2 * x2;
    const double c = std::norm(inner(fv.DXX.coords, z.coords));
    const double A = (t * t * u * u - v) * (2.0 * x6 + c * x2);
    const double B = (t + v) * t * wedge_norm_sq(fv.X, fv.DXX);
    const double D = (t + v) * (t + v) * x6;
    return -2.0 * (A + B) / D;
}

// Richardson table over halving steps for an O(h^2, h^4, ...) estimator.
template <class T, class Est>
T richardson(Est&& estimate, double step, int levels) {
    if (levels < 1) throw DomainError("finite differences need at least one level");
    std::vector<T> row;
    row.reserve(static_cast<std::size_t>(levels));
    double h = step;
    for (int i = 0; i < levels; ++i, h *= 0.5) {
        T cur = estimate(h);
        double factor = 4.0;
        for (int k = 0; k < i; ++k, factor *= 4.0) {
            T next = (factor * cur - row[static_cast<std::size_t>(k)]) / (factor - 1.0);
            row[static_cast<std::size_t>(k)] = cur;
            cur = next;
        }
        row.push_back(cur);
    }
    return row.back();
}

}  // namespace

LeafDensity make_leaf_density(const MetricKind& kind, const DiagonalField& F, const PointC& z,
                              const ProfileOptions& opts) {
    check_domain(kind, z);
    if (ambient_dim(kind) < F.n) throw DomainError("leaf density: field dimension exceeds the ambient one");
    if (const auto* bc = std::get_if<BallComplement>(&kind); bc && bc->n != F.n)
        throw DomainError("leaf density: field must act on the first n coordinates");
    auto eval = [kind, F, z, opts](Complex T) {
        const PointC Z = flow(F, z, T);
        return metric(kind, Z, field_eval_ambient(F, Z).X, opts);
    };
    return {kind, F, z, eval};
}

double leaf_density(const MetricKind& kind, const DiagonalField& F, const PointC& z, Complex T,
                    const ProfileOptions& opts) {
    return make_leaf_density(kind, F, z, opts)(T);
}

DensityGradient leaf_density_gradient(const DiagonalField& F, const PointC& z, const ProfileOptions& opts) {
    check_domain(GrauertPunctured{F.n}, z);
    const FieldValues fv = field_eval(F, z);
    const CVector& X = fv.X.coords;
    const CVector& DXX = fv.DXX.coords;
    const ProfileValues p = eval_profile(z.norm_sq(), opts);
    const double t = p.t;

    const Complex xz = inner(X, z.coords);
    const Complex zx = std::conj(xz);
    DensityGradient g;
    g.f1 = p.d2U * (2.0 * X.squaredNorm() * xz + inner(DXX, z.coords) * zx);
    g.f2 = (1.0 + p.v / t) * inner(DXX, X);
    g.f3 = (2.0 * p.u * p.du - p.u * p.u / t + 2.0 * p.v / (t * t * t)) * xz * std::norm(xz);
    g.sum = g.f1 + g.f2 + g.f3;
    return g;
}

BallFactors ball_complement_factors(const BallComplement& kind, const DiagonalField& F, const PointC& z,
                                    const ProfileOptions& opts) {
    if (F.n != kind.n) throw DomainError("ball complement: field dimension differs from n");
    check_domain(kind, z);
    const PointC zt(CVector(z.coords.head(kind.n)));
    const FieldValues fv = field_eval(F, zt);
    require_on_S(zt.coords, fv.X.coords);

    const double t = zt.norm_sq();
    const double r2 = kind.r2;
    if (!(t < r2)) throw DomainError("ball complement: point outside its slice ball");
    const double u = eval_u(t, 0).u;
    const double v = eval_v(t, opts);
    const double c = kind.N + 1.0;
    const double gap = r2 - t;
    const double x2 = fv.X.norm_sq();

    BallFactors out;
    out.h0 = (1.0 + v / t + c / gap) * x2;
    const double base = t + v + c * t / gap;
    out.I = base * x2 * x2 * x2 / (t * t * t);
    out.J = 3.0 * t * t * u * u - 2.0 * v + t + c * t * (r2 + 2.0 * t) / (gap * gap);
    out.P = 2.0 * out.J;
    out.Q = base * base;
    out.kappa = -2.0 * out.I * out.J / (out.h0 * out.h0 * out.h0);
    return out;
}

double kappa_closed_on_S(const MetricKind& kind, const DiagonalField& F, const PointC& z,
                         const ProfileOptions& opts) {
    if (const auto* g = std::get_if<GrauertPunctured>(&kind)) {
        if (g->n != F.n) throw DomainError("kappa_closed_on_S: field dimension differs from n");
        check_domain(kind, z);
        return grauert_closed(F, z, opts);
    }
    if (const auto* bc = std::get_if<BallComplement>(&kind)) return ball_complement_factors(*bc, F, z, opts).kappa;
    throw DomainError("kappa_closed_on_S: no closed form for the Bergman metric alone");
}

namespace fd {

double laplacian(const std::function<double(Complex)>& f, double step, int levels) {
    const double f0 = f(Complex(0.0, 0.0));
    auto est = [&](double h) {
        const double s = f(Complex(h, 0.0)) + f(Complex(-h, 0.0)) + f(Complex(0.0, h)) + f(Complex(0.0, -h));
        return (s - 4.0 * f0) / (h * h);
    };
    return richardson<double>(est, step, levels);
}

Complex wirtinger(const std::function<double(Complex)>& f, double step, int levels) {
    auto est = [&](double h) {
        const double dx = f(Complex(h, 0.0)) - f(Complex(-h, 0.0));
        const double dy = f(Complex(0.0, h)) - f(Complex(0.0, -h));
        return Complex(dx, -dy) / (4.0 * h);
    };
    return richardson<Complex>(est, step, levels);
}

double gaussian_curvature(const std::function<double(Complex)>& h, double step, int levels) {
    const double h0 = h(Complex(0.0, 0.0));
    auto log_h = [&](Complex T) { return std::log(h(T)); };
    return -laplacian(log_h, step, levels) / (2.0 * h0);
}

}  // namespace fd

double leaf_step(const DiagonalField& F, const PointC& z, double step) {
    const double speed = field_eval_ambient(F, z).X.coords.norm();
    const double cap = 0.05 / std::max(1.0, std::abs(F.alpha));
    if (!(speed > 0.0)) return cap;
    return std::min(step / speed, cap);
}

double kappa_fd(const MetricKind& kind, const DiagonalField& F, const PointC& z, double step,
                const ProfileOptions& opts) {
    if (!(step > 0.0)) throw DomainError("kappa_fd: step must be positive");
    const LeafDensity h = make_leaf_density(kind, F, z, opts);
    return fd::gaussian_curvature(h.evaluator, leaf_step(F, z, step), 2);
}

// ---------------------------------------------------------------------------
// Curvature tensor

CurvatureTensor::CurvatureTensor(const MetricKind& kind, const PointC& z, const ProfileOptions& opts)
    : z_(z) {
    check_domain(kind, z);
    const int dim = static_cast<int>(z.dim());

    auto add_grauert = [&](int m) {
        const double t = z.coords.head(m).squaredNorm();
        const UDerivs U = eval_U_derivs(t, opts);
        radial_.push_back({m, 1.0 + U.d1, U.d2, U.d3, U.d4});
    };
    auto add_bergman = [&](int N) {
        const double c = N + 1.0;
        const double gap = 1.0 - z.coords.squaredNorm();
        radial_.push_back({N, c / gap, c / (gap * gap), 2.0 * c / (gap * gap * gap),
                           6.0 * c / (gap * gap * gap * gap)});
    };
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GrauertPunctured>) {
                add_grauert(k.n);
            } else if constexpr (std::is_same_v<K, BergmanBall>) {
                add_bergman(k.N);
            } else {
                add_grauert(k.n);
                add_bergman(k.N);
            }
        },
        kind);

    G_ = CMatrix::Zero(dim, dim);
    for (const auto& r : radial_) {
        const CVector zm = z.coords.head(r.m);
        auto block = G_.topLeftCorner(r.m, r.m);
        block.diagonal().array() += r.d1;
        block += r.d2 * zm.conjugate() * zm.transpose();
    }
    conj_llt_.compute(G_.conjugate());
    if (conj_llt_.info() != Eigen::Success)
        throw NumericError("metric matrix is not positive definite", 0.0);
}

CurvatureTensor::Terms CurvatureTensor::terms(const TangentC& X) const {
    if (X.dim() != z_.dim()) throw DomainError("curvature tensor: direction dimension mismatch");
    Terms out;
    out.first = CVector::Zero(z_.dim());
    for (const auto& r : radial_) {
        const auto zm = z_.coords.head(r.m);
        const auto xm = X.coords.head(r.m);
        const Complex s = zm.dot(xm);  // <pi X, pi z>
        const double q = xm.squaredNorm();
        const double s2 = std::norm(s);
        out.g_xx += r.d1 * q + r.d2 * s2;
        out.fourth += 2.0 * r.d2 * q * q + 4.0 * r.d3 * s2 * q + r.d4 * s2 * s2;
        out.first.head(r.m) += 2.0 * r.d2 * s * xm + r.d3 * s * s * zm;
    }
    const CVector y = conj_llt_.solve(out.first);
    out.correction = out.first.dot(y).real();
    return out;
}

double CurvatureTensor::riemann(const TangentC& X) const {
    const Terms tm = terms(X);
    return -tm.fourth + tm.correction;
}

double CurvatureTensor::hsc(const TangentC& X) const {
    const Terms tm = terms(X);
    if (!(tm.g_xx > 0.0)) throw DomainError("hsc: direction must be nonzero");
    return 2.0 * (tm.correction - tm.fourth) / (tm.g_xx * tm.g_xx);
}

CMatrix metric_matrix(const MetricKind& kind, const PointC& z, const ProfileOptions& opts) {
    return CurvatureTensor(kind, z, opts).metric_matrix();
}

double hsc(const MetricKind& kind, const PointC& z, const TangentC& X, const ProfileOptions& opts) {
    return CurvatureTensor(kind, z, opts).hsc(X);
}

bool CurvatureReport::consistent() const {
    if (!kappa_closed) return true;
    return std::abs(kappa_fd - *kappa_closed) <= tolerance * std::abs(*kappa_closed);
}

CurvatureReport curvature_report(const MetricKind& kind, const DiagonalField& F, const PointC& z, double step,
                                 const ProfileOptions& opts) {
    CurvatureReport rep;
    rep.point = z;
    rep.kappa_fd = kappa_fd(kind, F, z, step, opts);

    const FieldValues fv = field_eval_ambient(F, z);
    const CVector zt = project(z.coords, F.n);
    const double ortho = std::abs(inner(zt, fv.X.coords)) / (zt.norm() * fv.X.coords.norm());
    rep.residuals["orthogonality"] = ortho;
    rep.direction = fv.X;
    rep.hsc = hsc(kind, z, fv.X, opts);

    if (ortho < kOrthogonalityTol && !std::holds_alternative<BergmanBall>(kind)) {
        rep.kappa_closed = kappa_closed_on_S(kind, F, z, opts);
        rep.residuals["closed_vs_fd"] = std::abs(rep.kappa_fd - *rep.kappa_closed) / std::abs(*rep.kappa_closed);
        rep.residuals["hsc_minus_kappa"] = *rep.hsc - *rep.kappa_closed;
    }
    return rep;
}

}  // namespace grauert
