#include "grauert/metrics.hpp"

#include <cmath>
#include <sstream>

#include "grauert/errors.hpp"

namespace grauert {
namespace {

constexpr double kDegenerate = 1e-10;

CVector from_list(std::initializer_list<Complex> c) {
    CVector v(static_cast<Eigen::Index>(c.size()));
    Eigen::Index i = 0;
    for (const Complex& x : c) v(i++) = x;
    return v;
}

void require_same_dim(const CVector& a, const CVector& b, const char* who) {
    if (a.size() != b.size()) {
        std::ostringstream msg;
        msg << who << ": dimension mismatch (" << a.size() << " vs " << b.size() << ")";
        throw DomainError(msg.str());
    }
}

// Radial Grauert form evaluated on already-projected vectors.
double grauert_form(const CVector& z, const CVector& X, const ProfileOptions& opts) {
    const double t = z.squaredNorm();
    const double u = eval_u(t, 0).u;
    const double v = eval_v(t, opts);
    const double zx = std::norm(inner(X, z));
    return (1.0 + v / t) * X.squaredNorm() + (u * u - v / (t * t)) * zx;
}

}  // namespace

PointC::PointC(std::initializer_list<Complex> c) : coords(from_list(c)) {}
TangentC::TangentC(std::initializer_list<Complex> c) : coords(from_list(c)) {}

DiagonalField::DiagonalField(int n_, double alpha_) : n(n_), alpha(alpha_) {
    if (n < 2) throw DomainError("diagonal field: dimension must be >= 2");
    if (!std::isfinite(alpha) || alpha >= 0.0) throw DomainError("diagonal field: alpha must be negative");
}

BallComplement BallComplement::make(int N, int n, CVector w) {
    if (n < 2 || n > N) throw DomainError("ball complement: need 2 <= n <= N");
    if (w.size() == 0) w = CVector::Zero(N);
    if (w.size() != N) throw DomainError("ball complement: slice point must have N coordinates");
    for (int j = 0; j < n; ++j)
        if (w(j) != Complex(0.0, 0.0)) throw DomainError("ball complement: slice point must lie in A");
    const double w2 = w.squaredNorm();
    if (!(w2 < 1.0)) throw DomainError("ball complement: slice point must lie in the unit ball");
    BallComplement k;
    k.N = N;
    k.n = n;
    k.w = std::move(w);
    k.r2 = 1.0 - w2;
    return k;
}

BallComplement BallComplement::punctured_ball(int N) { return make(N, N, CVector::Zero(N)); }

int ambient_dim(const MetricKind& kind) {
    return std::visit(
        [](const auto& k) -> int {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GrauertPunctured>) return k.n;
            else return k.N;
        },
        kind);
}

void check_domain(const MetricKind& kind, const PointC& z) {
    if (z.dim() != ambient_dim(kind)) throw DomainError("point dimension does not match the metric");
    if (!z.coords.allFinite()) throw DomainError("point has non-finite coordinates");
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GrauertPunctured>) {
                if (z.coords.norm() < kDegenerate) throw DomainError("point is at the origin");
            } else {
                if (1.0 - z.coords.norm() < kDegenerate) throw DomainError("point is not inside the unit ball");
                if constexpr (std::is_same_v<K, BallComplement>) {
                    if (project(z.coords, k.n).norm() < kDegenerate)
                        throw DomainError("point lies on the excluded set A");
                }
            }
        },
        kind);
}

double grauert_metric(const PointC& z, const TangentC& X, const ProfileOptions& opts) {
    require_same_dim(z.coords, X.coords, "grauert_metric");
    check_domain(GrauertPunctured{static_cast<int>(z.dim())}, z);
    return grauert_form(z.coords, X.coords, opts);
}

double bergman_metric(int N, const PointC& z, const TangentC& X) {
    require_same_dim(z.coords, X.coords, "bergman_metric");
    if (z.dim() != N) throw DomainError("bergman_metric: point dimension differs from N");
    check_domain(BergmanBall{N}, z);
    const double gap = 1.0 - z.norm_sq();
    const double zx = std::norm(inner(X.coords, z.coords));
    return (N + 1.0) * (zx / (gap * gap) + X.norm_sq() / gap);
}

double ball_complement_metric(const BallComplement& kind, const PointC& z, const TangentC& X,
                              const ProfileOptions& opts) {
    require_same_dim(z.coords, X.coords, "ball_complement_metric");
    check_domain(kind, z);
    const double pullback = grauert_form(project(z.coords, kind.n), project(X.coords, kind.n), opts);
    return pullback + bergman_metric(kind.N, z, X);
}

double metric(const MetricKind& kind, const PointC& z, const TangentC& X, const ProfileOptions& opts) {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GrauertPunctured>) {
                if (z.dim() != k.n) throw DomainError("metric: point dimension differs from n");
                return grauert_metric(z, X, opts);
            } else if constexpr (std::is_same_v<K, BergmanBall>) {
                return bergman_metric(k.N, z, X);
            } else {
                return ball_complement_metric(k, z, X, opts);
            }
        },
        kind);
}

FieldValues field_eval(const DiagonalField& F, const PointC& z) {
    if (z.dim() != F.n) throw DomainError("field_eval: point dimension differs from the field dimension");
    return field_eval_ambient(F, z);
}

FieldValues field_eval_ambient(const DiagonalField& F, const PointC& z) {
    if (z.dim() < F.n) throw DomainError("field_eval: point dimension below the field dimension");
    CVector X = CVector::Zero(z.dim());
    CVector DXX = CVector::Zero(z.dim());
    const int last = F.n - 1;
    for (int j = 0; j < last; ++j) {
        X(j) = z.coords(j);
        DXX(j) = z.coords(j);
    }
    X(last) = F.alpha * z.coords(last);
    DXX(last) = F.alpha * F.alpha * z.coords(last);
    return {TangentC(std::move(X)), TangentC(std::move(DXX))};
}

PointC flow(const DiagonalField& F, const PointC& z, Complex T) {
    if (z.dim() < F.n) throw DomainError("flow: point dimension below the field dimension");
    if (z.coords.norm() < kDegenerate) throw DomainError("flow: base point is the singular point");
    CVector Z = z.coords;
    const Complex e1 = std::exp(T);
    const Complex ea = std::exp(F.alpha * T);
    for (int j = 0; j < F.n - 1; ++j) Z(j) *= e1;
    Z(F.n - 1) *= ea;
    return PointC(std::move(Z));
}

double wedge_norm_sq(const TangentC& V, const TangentC& W) {
    require_same_dim(V.coords, W.coords, "wedge_norm_sq");
    const double g = V.norm_sq() * W.norm_sq() - std::norm(inner(V.coords, W.coords));
    return g > 0.0 ? g : 0.0;
}

CVector project(const CVector& v, int n) {
    CVector out = CVector::Zero(v.size());
    out.head(n) = v.head(n);
    return out;
}

CVector random_complex(Eigen::Index n, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return v;
}

PointC sample_S(const DiagonalField& F, double t, Rng& rng) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("sample_S: t must be positive");
    const int n = F.n;
    CVector z(n);
    z.head(n - 1) = random_complex(n - 1, rng);
    const double head_sq = z.head(n - 1).squaredNorm();
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const double theta = angle(rng);
    // |z_n|^2 = |z'|^2 / (-alpha) makes <z, X(z)> = |z'|^2 + alpha |z_n|^2 vanish
    z(n - 1) = std::polar(std::sqrt(head_sq / -F.alpha), theta);
    z *= std::sqrt(t / z.squaredNorm());
    return PointC(std::move(z));
}

PointC sample_S(const DiagonalField& F, double t, std::uint64_t seed) {
    Rng rng(seed);
    return sample_S(F, t, rng);
}

PointC sample_S_w(const BallComplement& kind, const DiagonalField& F, double t, Rng& rng) {
    if (F.n != kind.n) throw DomainError("sample_S_w: field dimension differs from n");
    if (!(t > 0.0 && t < kind.r2)) throw DomainError("sample_S_w: need 0 < t < r^2");
    const PointC head = sample_S(F, t, rng);
    CVector z = kind.w;
    z.head(kind.n) = head.coords;
    return PointC(std::move(z));
}

CMatrix random_unitary(Eigen::Index n, Rng& rng) {
    CMatrix A(n, n);
    for (Eigen::Index j = 0; j < n; ++j) A.col(j) = random_complex(n, rng);
    Eigen::HouseholderQR<CMatrix> qr(A);
    CMatrix Q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = R(j, j);
        const double m = std::abs(d);
        if (m > 0.0) Q.col(j) *= d / m;
    }
    return Q;
}

}  // namespace grauert
