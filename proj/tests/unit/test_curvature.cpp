#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "grauert/curvature.hpp"
#include "grauert/errors.hpp"
#include "grauert/leaf_profiles.hpp"
#include "oracles.hpp"

using namespace grauert;
using namespace std::complex_literals;

namespace {

// g_{i jbar}(z) recovered from the scalar metric by polarization.
CMatrix polarized_matrix(const MetricKind& kind, const CVector& z) {
    const Eigen::Index n = z.size();
    auto g = [&](const CVector& X) { return metric(kind, PointC(z), TangentC(X), {1e-13}); };
    CMatrix G(n, n);
    for (Eigen::Index i = 0; i < n; ++i) G(i, i) = g(CVector::Unit(n, i));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double gi = G(i, i).real();
            const double gj = G(j, j).real();
            const double re = (g(CVector::Unit(n, i) + CVector::Unit(n, j)) - gi - gj) / 2.0;
            const double im = (g(CVector::Unit(n, i) + 1i * CVector::Unit(n, j)) - gi - gj) / 2.0;
            G(i, j) = {re, im};
        }
    return G;
}

// Curvature tensor terms along X by finite differences of the scalar metric.
struct FdTerms {
    double g_xx;
    double fourth;
    CVector first;
    double correction;
    double hsc;
};

FdTerms fd_terms(const MetricKind& kind, const CVector& z, const CVector& X, double h) {
    FdTerms out;
    out.g_xx = metric(kind, PointC(z), TangentC(X), {1e-13});
    // d_zeta dbar_zeta of g(z + zeta X, X) = Laplacian / 4
    auto phi = [&](Complex s) { return metric(kind, PointC(CVector(z + s * X)), TangentC(X), {1e-13}); };
    auto lap = [&](double s) {
        return (phi({s, 0.0}) + phi({-s, 0.0}) + phi({0.0, s}) + phi({0.0, -s}) - 4.0 * phi(0.0)) / (s * s);
    };
    out.fourth = (4.0 * lap(h / 2) - lap(h)) / 3.0 / 4.0;
    // b_q = d_zeta sum_i g_{i qbar}(z + zeta X) X_i
    const Eigen::Index n = z.size();
    out.first = CVector(n);
    for (Eigen::Index q = 0; q < n; ++q) {
        auto comp = [&](Complex s) { return (polarized_matrix(kind, z + s * X).transpose() * X)(q); };
        const Complex dr = oracle::wirtinger4([&](Complex s) { return comp(s).real(); }, h);
        const Complex di = oracle::wirtinger4([&](Complex s) { return comp(s).imag(); }, h);
        out.first(q) = dr + 1i * di;
    }
    const CMatrix G = polarized_matrix(kind, z);
    out.correction = (out.first.adjoint() * G.conjugate().inverse() * out.first)(0).real();
    out.hsc = 2.0 * (out.correction - out.fourth) / (out.g_xx * out.g_xx);
    return out;
}

double rel_scale(double a, double scale) { return std::abs(a) / scale; }

}  // namespace

TEST_CASE("leaf density at T = 0") {
    Rng rng(1);
    const DiagonalField F(3, -2.0);
    const PointC z = sample_S(F, 0.8, rng);
    const double v = eval_v(0.8);
    const double X2 = field_eval(F, z).X.norm_sq();
    CHECK(oracle::rel(leaf_density(GrauertPunctured{3}, F, z, 0.0), (1.0 + v / 0.8) * X2) < 1e-13);

    const CVector w = (CVector(3) << 0.0, 0.0, 0.5i).finished();
    const BallComplement kind = BallComplement::make(3, 2, w);
    const DiagonalField F2(2, -1.0);
    const PointC zw = sample_S_w(kind, F2, 0.3, rng);
    const double vw = eval_v(0.3);
    const double Xw = field_eval_ambient(F2, zw).X.norm_sq();
    CHECK(oracle::rel(leaf_density(kind, F2, zw, 0.0), (1.0 + vw / 0.3 + 4.0 / (0.75 - 0.3)) * Xw) < 1e-12);

    for (int k = 0; k < 20; ++k) {
        const PointC p(random_complex(3, rng));
        CHECK(leaf_density(GrauertPunctured{3}, F, p, 0.0) >= field_eval(F, p).X.norm_sq());
    }
    CHECK_THROWS_AS(leaf_density(kind, F2, zw, 5.0), DomainError);
}

TEST_CASE("density gradient") {
    Rng rng(2);
    const DiagonalField F(3, -1.5);
    const PointC zs = sample_S(F, 2.0, rng);
    const DensityGradient gs = leaf_density_gradient(F, zs);
    const FieldValues fv = field_eval(F, zs);
    CHECK(std::abs(gs.f1) < 1e-12 * std::abs(gs.sum));
    CHECK(std::abs(gs.f3) < 1e-12 * std::abs(gs.sum));
    CHECK(std::abs(gs.sum - (1.0 + eval_v(2.0) / 2.0) * inner(fv.DXX.coords, fv.X.coords)) < 1e-12 * std::abs(gs.sum));

    for (int k = 0; k < 10; ++k) {
        const PointC z(random_complex(3, rng));
        const DensityGradient g = leaf_density_gradient(F, z, {1e-13});
        auto h = [&](Complex T) { return leaf_density(GrauertPunctured{3}, F, z, T, {1e-13}); };
        const Complex fd = oracle::wirtinger4(h, 1e-5);
        CHECK(std::abs(g.sum - fd) < 1e-4 * std::abs(g.sum));
        CHECK(std::abs(g.f1 + g.f2 + g.f3 - g.sum) < 1e-14 * std::abs(g.sum));
    }

    // d|Z|^2/dT = <X(Z), Z> along the leaf
    const PointC axis{1.3, 0.0, 0.0};
    const PointC p(random_complex(3, rng));
    for (const PointC& z : {axis, p}) {
        auto r2 = [&](Complex T) { return flow(F, z, T).norm_sq(); };
        const Complex expected = inner(field_eval(F, z).X.coords, z.coords);
        CHECK(std::abs(oracle::wirtinger4(r2, 1e-4) - expected) < 1e-8 * std::abs(expected));
    }
}

TEST_CASE("closed form on S matches the profile") {
    for (double alpha : {-0.5, -1.0, -2.0, -7.0}) {
        for (int n : {2, 3}) {
            const DiagonalField F(n, alpha);
            const PointC z = sample_S(F, 1.0, 17);
            const double k = kappa_closed_on_S(GrauertPunctured{n}, F, z);
            CHECK(oracle::rel(k, kappa_profile_cn(1.0)) < 1e-10);
            CHECK(k == doctest::Approx(-0.4310940959832316).epsilon(1e-10));
        }
    }
    const DiagonalField F(2, -1.0);
    CHECK_THROWS_AS(kappa_closed_on_S(GrauertPunctured{2}, F, PointC{1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(kappa_closed_on_S(BergmanBall{2}, F, PointC{0.3, 0.3}), DomainError);
}

TEST_CASE("alpha invariance across t") {
    for (double t : {1e-3, 0.2, 5.0, 300.0}) {
        double lo = 1e300;
        double hi = -1e300;
        for (double alpha : {-0.5, -1.0, -3.0, -11.0}) {
            const DiagonalField F(3, alpha);
            const double k = kappa_closed_on_S(GrauertPunctured{3}, F, sample_S(F, t, 5));
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
        CAPTURE(t);
        CHECK((hi - lo) / std::abs(hi) < 1e-10);
    }
}

TEST_CASE("ball complement closed form") {
    const BallComplement ball = BallComplement::punctured_ball(2);
    const DiagonalField F(2, -1.0);
    Rng rng(8);
    const PointC z = sample_S_w(ball, F, 0.5, rng);
    const double k = kappa_closed_on_S(ball, F, z);
    CHECK(k < 0.0);
    CHECK(oracle::rel(k, kappa_profile_ball(ProfileSpec::ball_complement(2, 1.0), 0.5)) < 1e-10);

    const CVector w = (CVector(4) << 0.0, 0.0, 0.3, -0.5i).finished();
    const BallComplement slice = BallComplement::make(4, 2, w);
    const DiagonalField F2(2, -2.5);
    for (double t : {0.05, 0.3, 0.6}) {
        const PointC zw = sample_S_w(slice, F2, t, rng);
        CHECK(oracle::rel(kappa_closed_on_S(slice, F2, zw), kappa_profile_ball(ProfileSpec::ball_complement(4, slice.r2), t)) < 1e-10);
    }
}

TEST_CASE("ball factorization against finite differences") {
    const CVector w = (CVector(3) << 0.0, 0.0, 0.4).finished();
    const BallComplement kind = BallComplement::make(3, 2, w);
    const DiagonalField F(2, -1.3);
    Rng rng(4);
    for (double t : {0.1, 0.4, 0.7}) {
        CAPTURE(t);
        const PointC z = sample_S_w(kind, F, t, rng);
        const BallFactors bf = ball_complement_factors(kind, F, z, {1e-13});
        auto h = [&](Complex T) { return leaf_density(kind, F, z, T, {1e-13}); };
        const double step = 0.05 * std::sqrt(kind.r2 - t) / field_eval_ambient(F, z).X.coords.norm();
        const double ddbar = fd::laplacian(h, step, 4) / 4.0;
        const Complex d = fd::wirtinger(h, step, 4);
        const double lhs = bf.h0 * ddbar - std::norm(d);
        CHECK(oracle::rel(lhs, bf.I * bf.J) < 1e-8);
        CHECK(oracle::rel(bf.h0, h(0.0)) < 1e-14);
        CHECK(oracle::rel(bf.kappa, -2.0 * bf.I * bf.J / std::pow(bf.h0, 3)) < 1e-14);
        CHECK(oracle::rel(bf.kappa, -bf.P / bf.Q) < 1e-12);

        // |X|^2 |<DX(X), z>|^2 = |X|^6 = |z|^2 |DX(X) ^ X|^2 on the slice
        const PointC zt(CVector(z.coords.head(2)));
        const FieldValues fv = field_eval(F, zt);
        const double X2 = fv.X.norm_sq();
        CHECK(oracle::rel(X2 * std::norm(inner(fv.DXX.coords, zt.coords)), X2 * X2 * X2) < 1e-10);
        CHECK(oracle::rel(zt.norm_sq() * wedge_norm_sq(fv.DXX, fv.X), X2 * X2 * X2) < 1e-10);
    }
}

TEST_CASE("finite differences against the closed form") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> logt(-2.0, 2.0);
    const double alphas[] = {-0.5, -1.0, -3.0};
    for (int k = 0; k < 50; ++k) {
        const double t = std::pow(10.0, logt(rng));
        const DiagonalField F(2 + k % 2, alphas[k % 3]);
        const PointC z = sample_S(F, t, rng);
        const double closed = kappa_closed_on_S(GrauertPunctured{F.n}, F, z);
        const double fdk = kappa_fd(GrauertPunctured{F.n}, F, z);
        CAPTURE(t);
        CAPTURE(F.alpha);
        CHECK(std::abs(fdk - closed) < 1e-3 * std::abs(closed));
    }
    for (double alpha : {-0.5, -1.0, -2.0}) {
        const DiagonalField F(2, alpha);
        const PointC z = sample_S(F, 1.0, 3);
        CHECK(std::abs(kappa_fd(GrauertPunctured{2}, F, z) - kappa_profile_cn(1.0)) < 1e-4 * std::abs(kappa_profile_cn(1.0)));
    }
}

TEST_CASE("finite-difference curvature of model densities") {
    auto poincare = [](Complex T) { return 1.0 / std::pow(1.0 - std::norm(T), 2); };
    CHECK(std::abs(fd::gaussian_curvature(poincare, 1e-2, 3) + 4.0) < 1e-6);

    // n = 1: leaf z e^T of the identity field, metric (1 + t u^2)|dz|^2
    for (double t : {0.05, 1.0, 6.0}) {
        const Complex z0 = std::sqrt(t) * std::exp(0.4i);
        auto h = [&](Complex T) {
            const Complex Z = z0 * std::exp(T);
            return grauert_metric(PointC{Z}, TangentC{Z}, {1e-13});
        };
        CHECK(std::abs(fd::gaussian_curvature(h, 1e-3) - kappa_profile_cstar(t).f) < 1e-4 * std::abs(kappa_profile_cstar(t).f));
    }
}

TEST_CASE("stencil outside the domain") {
    const BallComplement ball = BallComplement::punctured_ball(2);
    const DiagonalField F(2, -1.0);
    Rng rng(0);
    const PointC z = sample_S_w(ball, F, 1.0 - 1e-6, rng);
    CHECK_THROWS_AS(kappa_fd(ball, F, z, 0.5), DomainError);
}

TEST_CASE("report") {
    const DiagonalField F(2, -1.0);
    const PointC z = sample_S(F, 2.0, 9);
    const CurvatureReport r = curvature_report(GrauertPunctured{2}, F, z);
    REQUIRE(r.kappa_closed.has_value());
    REQUIRE(r.hsc.has_value());
    CHECK(r.consistent());
    CHECK(*r.hsc >= *r.kappa_closed - 1e-6);
    const CurvatureReport off = curvature_report(GrauertPunctured{2}, F, PointC{1.0, 0.3});
    CHECK_FALSE(off.kappa_closed.has_value());
    CHECK(off.consistent());
}

TEST_CASE("Bergman ball has constant holomorphic sectional curvature") {
    Rng rng(6);
    for (int N : {1, 2, 3, 4}) {
        for (int k = 0; k < 10; ++k) {
            const CVector z = random_complex(N, rng);
            const PointC p(CVector(z * (0.9 * std::sqrt(k / 10.0) / z.norm())));
            const TangentC X(random_complex(N, rng));
            CAPTURE(N);
            CHECK(std::abs(hsc(BergmanBall{N}, p, X) + 4.0 / (N + 1)) < 1e-6);
        }
    }
}

TEST_CASE("one-dimensional normalization") {
    for (double r : {0.1, 0.5, 0.8}) CHECK(std::abs(hsc(BergmanBall{1}, PointC{r}, TangentC{1.0}) + 2.0) < 1e-6);
    for (double t : {0.01, 0.5, 1.0, 3.0, 100.0}) {
        const PointC z{std::sqrt(t) * std::exp(1.1i)};
        CAPTURE(t);
        CHECK(std::abs(hsc(GrauertPunctured{1}, z, TangentC{0.7i}) - kappa_profile_cstar(t).f) < 1e-6);
    }
}

TEST_CASE("metric matrix reproduces the scalar metric") {
    Rng rng(12);
    const CVector w = (CVector(3) << 0.0, 0.0, 0.2).finished();
    const MetricKind kinds[] = {GrauertPunctured{3}, BergmanBall{3}, BallComplement::make(3, 2, w)};
    for (const auto& kind : kinds) {
        const CVector z = 0.5 * random_complex(3, rng).normalized();
        const CMatrix G = metric_matrix(kind, PointC(z));
        CHECK((G - G.adjoint()).norm() < 1e-14 * G.norm());
        CHECK((G - polarized_matrix(kind, z)).norm() < 1e-12 * G.norm());
        const CVector X = random_complex(3, rng);
        CHECK(oracle::rel((X.adjoint() * G.transpose() * X)(0).real(), metric(kind, PointC(z), TangentC(X))) < 1e-13);
    }
}

TEST_CASE("tensor components against finite differences of the metric") {
    Rng rng(13);
    const CVector w = (CVector(3) << 0.0, 0.0, 0.3).finished();
    const MetricKind kinds[] = {GrauertPunctured{2}, GrauertPunctured{3}, BergmanBall{2}, BallComplement::make(3, 2, w)};
    for (const auto& kind : kinds) {
        for (double radius : {0.2, 0.6}) {
            const int n = ambient_dim(kind);
            CVector z = random_complex(n, rng).normalized() * radius;
            if (n == 3 && std::holds_alternative<BallComplement>(kind)) z(2) = 0.3;
            const CVector X = random_complex(n, rng);
            const CurvatureTensor tensor(kind, PointC(z), {1e-13});
            const auto terms = tensor.terms(TangentC(X));
            const FdTerms fd = fd_terms(kind, z, X, 1e-3);
            CAPTURE(radius);
            CAPTURE(n);
            CHECK(oracle::rel(terms.g_xx, fd.g_xx) < 1e-13);
            CHECK(rel_scale(terms.fourth - fd.fourth, std::abs(fd.fourth) + fd.g_xx) < 1e-4);
            CHECK((terms.first - fd.first).norm() < 1e-4 * (fd.first.norm() + fd.g_xx));
            CHECK(rel_scale(terms.correction - fd.correction, std::abs(fd.correction) + fd.g_xx) < 1e-4);
            CHECK(std::abs(tensor.hsc(TangentC(X)) - fd.hsc) < 1e-4 * (1.0 + std::abs(fd.hsc)));
        }
    }
}

TEST_CASE("hsc invariances") {
    Rng rng(14);
    for (int k = 0; k < 20; ++k) {
        const CVector z = random_complex(3, rng);
        const CVector X = random_complex(3, rng);
        const Complex lambda = random_complex(1, rng)(0);
        const double base = hsc(GrauertPunctured{3}, PointC(z), TangentC(X));
        CHECK(std::abs(hsc(GrauertPunctured{3}, PointC(z), TangentC(CVector(lambda * X))) - base) < 1e-10 * std::abs(base));
        const CMatrix U = random_unitary(3, rng);
        CHECK(std::abs(hsc(GrauertPunctured{3}, PointC(CVector(U * z)), TangentC(CVector(U * X))) - base) < 1e-10 * std::abs(base));
    }
}

TEST_CASE("leaf curvature bounds the holomorphic sectional curvature from below") {
    Rng rng(15);
    for (double t : {1e-3, 0.1, 0.31, 1.0, 10.0, 1e3}) {
        for (double alpha : {-0.5, -1.0, -4.0}) {
            const DiagonalField F(2, alpha);
            const PointC z = sample_S(F, t, rng);
            const double k = kappa_closed_on_S(GrauertPunctured{2}, F, z);
            CAPTURE(t);
            CHECK(hsc(GrauertPunctured{2}, z, field_eval(F, z).X) + 1e-6 >= k);
        }
    }
}

TEST_CASE("orthogonal directions beyond the threshold") {
    const double t_r = find_eta_threshold().t_r;
    Rng rng(16);
    std::uniform_real_distribution<double> scale(2.0, 10.0);
    for (int k = 0; k < 30; ++k) {
        const double t = scale(rng) * t_r;
        const CVector z = random_complex(3, rng).normalized() * std::sqrt(t);
        CVector V = random_complex(3, rng);
        V -= inner(V, z) / z.squaredNorm() * z;
        const double K = hsc(GrauertPunctured{3}, PointC(z), TangentC(V));
        CHECK(K < 0.0);
        const double v = eval_v(t);
        const double u = eval_u(t, 0).u;
        CHECK(K == doctest::Approx(-4.0 * (t * t * u * u - v) / ((t + v) * (t + v))).epsilon(1e-9));
    }
}

TEST_CASE("extremal estimates") {
    Rng rng(17);
    const PointC small(CVector(random_complex(2, rng).normalized() * 1e-2));
    const ExtremalHsc e_small = extremal_hsc(GrauertPunctured{2}, small);
    CHECK(e_small.k_plus >= kappa_profile_cn(1e-4));
    CHECK(e_small.k_plus > 0.0);
    CHECK(e_small.k_minus <= e_small.k_plus);
    CHECK(std::abs(hsc(GrauertPunctured{2}, small, e_small.argmax) - e_small.k_plus) < 1e-12 * std::abs(e_small.k_plus));

    const double t = 4.0 * find_eta_threshold().t_r;
    const CVector z = random_complex(2, rng).normalized() * std::sqrt(t);
    const ExtremalHsc e_far = extremal_hsc(GrauertPunctured{2}, PointC(z));
    CHECK(e_far.k_minus < 0.0);

    const CMatrix U = random_unitary(2, rng);
    const ExtremalHsc e_rot = extremal_hsc(GrauertPunctured{2}, PointC(CVector(U * z)));
    CHECK(std::abs(e_rot.k_minus - e_far.k_minus) < 1e-4 * std::max(1.0, std::abs(e_far.k_minus)));
    CHECK(std::abs(e_rot.k_plus - e_far.k_plus) < 1e-4 * std::max(1.0, std::abs(e_far.k_plus)));

    for (int k = 0; k < 50; ++k) {
        const double K = hsc(GrauertPunctured{2}, PointC(z), TangentC(random_complex(2, rng)));
        CHECK(K >= e_far.k_minus - 1e-9);
        CHECK(K <= e_far.k_plus + 1e-9);
    }

    const ExtremalHsc again = extremal_hsc(GrauertPunctured{2}, PointC(z));
    CHECK(again.k_minus == e_far.k_minus);
    CHECK(again.k_plus == e_far.k_plus);
}
