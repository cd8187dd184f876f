#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "grauert/metrics.hpp"

// Curvature three ways:
//   * closed forms at points of the orthogonality locus S (or S_w),
//   * a finite-difference Gaussian curvature of a leaf's pullback density,
//   * the Kahler curvature tensor built from the metric potential, giving
//     holomorphic sectional curvature (HSC) in any direction.
//
// Gaussian curvature of a density h|dT|^2 is -2 h^{-1} d dbar log h
// throughout; HSC is normalized so it reduces to that on one-dimensional
// metrics (the Poincare density (1-|T|^2)^{-2} has curvature -4).

namespace grauert {

/// Pullback h(T) of a metric along the leaf T -> flow(field, base, T).
struct LeafDensity {
    MetricKind kind;
    DiagonalField field;
    PointC base;
    std::function<double(Complex)> evaluator;

    double operator()(Complex T) const { return evaluator(T); }
};

LeafDensity make_leaf_density(const MetricKind& kind, const DiagonalField& F, const PointC& z,
                              const ProfileOptions& opts = {});

/// h(T) for the leaf through z; throws DomainError when Z(T) leaves the
/// metric's domain.
double leaf_density(const MetricKind& kind, const DiagonalField& F, const PointC& z, Complex T,
                    const ProfileOptions& opts = {});

/// d h / dT at T = 0 for the Grauert metric, split into its three groups.
struct DensityGradient {
    Complex f1;
    Complex f2;
    Complex f3;
    Complex sum;
};

DensityGradient leaf_density_gradient(const DiagonalField& F, const PointC& z,
                                      const ProfileOptions& opts = {});

/// Leafwise curvature at a point of S (Grauert) or S_w (ball complement).
/// Throws DomainError if |<z, X(z)>| >= 1e-8 |z||X(z)| or for the Bergman kind.
double kappa_closed_on_S(const MetricKind& kind, const DiagonalField& F, const PointC& z,
                         const ProfileOptions& opts = {});

/// The factorization h_B(0) ddbar h_B(0) - |d h_B(0)|^2 = I * J at S_w.
struct BallFactors {
    double h0 = 0.0;
    double I = 0.0;
    double J = 0.0;
    double P = 0.0;
    double Q = 0.0;
    double kappa = 0.0;  // -2 I J / h0^3
};

BallFactors ball_complement_factors(const BallComplement& kind, const DiagonalField& F,
                                    const PointC& z, const ProfileOptions& opts = {});

namespace fd {

/// Five-point Laplacian at T = 0, Richardson-extrapolated over the steps
/// step, step/2, ..., step/2^(levels-1).
double laplacian(const std::function<double(Complex)>& f, double step, int levels = 2);

/// d/dT = (d/dx - i d/dy)/2 at T = 0 by central differences, extrapolated.
Complex wirtinger(const std::function<double(Complex)>& f, double step, int levels = 2);

/// -2 h(0)^{-1} d dbar log h at T = 0, with d dbar = Laplacian / 4.
double gaussian_curvature(const std::function<double(Complex)>& h, double step, int levels = 2);

}  // namespace fd

/// Parameter step used by kappa_fd: step / |X(z)|, capped at 0.05 / max(1, |alpha|).
double leaf_step(const DiagonalField& F, const PointC& z, double step);

/// Finite-difference leafwise Gaussian curvature at z.
double kappa_fd(const MetricKind& kind, const DiagonalField& F, const PointC& z, double step = 1e-3,
                const ProfileOptions& opts = {});

/// Kahler curvature tensor of the metric at one point, built from the
/// derivatives of its radial potentials. Constructing it evaluates v once;
/// directions are then cheap.
class CurvatureTensor {
public:
    CurvatureTensor(const MetricKind& kind, const PointC& z, const ProfileOptions& opts = {});

    /// G(i, j) = g_{i jbar}; g(X, X) = sum G(i, j) X_i conj(X_j).
    const CMatrix& metric_matrix() const { return G_; }

    struct Terms {
        double g_xx = 0.0;       // g(X, X)
        double fourth = 0.0;     // sum d_k d_lbar g_{i jbar} X_i Xbar_j X_k Xbar_l
        CVector first;           // b_q = sum d_k g_{i qbar} X_i X_k
        double correction = 0.0; // b^H conj(G)^{-1} b
    };

    Terms terms(const TangentC& X) const;

    /// R(X, Xbar, X, Xbar).
    double riemann(const TangentC& X) const;

    /// Holomorphic sectional curvature 2 R(X, Xbar, X, Xbar) / g(X, X)^2.
    double hsc(const TangentC& X) const;

    const PointC& point() const { return z_; }

private:
    struct RadialTerm {
        int m;  // acts on coordinates [0, m)
        double d1, d2, d3, d4;
    };

    PointC z_;
    std::vector<RadialTerm> radial_;
    CMatrix G_;
    Eigen::LLT<CMatrix> conj_llt_;
};

/// Metric matrix g_{i jbar}(z) for the kind; same as CurvatureTensor(...).metric_matrix().
CMatrix metric_matrix(const MetricKind& kind, const PointC& z, const ProfileOptions& opts = {});

double hsc(const MetricKind& kind, const PointC& z, const TangentC& X, const ProfileOptions& opts = {});

struct ExtremalOptions {
    int samples = 256;
    int refine_iters = 50;
    std::uint64_t seed = 42;
};

/// Inner estimates of K- = inf HSC and K+ = sup HSC at a point:
/// k_minus >= true K-, k_plus <= true K+.
struct ExtremalHsc {
    double k_minus = 0.0;
    double k_plus = 0.0;
    TangentC argmin;
    TangentC argmax;
    long evaluations = 0;
};

/// Seeded direction sampling followed by coordinate-wise golden-section
/// refinement in the real coordinates of the direction. Deterministic for a
/// fixed seed.
ExtremalHsc extremal_hsc(const MetricKind& kind, const PointC& z, const ExtremalOptions& ext = {},
                         const ProfileOptions& opts = {});

struct CurvatureReport {
    PointC point;
    std::optional<TangentC> direction;
    std::optional<double> kappa_closed;
    double kappa_fd = 0.0;
    std::optional<double> hsc;
    double tolerance = 1e-3;
    std::map<std::string, double> residuals;

    /// kappa_closed and kappa_fd agree within tolerance (relative), when both exist.
    bool consistent() const;
};

/// Leaf curvature by FD, plus the closed form when z is on S (S_w) and the
/// HSC along the field direction.
CurvatureReport curvature_report(const MetricKind& kind, const DiagonalField& F, const PointC& z,
                                 double step = 1e-3, const ProfileOptions& opts = {});

}  // namespace grauert
