#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <variant>

#include <Eigen/Dense>

#include "grauert/radial_profiles.hpp"

namespace grauert {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Seeded generator used for every randomized construction in the library.
using Rng = std::mt19937_64;

/// A point of C^n (or of the ball B^N).
struct PointC {
    CVector coords;

    PointC() = default;
    explicit PointC(CVector c) : coords(std::move(c)) {}
    PointC(std::initializer_list<Complex> c);
    Eigen::Index dim() const { return coords.size(); }
    double norm_sq() const { return coords.squaredNorm(); }
};

/// A holomorphic tangent vector at a PointC.
struct TangentC {
    CVector coords;

    TangentC() = default;
    explicit TangentC(CVector c) : coords(std::move(c)) {}
    TangentC(std::initializer_list<Complex> c);
    Eigen::Index dim() const { return coords.size(); }
    double norm_sq() const { return coords.squaredNorm(); }
};

/// Hermitian product <a, b> = sum a_i conj(b_i).
inline Complex inner(const CVector& a, const CVector& b) { return b.dot(a); }

/// X(z) = z_1 d/dz_1 + ... + z_{n-1} d/dz_{n-1} + alpha z_n d/dz_n, alpha < 0.
struct DiagonalField {
    int n = 2;
    double alpha = -1.0;

    /// Throws DomainError unless n >= 2 and alpha < 0 (finite).
    DiagonalField(int n, double alpha);
};

struct GrauertPunctured {
    int n = 2;
};

struct BergmanBall {
    int N = 2;
};

/// g_B = pi^* g + Bergman on B^N minus A, A = {z_1 = ... = z_n = 0}, with
/// the slice D_w through w in A.
struct BallComplement {
    int N = 2;
    int n = 2;
    CVector w;        // length N, first n entries zero
    double r2 = 1.0;  // 1 - |w|^2

    /// Validates 2 <= n <= N, |w| < 1, w_1 = ... = w_n = 0.
    static BallComplement make(int N, int n, CVector w);
    /// The punctured ball, n = N, w = 0.
    static BallComplement punctured_ball(int N);
};

using MetricKind = std::variant<GrauertPunctured, BergmanBall, BallComplement>;

/// Ambient dimension of points for the metric.
int ambient_dim(const MetricKind& kind);

/// Throws DomainError if z is outside the domain of the metric, or closer
/// than 1e-10 to its excluded set (origin, A, unit sphere).
void check_domain(const MetricKind& kind, const PointC& z);

/// (1 + v/|z|^2)|X|^2 + (u^2 - v/|z|^4)|<X, z>|^2 on punctured C^n.
double grauert_metric(const PointC& z, const TangentC& X, const ProfileOptions& opts = {});

/// (N+1)(|<X,z>|^2/(1-|z|^2)^2 + |X|^2/(1-|z|^2)).
double bergman_metric(int N, const PointC& z, const TangentC& X);

/// pi^* g(z, X) + bergman_metric(N, z, X).
double ball_complement_metric(const BallComplement& kind, const PointC& z, const TangentC& X,
                              const ProfileOptions& opts = {});

/// Dispatches on the metric kind.
double metric(const MetricKind& kind, const PointC& z, const TangentC& X,
              const ProfileOptions& opts = {});

struct FieldValues {
    TangentC X;    // X(z)
    TangentC DXX;  // DX(z)(X(z))
};

/// Requires dim(z) == F.n.
FieldValues field_eval(const DiagonalField& F, const PointC& z);

/// The field on C^N, N >= F.n, acting on the first F.n coordinates and
/// vanishing in the others.
FieldValues field_eval_ambient(const DiagonalField& F, const PointC& z);

/// Z(T) = (z_1 e^T, ..., z_{n-1} e^T, z_n e^{alpha T}, z_{n+1}, ..., z_N).
PointC flow(const DiagonalField& F, const PointC& z, Complex T);

/// |V|^2 |W|^2 - |<V, W>|^2, clamped at zero.
double wedge_norm_sq(const TangentC& V, const TangentC& W);

/// A point of the orthogonality locus {<z, X(z)> = 0} with |z|^2 = t.
PointC sample_S(const DiagonalField& F, double t, Rng& rng);
PointC sample_S(const DiagonalField& F, double t, std::uint64_t seed);

/// A point of S_w: an S-sample with |z~|^2 = t in the first n coordinates,
/// completed by the slice point w. Requires 0 < t < r^2.
PointC sample_S_w(const BallComplement& kind, const DiagonalField& F, double t, Rng& rng);

/// Keeps the first n coordinates and zeroes the rest (same length as v).
CVector project(const CVector& v, int n);

/// Standard complex Gaussian vector.
CVector random_complex(Eigen::Index n, Rng& rng);

/// Haar-like random unitary, by QR orthonormalization of a complex
/// Gaussian matrix with the R-diagonal phases removed.
CMatrix random_unitary(Eigen::Index n, Rng& rng);

}  // namespace grauert
