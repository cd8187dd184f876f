#include "grauert/curvature.hpp"

#include <cmath>

#include "grauert/errors.hpp"

namespace grauert {
namespace {

constexpr int kGoldenIters = 24;
constexpr double kInitialRadius = 0.5;
constexpr double kRadiusDecay = 0.8;

struct Search {
    const CurvatureTensor& tensor;
    double sign;  // +1 maximizes, -1 minimizes
    long evaluations = 0;

    double score(const CVector& x) {
        ++evaluations;
        return sign * tensor.hsc(TangentC(x));
    }

    // Step along one real coordinate of the direction: 2j is Re x_j, 2j+1 is Im x_j.
    static CVector moved(const CVector& x, Eigen::Index coord, double tau) {
        CVector y = x;
        const Complex e = coord % 2 == 0 ? Complex(tau, 0.0) : Complex(0.0, tau);
        y(coord / 2) += e;
        return y.normalized();
    }

    void refine(CVector& x, double& best, int iters) {
        constexpr double inv_phi = 0.6180339887498949;
        double radius = kInitialRadius;
        const Eigen::Index coords = 2 * x.size();
        for (int it = 0; it < iters; ++it, radius *= kRadiusDecay) {
            for (Eigen::Index c = 0; c < coords; ++c) {
                double lo = -radius;
                double hi = radius;
                double x1 = hi - inv_phi * (hi - lo);
                double x2 = lo + inv_phi * (hi - lo);
                double f1 = score(moved(x, c, x1));
                double f2 = score(moved(x, c, x2));
                for (int g = 0; g < kGoldenIters; ++g) {
                    if (f1 < f2) {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + inv_phi * (hi - lo);
                        f2 = score(moved(x, c, x2));
                    } else {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - inv_phi * (hi - lo);
                        f1 = score(moved(x, c, x1));
                    }
                }
                const double tau = f1 > f2 ? x1 : x2;
                const double val = std::max(f1, f2);
                if (val > best) {
                    best = val;
                    x = moved(x, c, tau);
                }
            }
        }
    }
};

}  // namespace

ExtremalHsc extremal_hsc(const MetricKind& kind, const PointC& z, const ExtremalOptions& ext,
                         const ProfileOptions& opts) {
    if (ext.samples < 1) throw DomainError("extremal_hsc: need at least one sample");
    const CurvatureTensor tensor(kind, z, opts);
    Rng rng(ext.seed);

    Search up{tensor, 1.0};
    Search down{tensor, -1.0};
    CVector best_up;
    CVector best_down;
    double val_up = -INFINITY;
    double val_down = -INFINITY;
    for (int i = 0; i < ext.samples; ++i) {
        const CVector x = random_complex(z.dim(), rng).normalized();
        const double k = tensor.hsc(TangentC(x));
        if (k > val_up) {
            val_up = k;
            best_up = x;
        }
        if (-k > val_down) {
            val_down = -k;
            best_down = x;
        }
    }

    up.refine(best_up, val_up, ext.refine_iters);
    down.refine(best_down, val_down, ext.refine_iters);

    ExtremalHsc out;
    out.k_plus = val_up;
    out.k_minus = -val_down;
    out.argmax = TangentC(best_up);
    out.argmin = TangentC(best_down);
    out.evaluations = ext.samples + up.evaluations + down.evaluations;
    return out;
}

}  // namespace grauert
