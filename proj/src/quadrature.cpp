#include "grauert/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "grauert/errors.hpp"

namespace grauert::quad {
namespace {

// Kronrod abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208946821476, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double floor;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod21(const std::function<double(double)>& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kWgk[10] * fc;
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);

    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double pair = f1[j] + f2[j];
        kronrod += kWgk[j] * pair;
        abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }

    const double mean = 0.5 * kronrod;
    double asc = kWgk[10] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 10; ++j)
        asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double result = kronrod * half;
    const double resabs = abs_sum * std::abs(half);
    const double resasc = asc * std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    const double floor = 50.0 * eps * resabs;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(floor, err);
    return {a, b, result, err, floor};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("quadrature bounds must be finite");
    if (a == b) return {};

    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod21(f, a, b);
    double total = first.value;
    double total_err = first.error;
    double total_floor = first.floor;
    heap.push(first);
    int evaluations = 21;

    auto converged = [&] {
        // Leaves whose error sits at the roundoff floor cannot be improved by splitting.
        const double target = std::max(opts.abs_tol, 50.0 * eps * std::abs(total));
        return total_err <= target || total_err <= 2.0 * total_floor;
    };

    while (!converged()) {
        if (static_cast<int>(heap.size()) >= opts.max_intervals) {
            std::ostringstream msg;
            msg << "quadrature did not converge on [" << a << ", " << b
                << "]: estimated error " << total_err;
            throw NumericError(msg.str(), total_err);
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod21(f, worst.a, mid);
        const Segment right = gauss_kronrod21(f, mid, worst.b);
        evaluations += 42;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_floor += left.floor + right.floor - worst.floor;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the leaves so the value does not carry update drift.
    Result out;
    out.intervals = static_cast<int>(heap.size());
    out.evaluations = evaluations;
    std::vector<Segment> leaves;
    leaves.reserve(heap.size());
    while (!heap.empty()) {
        leaves.push_back(heap.top());
        heap.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const auto& s : leaves) {
        out.value += s.value;
        out.error += s.error;
    }
    return out;
}

}  // namespace grauert::quad
