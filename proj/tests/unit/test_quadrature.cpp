#include <cmath>
#include <numbers>

#include "doctest.h"
#include "grauert/errors.hpp"
#include "grauert/quadrature.hpp"

using grauert::quad::integrate;

TEST_CASE("Gauss-Kronrod is exact on polynomials of moderate degree") {
    auto p = [](double x) { return 3 * std::pow(x, 9) - x * x + 2.0; };
    // antiderivative 0.3 x^10 - x^3/3 + 2x on [-1, 2]
    const double exact = (0.3 * 1024 - 8.0 / 3 + 4) - (0.3 + 1.0 / 3 - 2);
    const auto r = integrate(p, -1.0, 2.0);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-14));
    CHECK(r.intervals == 1);
}

TEST_CASE("adaptive subdivision handles a peaked integrand") {
    auto f = [](double x) { return 1.0 / (1e-4 + x * x); };
    const double exact = 2.0 * std::atan(1.0 / 1e-2) / 1e-2;
    const auto r = integrate(f, -1.0, 1.0, {1e-9});
    CHECK(std::abs(r.value - exact) < 1e-8);
    CHECK(r.intervals > 1);
    CHECK(r.error <= 1e-9 + 1e-12 * exact);
}

TEST_CASE("reversed bounds flip the sign") {
    auto f = [](double x) { return std::exp(x); };
    CHECK(integrate(f, 1.0, 0.0).value == doctest::Approx(-(std::numbers::e - 1.0)).epsilon(1e-14));
    CHECK(integrate(f, 0.5, 0.5).value == 0.0);
}

TEST_CASE("non-convergence reports the achieved error") {
    auto wild = [](double x) { return x == 0.0 ? 0.0 : std::sin(1.0 / x) / x; };
    try {
        integrate(wild, 0.0, 1.0, {1e-14, 20});
        FAIL("expected NumericError");
    } catch (const grauert::NumericError& e) {
        CHECK(e.achieved_error() > 1e-14);
    }
}
