#include "risbeam/quadrature.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace risbeam;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("polynomials are integrated exactly") {
    const auto r = integrate_adaptive<double>(
        [](double t) { return Complex<double>(t * t * t - 2.0 * t + 1.0, 0.0); }, 0.0, 2.0);
    CHECK(r.value.real() == Catch::Approx(4.0 - 4.0 + 2.0).margin(1e-13));
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("oscillatory kernel reproduces the Bessel function") {
    // (1/pi) * integral over (0, pi) of e^{j pi cos t} dt = J0(pi) + j*0.
    const auto r = integrate_adaptive<double>(
        [](double t) { return std::polar(1.0, pi * std::cos(t)) / pi; }, 0.0, pi, 16);
    CHECK(std::abs(r.value) == Catch::Approx(std::abs(oracles::bessel_j0(pi))).margin(1e-10));
    CHECK(r.value.real() == Catch::Approx(oracles::bessel_j0(pi)).margin(1e-10));
}

TEST_CASE("narrow spike is captured through breakpoints") {
    // A Gaussian of width 2e-4 centered off the uniform grid. Without the
    // breakpoint hints every panel would miss it and report zero error.
    const double mu = 1.2345, sig = 2e-4;
    const std::vector<double> hints = {mu - 6 * sig, mu - sig, mu, mu + sig, mu + 6 * sig};
    const auto grid = merge_breakpoints<double>(0.0, pi, hints, std::vector<double>{1.0, 2.0});
    const auto r = integrate_adaptive<double>(
        [&](double t) {
            const double z = (t - mu) / sig;
            return Complex<double>(std::exp(-z * z / 2.0), 0.0);
        },
        std::span<const double>(grid));
    // Compare at the quadrature's absolute tolerance; the spike tails
    // beyond +-6 sigma carry ~2e-9 relative mass.
    CHECK(r.value.real() == Catch::Approx(std::sqrt(2.0 * pi) * sig).margin(1e-10));
}

TEST_CASE("panel budget exhaustion raises a numerical error") {
    QuadratureOptions opts;
    opts.abs_tol = 1e-16;
    opts.max_panels = 12;
    CHECK_THROWS_AS(integrate_adaptive<double>(
                        [](double t) { return Complex<double>(std::cos(40.0 * t), 0.0); }, 0.0,
                        pi, 8, opts),
                    NumericalError);
}

TEST_CASE("breakpoint preconditions") {
    const std::vector<double> one = {0.0};
    CHECK_THROWS_AS(integrate_adaptive<double>(
                        [](double) { return Complex<double>(1.0, 0.0); },
                        std::span<const double>(one)),
                    DomainError);
    const std::vector<double> unsorted = {0.0, 2.0, 1.0};
    CHECK_THROWS_AS(integrate_adaptive<double>(
                        [](double) { return Complex<double>(1.0, 0.0); },
                        std::span<const double>(unsorted)),
                    DomainError);
}

TEST_CASE("merge_breakpoints clips, sorts, and deduplicates") {
    const std::vector<double> a = {-1.0, 0.5, 0.5, 2.0, 9.0};
    const std::vector<double> b = {1.0, 0.25};
    const auto grid = merge_breakpoints<double>(0.0, 3.0, a, b);
    REQUIRE(grid.size() >= 2);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 3.0);
    CHECK(std::is_sorted(grid.begin(), grid.end()));
    for (const double x : grid) {
        CHECK(x >= 0.0);
        CHECK(x <= 3.0);
    }
}
