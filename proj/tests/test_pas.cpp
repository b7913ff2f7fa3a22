#include "risbeam/pas.hpp"

#include "oracles.hpp"
#include "risbeam/special.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace risbeam;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double deg = pi / 180.0;

double integrate_density(const PasModel<double>& model) {
    // Independent oracle: adaptive Simpson over segments split at the
    // model's own breakpoints (kinks and spike shoulders).
    auto bps = model.density_breakpoints();
    std::vector<double> pts = {1e-12};
    for (const double b : bps)
        if (b > 0.0 && b < pi) pts.push_back(b);
    pts.push_back(pi - 1e-12);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        total += oracles::adaptive_simpson([&](double t) { return model.density(t); }, pts[i],
                                           pts[i + 1], 1e-13);
    }
    return total;
}
}  // namespace

TEST_CASE("densities integrate to one over the parameter grid") {
    for (const double mu : {pi / 6, pi / 4, pi / 2}) {
        for (const double sigma_deg : {1.0, 3.0, 6.0, 17.0, 23.0, 40.0}) {
            CAPTURE(mu, sigma_deg);
            const auto gauss = PasModel<double>::truncated_gaussian(mu, sigma_deg * deg);
            CHECK(integrate_density(gauss) == Catch::Approx(1.0).margin(1e-8));
            const auto lapl = PasModel<double>::truncated_laplacian(mu, sigma_deg * deg);
            CHECK(integrate_density(lapl) == Catch::Approx(1.0).margin(1e-8));
        }
    }
}

TEST_CASE("gaussian peak matches the printed normalization at mu = pi/2") {
    // For a symmetric truncation window the normalization constant is
    // K = 1 / (sqrt(pi) [1 - 2 Q(pi / (2 sigma))]) and the peak density
    // K / (sqrt(2) sigma).
    const double sigma = 5 * deg;
    const auto model = PasModel<double>::truncated_gaussian(pi / 2, sigma);
    const double k = 1.0 / (std::sqrt(pi) * (1.0 - 2.0 * gaussian_q(pi / (2.0 * sigma))));
    CHECK(model.density(pi / 2) ==
          Catch::Approx(k / (std::numbers::sqrt2 * sigma)).epsilon(1e-3));
}

TEST_CASE("densities are symmetric about a centered mean") {
    const auto gauss = PasModel<double>::truncated_gaussian(pi / 2, 10 * deg);
    const auto lapl = PasModel<double>::truncated_laplacian(pi / 2, 10 * deg);
    for (double x = 0.05; x < pi / 2; x += 0.17) {
        CAPTURE(x);
        CHECK(gauss.density(pi / 2 + x) == Catch::Approx(gauss.density(pi / 2 - x)).epsilon(1e-12));
        CHECK(lapl.density(pi / 2 + x) == Catch::Approx(lapl.density(pi / 2 - x)).epsilon(1e-12));
    }
}

TEST_CASE("densities decay monotonically away from the mean") {
    const auto gauss = PasModel<double>::truncated_gaussian(pi / 4, 6 * deg);
    const auto lapl = PasModel<double>::truncated_laplacian(pi / 4, 23 * deg);
    for (const auto& model : {gauss, lapl}) {
        double prev = model.density(pi / 4);
        for (double x = 0.01; pi / 4 + x < pi; x += 0.05) {
            const double d = model.density(pi / 4 + x);
            CHECK(d <= prev * (1.0 + 1e-14));
            prev = d;
        }
    }
}

TEST_CASE("exponential model carries no density") {
    const auto model = PasModel<double>::exponential_correlation(0.5);
    CHECK_FALSE(model.has_density());
    CHECK(model.kappa() == 0.5);
    CHECK_THROWS_AS(model.density(1.0), FamilyError);
    CHECK_THROWS_AS(PasModel<double>::exponential_correlation(1.0), DomainError);
    CHECK_THROWS_AS(PasModel<double>::exponential_correlation(-0.1), DomainError);
}

TEST_CASE("density argument must lie inside the half-space") {
    const auto model = PasModel<double>::truncated_gaussian(pi / 2, 6 * deg);
    CHECK_THROWS_AS(model.density(0.0), DomainError);
    CHECK_THROWS_AS(model.density(pi), DomainError);
    CHECK_THROWS_AS(model.density(-0.3), DomainError);
}

TEST_CASE("constructor rejects out-of-domain parameters") {
    CHECK_THROWS_AS(PasModel<double>::truncated_gaussian(0.0, 6 * deg), DomainError);
    CHECK_THROWS_AS(PasModel<double>::truncated_gaussian(pi, 6 * deg), DomainError);
    CHECK_THROWS_AS(PasModel<double>::truncated_gaussian(pi / 2, 0.0), DomainError);
    // Below 0.01 degrees the spectrum degenerates towards line-of-sight.
    CHECK_THROWS_AS(PasModel<double>::truncated_gaussian(pi / 2, 0.005 * deg), DomainError);
    CHECK_THROWS_AS(PasModel<double>::truncated_laplacian(pi / 2, 0.005 * deg), DomainError);
    CHECK_NOTHROW(PasModel<double>::truncated_gaussian(pi / 2, 0.02 * deg));
}

TEST_CASE("tabulated spectrum interpolates linearly and renormalizes") {
    // A triangle on [1, 2] with peak 10 at 1.5: area 5, so the normalized
    // peak is 2 and the density at 1.25 is 1.
    const auto model = PasModel<double>::tabulated({{1.0, 0.0}, {1.5, 10.0}, {2.0, 0.0}});
    CHECK(model.family() == PasFamily::tabulated);
    CHECK(model.density(1.5) == Catch::Approx(2.0).epsilon(1e-9));
    CHECK(model.density(1.25) == Catch::Approx(1.0).epsilon(1e-9));
    CHECK(model.density(0.5) == 0.0);
    CHECK(model.density(2.5) == 0.0);
    CHECK(integrate_density(model) == Catch::Approx(1.0).margin(1e-8));
}

TEST_CASE("tabulated spectrum validation") {
    using Samples = std::vector<std::array<double, 2>>;
    CHECK_THROWS_AS(PasModel<double>::tabulated(Samples{{1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(PasModel<double>::tabulated(Samples{{1.0, 1.0}, {0.5, 1.0}}), DomainError);
    CHECK_THROWS_AS(PasModel<double>::tabulated(Samples{{1.0, 1.0}, {2.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(PasModel<double>::tabulated(Samples{{-1.0, 1.0}, {2.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(PasModel<double>::tabulated(Samples{{1.0, 0.0}, {2.0, 0.0}}), DomainError);
}
