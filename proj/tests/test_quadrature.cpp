#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "demoivre/errors.hpp"
#include "demoivre/laws.hpp"
#include "demoivre/numerics.hpp"
#include "demoivre/quadrature.hpp"
#include "oracle.hpp"

using namespace demoivre;
using namespace demoivre::quadrature;

namespace {
double density(double x) { return laws::gaussian_density(x); }
} // namespace

TEST_CASE("panel weights are normalized") {
    for (int d = 1; d <= 4; ++d) {
        auto rule = NewtonCotesRule::of_degree(d);
        double sum = 0.0;
        for (double w : rule.panel_weights())
            sum += w;
        CHECK(std::abs(sum - 1.0) < 1e-15);
        CHECK(rule.panel_weights().size() == static_cast<std::size_t>(d) + 1);
    }
    CHECK_THROWS_AS(NewtonCotesRule::of_degree(0), DomainError);
    CHECK_THROWS_AS(NewtonCotesRule::of_degree(5), DomainError);
}

TEST_CASE("monomial exactness on the unit interval") {
    for (int d = 1; d <= 4; ++d) {
        auto rule = NewtonCotesRule::of_degree(d);
        int exact_degree = (d % 2 == 0) ? d + 1 : d;
        for (int j = 0; j <= exact_degree; ++j) {
            double value = integrate([j](double x) { return std::pow(x, j); }, 0.0,
                                     1.0, rule, 1);
            CHECK(std::abs(value - 1.0 / (j + 1)) < 1e-14);
        }
    }
}

TEST_CASE("simpson is exact on cubics") {
    auto simpson = NewtonCotesRule::of_degree(2);
    double v = integrate([](double x) { return x * x * x; }, 0.0, 1.0, simpson, 1);
    CHECK(std::abs(v - 0.25) < 1e-15);
}

TEST_CASE("boole with 64 panels nails the 1-sigma half integral") {
    auto boole = NewtonCotesRule::of_degree(4);
    double v = integrate(density, 0.0, 1.0, boole, 64);
    // oracle: the alternating series at depth 40
    CHECK(std::abs(v - numerics::gaussian_integral_series(1.0, 40)) < 1e-12);
    CHECK(std::abs(v - 0.3413447460685429) < 1e-12);
}

TEST_CASE("degenerate and invalid intervals") {
    auto simpson = NewtonCotesRule::of_degree(2);
    CHECK(integrate([](double x) { return std::sin(x) + 3.0; }, 1.7, 1.7, simpson, 5) ==
          0.0);
    CHECK_THROWS_AS(integrate(density, 1.0, 0.0, simpson, 4), DomainError);
    CHECK_THROWS_AS(integrate(density, 0.0, 1.0, simpson, 0), DomainError);
}

TEST_CASE("non-finite integrand names the offending node") {
    auto trapezoid = NewtonCotesRule::of_degree(1);
    try {
        integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, trapezoid, 2);
        FAIL("expected NonFiniteResultError");
    } catch (const NonFiniteResultError& e) {
        CHECK(e.node() == 0.5);
    }
}

TEST_CASE("degree exactness over random subintervals") {
    std::mt19937 rng(1733);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        double a = dist(rng), b = dist(rng);
        if (a > b)
            std::swap(a, b);
        for (int d = 1; d <= 4; ++d) {
            auto rule = NewtonCotesRule::of_degree(d);
            int exact_degree = (d % 2 == 0) ? d + 1 : d;
            for (int j = 0; j <= exact_degree; ++j) {
                double value =
                    integrate([j](double x) { return std::pow(x, j); }, a, b, rule, 3);
                double exact =
                    (std::pow(b, j + 1) - std::pow(a, j + 1)) / (j + 1);
                double scale = std::pow(std::abs(a) + std::abs(b) + 1.0, j + 1);
                CHECK(std::abs(value - exact) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("richardson consistency when doubling panels") {
    const double truth = oracle::integrate_adaptive(density, 0.0, 2.0, 1e-14);
    auto err = [&](int degree, int panels) {
        return std::abs(integrate(density, 0.0, 2.0, NewtonCotesRule::of_degree(degree),
                                  panels) -
                        truth);
    };
    // theoretical orders 2/4/4/6 with a safety margin
    CHECK(err(1, 4) / err(1, 8) >= 3.0);
    CHECK(err(1, 8) / err(1, 16) >= 3.0);
    CHECK(err(2, 4) / err(2, 8) >= 8.0);
    CHECK(err(2, 8) / err(2, 16) >= 8.0);
    CHECK(err(3, 4) / err(3, 8) >= 8.0);
    CHECK(err(3, 8) / err(3, 16) >= 8.0);
    CHECK(err(4, 4) / err(4, 8) >= 32.0);
    CHECK(err(4, 8) / err(4, 16) >= 32.0);
}

TEST_CASE("central probabilities hit the reference digits") {
    auto boole = NewtonCotesRule::of_degree(4);
    CHECK(std::abs(gaussian_cdf_central(1.0, boole, 256) - 0.682689) < 1e-6);
    CHECK(std::abs(gaussian_cdf_central(2.0, boole, 256) - 0.95450) < 5e-5);
    CHECK(std::abs(gaussian_cdf_central(3.0, boole, 256) - 0.99730) < 5e-5);
    CHECK_THROWS_AS(gaussian_cdf_central(0.0, boole, 16), DomainError);
}

TEST_CASE("series and quadrature cross-check") {
    auto boole = NewtonCotesRule::of_degree(4);
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        double q = gaussian_cdf_central(s, boole, 256);
        double series = 2.0 * numerics::gaussian_integral_series(s, 40);
        CHECK(std::abs(q - series) < 1e-10);
    }
}

TEST_CASE("the fourth-derivative bound is measured, not assumed") {
    // |d^4/dx^4 density| = |x^4 - 6x^2 + 3| density(x), maximal at 0
    double grid_max = 0.0;
    for (int i = 0; i <= 12000; ++i) {
        double x = -6.0 + i * 0.001;
        double v = std::abs((std::pow(x, 4) - 6.0 * x * x + 3.0) * density(x));
        grid_max = std::max(grid_max, v);
    }
    CHECK(std::abs(grid_max - gaussian_density_max_d4) < 1e-9);
    CHECK(grid_max <= gaussian_density_max_d4 + 1e-12);
}

TEST_CASE("panel helper reaches the requested tolerance") {
    auto simpson = NewtonCotesRule::of_degree(2);
    for (double s : {0.5, 1.0, 3.0}) {
        for (double tol : {1e-6, 1e-9, 1e-11}) {
            int panels = gaussian_panels_for_tolerance(0.0, s, tol);
            double v = integrate(density, 0.0, s, simpson, panels);
            double truth = oracle::integrate_adaptive(density, 0.0, s, 1e-14);
            CHECK(std::abs(v - truth) <= tol);
        }
    }
    CHECK_THROWS_AS(gaussian_panels_for_tolerance(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("historical sweep brackets the 1733 digits and reports settings") {
    HistoricalBracket two = historical_gaussian_bracket(2.0);
    CHECK(two.sweep.size() == 16);
    CHECK(two.low <= 0.95428);
    CHECK(two.high >= 0.95428);
    CHECK(!two.low_setting.label.empty());
    CHECK(!two.high_setting.label.empty());

    HistoricalBracket three = historical_gaussian_bracket(3.0);
    CHECK(three.low <= 0.99874);
    CHECK(three.high >= 0.99874);
    for (const auto& setting : three.sweep) {
        CHECK(setting.degree >= 1);
        CHECK(setting.degree <= 4);
        CHECK(setting.panels >= 1);
        CHECK(setting.panels <= 4);
    }
}
