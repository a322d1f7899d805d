#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "demoivre/errors.hpp"
#include "demoivre/laws.hpp"
#include "demoivre/numerics.hpp"
#include "oracle.hpp"

using namespace demoivre;
using namespace demoivre::laws;

TEST_CASE("law construction rejects degenerate parameters") {
    CHECK_THROWS_AS(BinomialLaw(0, 0.5), DomainError);
    CHECK_THROWS_AS(BinomialLaw(10, 0.0), DomainError);
    CHECK_THROWS_AS(BinomialLaw(10, 1.0), DomainError);
    CHECK_THROWS_AS(BinomialLaw(10, -0.1), DomainError);
    CHECK_THROWS_AS(BinomialLaw(10, 1.5), DomainError);
    CHECK_THROWS_AS(CauchyLaw(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(CauchyLaw(0.0, -1.0), DomainError);
}

TEST_CASE("tiny grids by exact enumeration") {
    AtomGrid g2 = atom_grid(BinomialLaw(2, 0.5));
    REQUIRE(g2.atoms.size() == 3);
    CHECK(std::abs(std::exp(g2.atoms[0].log_weight) - 0.25) < 1e-15);
    CHECK(std::abs(std::exp(g2.atoms[1].log_weight) - 0.5) < 1e-15);
    CHECK(std::abs(std::exp(g2.atoms[2].log_weight) - 0.25) < 1e-15);
    CHECK(std::abs(g2.atoms[0].x + std::sqrt(2.0)) < 1e-15);
    CHECK(g2.atoms[1].x == 0.0);
    CHECK(std::abs(g2.atoms[2].x - std::sqrt(2.0)) < 1e-15);

    AtomGrid g1 = atom_grid(BinomialLaw(1, 0.5));
    REQUIRE(g1.atoms.size() == 2);
    CHECK(std::abs(g1.atoms[0].x + 1.0) < 1e-15);
    CHECK(std::abs(g1.atoms[1].x - 1.0) < 1e-15);
    CHECK(std::abs(std::exp(g1.atoms[0].log_weight) - 0.5) < 1e-15);
    CHECK(std::abs(std::exp(g1.atoms[1].log_weight) - 0.5) < 1e-15);
}

TEST_CASE("central weight at n = 100 against the big-integer oracle") {
    // C(100,50) / 2^100
    long double exact = oracle::to_long_double(oracle::binomial_exact(100, 50));
    exact = std::ldexp(exact, -100);
    CHECK(std::abs(static_cast<double>(exact) - 0.07958923738717877) < 1e-17);

    AtomGrid g = atom_grid(BinomialLaw(100, 0.5));
    CHECK(std::abs(std::exp(g.atoms[50].log_weight) - 0.07958923738717877) < 1e-10);
}

TEST_CASE("gaussian density values and evenness") {
    CHECK(std::abs(gaussian_density(0.0) - 0.3989422804014327) < 1e-10);
    CHECK(std::abs(gaussian_density(1.0) - 0.2419707245191434) < 1e-10);
    GaussianReference ref;
    CHECK(ref.density(0.0) == gaussian_density(0.0));
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    for (int i = 0; i < 100; ++i) {
        double x = dist(rng);
        CHECK(gaussian_density(-x) == gaussian_density(x));
    }
}

TEST_CASE("cauchy density values and total mass") {
    CauchyLaw standard(0.0, 1.0);
    CHECK(std::abs(standard.density(0.0) - 0.3183098861837907) < 1e-12);
    CHECK(std::abs(standard.density(1.0) - 0.15915494309189535) < 1e-12);

    for (CauchyLaw law : {CauchyLaw(0.0, 1.0), CauchyLaw(2.5, 0.7)}) {
        const double R = 1e4;
        double body = oracle::integrate_adaptive(
            [&](double x) { return law.density(x); }, law.location - R,
            law.location + R, 1e-12);
        // two-sided analytic tail of a Cauchy: (2/pi) atan(scale/R)
        double tails = (2.0 / (numerics::two_pi / 2.0)) * std::atan(law.scale / R);
        CHECK(std::abs(body + tails - 1.0) < 1e-10);
    }
}

TEST_CASE("weight sums and standardization identities") {
    for (std::int64_t n : {2, 17, 100, 1000, 10000}) {
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            BinomialLaw law(n, p);
            std::vector<double> lw = law.log_weights();
            numerics::CompensatedSum s0, s1, s2;
            for (std::int64_t k = 0; k <= n; ++k) {
                double w = std::exp(lw[static_cast<std::size_t>(k)]);
                double x = law.standardized_x(k);
                s0.add(w);
                s1.add(w * x);
                s2.add(w * x * x);
            }
            CHECK(std::abs(s0.value() - 1.0) < 1e-12);
            CHECK(std::abs(s1.value()) < 1e-12);
            CHECK(std::abs(s2.value() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("grid geometry: x, offsets, spacing") {
    for (auto [n, p] : std::vector<std::pair<std::int64_t, double>>{
             {17, 0.3}, {100, 0.5}, {1000, 0.1}}) {
        BinomialLaw law(n, p);
        AtomGrid g = atom_grid(law);
        REQUIRE(g.atoms.size() == static_cast<std::size_t>(n) + 1);
        CHECK(g.dx == law.dx());
        for (const auto& atom : g.atoms) {
            CHECK(atom.x == atom.offset_l / law.sigma()); // exactly as computed
            CHECK(atom.offset_l == static_cast<double>(atom.k) - law.mean());
        }
        for (std::size_t i = 0; i + 1 < g.atoms.size(); ++i)
            CHECK(std::abs(g.atoms[i + 1].x - g.atoms[i].x - g.dx) < 1e-12);
    }
}

TEST_CASE("chance-weight construction matches the probability form") {
    BinomialLaw from_p(50, 0.3);
    BinomialLaw from_ab = BinomialLaw::from_chances(3.0, 7.0, 50);
    CHECK(from_ab.p() == 0.3);

    AtomGrid g1 = atom_grid(from_p);
    AtomGrid g2 = atom_grid(from_ab);
    for (std::size_t i = 0; i < g1.atoms.size(); ++i) {
        CHECK(g1.atoms[i].x == g2.atoms[i].x); // bit-identical grids
        CHECK(g1.atoms[i].log_weight == g2.atoms[i].log_weight);
    }
    // variance a b n / (a+b)^2 equals npq
    double chance_variance = 3.0 * 7.0 * 50.0 / ((3.0 + 7.0) * (3.0 + 7.0));
    CHECK(std::abs(from_ab.sigma() * from_ab.sigma() - chance_variance) <
          1e-15 * chance_variance);
    CHECK_THROWS_AS(BinomialLaw::from_chances(0.0, 1.0, 10), DomainError);
}

TEST_CASE("largest atom sits within one grid step of zero") {
    for (std::int64_t n : {10, 100, 999, 10000}) {
        for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
            BinomialLaw law(n, p);
            std::vector<double> lw = law.log_weights();
            std::size_t argmax = 0;
            for (std::size_t k = 1; k < lw.size(); ++k)
                if (lw[k] > lw[argmax])
                    argmax = k;
            double x = law.standardized_x(static_cast<std::int64_t>(argmax));
            CHECK(std::abs(x) <= law.dx() * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("single-point log_weight agrees with the batch") {
    BinomialLaw law(500, 0.37);
    std::vector<double> lw = law.log_weights();
    for (std::int64_t k : {0, 1, 185, 250, 499, 500})
        CHECK(law.log_weight(k) == lw[static_cast<std::size_t>(k)]);
    CHECK_THROWS_AS(law.log_weight(-1), DomainError);
    CHECK_THROWS_AS(law.log_weight(501), DomainError);
}
