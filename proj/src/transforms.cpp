#include "demoivre/transforms.hpp"

#include <cmath>

#include "demoivre/errors.hpp"
#include "demoivre/numerics.hpp"
#include "demoivre/pairing.hpp"
#include "demoivre/quadrature.hpp"

namespace demoivre::transforms {

namespace {

std::complex<double> pow_by_squaring(std::complex<double> base, std::int64_t exponent) {
    std::complex<double> result{1.0, 0.0};
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

} // namespace

std::complex<double> pgf(const laws::BinomialLaw& law, std::complex<double> z) {
    return pow_by_squaring(law.p() * z + law.q(), law.n());
}

std::complex<double> characteristic_function(const laws::BinomialLaw& law, double t) {
    std::complex<double> base{law.p() * std::cos(t) + law.q(), law.p() * std::sin(t)};
    return pow_by_squaring(base, law.n());
}

std::complex<double> characteristic_function_by_pairing(const laws::BinomialLaw& law,
                                                        double t) {
    std::vector<double> lw = law.log_weights();
    numerics::CompensatedSum re, im;
    for (std::int64_t k = 0; k <= law.n(); ++k) {
        double w = std::exp(lw[static_cast<std::size_t>(k)]);
        double tk = t * static_cast<double>(k);
        re.add(w * std::cos(tk));
        im.add(w * std::sin(tk));
    }
    return {re.value(), im.value()};
}

double classical_moment(const laws::BinomialLaw& law, int r, bool standardized) {
    if (r < 0)
        throw DomainError("classical_moment: order must be >= 0");
    if (r > 20)
        throw DomainError("classical_moment: orders above 20 are refused "
                          "(standardized sums lose precision to cancellation)");
    if (standardized)
        return pairing::pair_binomial(law, probes::Probe::monomial(r)).value.real();
    // raw moments: same compensated sum over raw counts
    std::vector<double> lw = law.log_weights();
    numerics::CompensatedSum sum;
    for (std::int64_t k = 0; k <= law.n(); ++k) {
        double w = std::exp(lw[static_cast<std::size_t>(k)]);
        sum.add(w * std::pow(static_cast<double>(k), r));
    }
    return sum.value();
}

MomentSequence moment_sequence(const laws::BinomialLaw& law, int r_max,
                               bool standardized) {
    if (r_max < 0)
        throw DomainError("moment_sequence: r_max must be >= 0");
    MomentSequence seq;
    seq.standardized = standardized;
    seq.values.reserve(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r)
        seq.values.push_back(classical_moment(law, r, standardized));
    return seq;
}

Density gaussian_density_fn() {
    return {[](double x) { return laws::gaussian_density(x); },
            numerics::inv_sqrt_two_pi, Symmetry::even};
}

Density cauchy_density_fn(const laws::CauchyLaw& law) {
    double peak = law.density(law.location);
    return {[law](double x) { return law.density(x); }, peak,
            law.location == 0.0 ? Symmetry::even : Symmetry::none};
}

namespace {

// Smallest R with C (1+R)^{-N} max(1, R^r) sup_density <= 1e-14, taking the
// best certificate over several orders: low orders alone force uselessly
// large R for Gaussian windows.
double truncation_radius(const probes::Probe& window, int r, double sup_density) {
    if (!window.is_schwartz() || !window.decay())
        throw UnsupportedProbeError("weak pairing: window '" + window.description() +
                                    "' carries no decay bound");
    if (!window.is_real())
        throw UnsupportedProbeError("weak pairing: window must be real-valued; "
                                    "complex factors belong to the probe side");
    constexpr double kTailTarget = 1e-14;
    double best = 1e6;
    for (int order : {r + 3, r + 10, r + 20, r + 40}) {
        probes::DecayBound bound = probes::decay_bound(window, order);
        double radius = 1.0;
        while (radius < best) {
            double tail = bound.constant_C * std::pow(1.0 + radius, -bound.order_N) *
                          std::max(1.0, std::pow(radius, r)) * sup_density;
            if (tail <= kTailTarget)
                break;
            radius *= 1.25;
        }
        best = std::min(best, radius);
    }
    return std::max(best, 8.0);
}

double integrate_weak(const Density& density, const probes::Probe& window,
                      const std::function<double(double)>& extra, double radius) {
    int panels = std::max(3000, static_cast<int>(radius * 250.0));
    return quadrature::integrate(
        [&](double x) {
            return extra(x) * probes::evaluate(window, x).real() * density.f(x);
        },
        -radius, radius, quadrature::NewtonCotesRule::of_degree(4), panels);
}

} // namespace

double weak_moment(const Density& density, int r, const probes::Probe& window) {
    if (r < 0)
        throw DomainError("weak_moment: order must be >= 0");
    double radius = truncation_radius(window, r, density.sup_bound);
    return integrate_weak(
        density, window, [r](double x) { return std::pow(x, r); }, radius);
}

std::complex<double> weak_characteristic_function(const Density& density, double t,
                                                  const probes::Probe& window) {
    double radius = truncation_radius(window, 0, density.sup_bound);
    double re = integrate_weak(
        density, window, [t](double x) { return std::cos(t * x); }, radius);
    double im = integrate_weak(
        density, window, [t](double x) { return std::sin(t * x); }, radius);
    return {re, im};
}

std::vector<double> recover_weights_by_dft(const laws::BinomialLaw& law) {
    const std::int64_t n = law.n();
    int m = 1;
    while ((std::int64_t{1} << m) <= n)
        ++m;
    const std::int64_t size = std::int64_t{1} << m;

    std::vector<std::complex<double>> samples(static_cast<std::size_t>(size));
    for (std::int64_t j = 0; j < size; ++j) {
        double angle = numerics::two_pi * static_cast<double>(j) / static_cast<double>(size);
        samples[static_cast<std::size_t>(j)] =
            pgf(law, {std::cos(angle), std::sin(angle)});
    }

    std::vector<double> weights(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        numerics::CompensatedSum re;
        for (std::int64_t j = 0; j < size; ++j) {
            double angle =
                -numerics::two_pi * static_cast<double>((j * k) % size) / static_cast<double>(size);
            std::complex<double> rot{std::cos(angle), std::sin(angle)};
            re.add((samples[static_cast<std::size_t>(j)] * rot).real());
        }
        weights[static_cast<std::size_t>(k)] = re.value() / static_cast<double>(size);
    }
    return weights;
}

} // namespace demoivre::transforms
