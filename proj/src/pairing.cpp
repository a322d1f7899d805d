#include "demoivre/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "demoivre/errors.hpp"
#include "demoivre/numerics.hpp"
#include "demoivre/quadrature.hpp"

namespace demoivre::pairing {

namespace {

constexpr double kGaussianSupport = 12.0; // mass beyond is < 2e-32

struct ComplexSum {
    numerics::CompensatedSum re, im;
    void add(std::complex<double> v) {
        re.add(v.real());
        im.add(v.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

struct PartitionSums {
    ComplexSum bulk, tail;
};

// Shared by the sequential and chunked paths: fixed increasing-k order
// within a chunk.
void accumulate_range(const laws::BinomialLaw& law, const probes::Probe& probe,
                      double cutoff_M, std::span<const double> log_weights,
                      std::int64_t k_begin, std::int64_t k_end, PartitionSums& sums) {
    for (std::int64_t k = k_begin; k < k_end; ++k) {
        double x = law.standardized_x(k);
        double w = std::exp(log_weights[static_cast<std::size_t>(k)]);
        std::complex<double> term = w * probes::evaluate(probe, x);
        if (std::abs(x) <= cutoff_M)
            sums.bulk.add(term);
        else
            sums.tail.add(term);
    }
}

double tail_certificate_for(const probes::Probe& probe, double cutoff_M) {
    if (!probe.decay())
        return std::numeric_limits<double>::quiet_NaN();
    const auto& bound = *probe.decay();
    double sup_tail = bound.constant_C * std::pow(1.0 + cutoff_M, -bound.order_N);
    return sup_tail / (cutoff_M * cutoff_M);
}

std::complex<double> integrate_against_gaussian(const probes::Probe& probe, double a,
                                                double b, int panels) {
    auto rule = quadrature::NewtonCotesRule::of_degree(4);
    double re = quadrature::integrate(
        [&](double x) {
            return laws::gaussian_density(x) * probes::evaluate(probe, x).real();
        },
        a, b, rule, panels);
    if (probe.is_real())
        return {re, 0.0};
    double im = quadrature::integrate(
        [&](double x) {
            return laws::gaussian_density(x) * probes::evaluate(probe, x).imag();
        },
        a, b, rule, panels);
    return {re, im};
}

// Signed half-interval mass P(0 <= Z <= x) with x's sign; the alternating
// series cancels badly past ~6 sigma, so the far tail goes through the
// quadrature complement instead.
double signed_gaussian_half_mass(double x) {
    double s = std::abs(x);
    double value;
    if (s <= 6.0) {
        int terms = 40 + static_cast<int>(std::ceil(8.0 * s * s));
        value = numerics::gaussian_integral_series(s, terms);
    } else if (s < 9.5) {
        value = 0.5 - quadrature::integrate(
                          [](double u) { return laws::gaussian_density(u); }, s, 9.5,
                          quadrature::NewtonCotesRule::of_degree(4), 512);
    } else {
        value = 0.5; // tail mass < 1e-21
    }
    return x < 0.0 ? -value : value;
}

} // namespace

PairingResult pair_binomial(const laws::BinomialLaw& law, const probes::Probe& probe,
                            const PairOptions& options) {
    if (!(options.cutoff_M > 0.0))
        throw DomainError("pair_binomial: cutoff M must be positive");

    const std::vector<double> lw = law.log_weights();
    const std::int64_t count = law.n() + 1;

    PartitionSums sums;
    if (!options.parallel || count < 4096) {
        accumulate_range(law, probe, options.cutoff_M, lw, 0, count, sums);
    } else {
        unsigned hw = std::thread::hardware_concurrency();
        std::int64_t chunks = std::clamp<std::int64_t>(hw == 0 ? 4 : hw, 2, 16);
        std::vector<PartitionSums> partial(static_cast<std::size_t>(chunks));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(chunks));
        for (std::int64_t c = 0; c < chunks; ++c) {
            std::int64_t begin = count * c / chunks;
            std::int64_t end = count * (c + 1) / chunks;
            workers.emplace_back([&, c, begin, end] {
                accumulate_range(law, probe, options.cutoff_M, lw, begin, end,
                                 partial[static_cast<std::size_t>(c)]);
            });
        }
        for (auto& t : workers)
            t.join();
        for (const auto& part : partial) { // fixed chunk order
            sums.bulk.add(part.bulk.value());
            sums.tail.add(part.tail.value());
        }
    }

    PairingResult result;
    result.bulk_value = sums.bulk.value();
    result.tail_value = sums.tail.value();
    result.value = result.bulk_value + result.tail_value;
    result.tail_certificate = tail_certificate_for(probe, options.cutoff_M);
    result.cutoff_M = options.cutoff_M;
    return result;
}

std::complex<double> pair_gaussian(const probes::Probe& probe, GaussianMethod method) {
    if (method == GaussianMethod::series) {
        const auto* ind = std::get_if<probes::IndicatorKind>(&probe.kind());
        if (ind == nullptr)
            throw UnsupportedMethodError(
                "pair_gaussian: series method supports only indicator probes");
        return {signed_gaussian_half_mass(ind->b) - signed_gaussian_half_mass(ind->a),
                0.0};
    }
    // Panel count sized for ~1e-13 on Schwartz/bounded probes; the [-12,12]
    // truncation itself is below gaussian_truncation_mass * sup|phi|.
    if (const auto* ind = std::get_if<probes::IndicatorKind>(&probe.kind())) {
        // Integrate only over the interval so panel nodes never straddle the
        // discontinuity.
        double a = std::max(ind->a, -kGaussianSupport);
        double b = std::min(ind->b, kGaussianSupport);
        if (a >= b)
            return {0.0, 0.0};
        int panels = std::max(4800, quadrature::gaussian_panels_for_tolerance(a, b, 1e-13));
        return {quadrature::integrate([](double x) { return laws::gaussian_density(x); },
                                      a, b, quadrature::NewtonCotesRule::of_degree(4),
                                      panels),
                0.0};
    }
    return integrate_against_gaussian(probe, -kGaussianSupport, kGaussianSupport, 4800);
}

ErrorDecomposition error_decomposition(const laws::BinomialLaw& law,
                                       const probes::Probe& probe, double cutoff_M) {
    if (!(cutoff_M >= 1.0))
        throw DomainError("error_decomposition: cutoff M must be >= 1");
    if (!probe.decay())
        throw UnsupportedProbeError(
            "error_decomposition: probe '" + probe.description() +
            "' carries no decay bound");

    const std::vector<double> lw = law.log_weights();
    const double dx = law.dx();

    ComplexSum local_sum, riemann_sum;
    for (std::int64_t k = 0; k <= law.n(); ++k) {
        double x = law.standardized_x(k);
        if (std::abs(x) > cutoff_M)
            continue;
        double w = std::exp(lw[static_cast<std::size_t>(k)]);
        double g = laws::gaussian_density(x) * dx;
        std::complex<double> phi = probes::evaluate(probe, x);
        local_sum.add((w - g) * phi);
        riemann_sum.add(g * phi);
    }

    int panels = std::max(2000, static_cast<int>(200 * cutoff_M));
    std::complex<double> riemann_integral =
        integrate_against_gaussian(probe, -cutoff_M, cutoff_M, panels);

    const auto& bound = *probe.decay();
    double sup_tail = bound.constant_C * std::pow(1.0 + cutoff_M, -bound.order_N);
    double chebyshev = sup_tail / (cutoff_M * cutoff_M);
    double gaussian_tail = sup_tail * std::erfc(cutoff_M / std::sqrt(2.0));

    ErrorDecomposition d;
    d.local_error = std::abs(local_sum.value());
    d.riemann_error = std::abs(riemann_sum.value() - riemann_integral);
    d.tail_bound = chebyshev + gaussian_tail;
    d.total_error = std::abs(pair_binomial(law, probe, {cutoff_M}).value -
                             pair_gaussian(probe, GaussianMethod::quadrature));
    return d;
}

ConvergenceReport convergence_study(double p, const probes::Probe& probe,
                                    std::span<const std::int64_t> n_values) {
    constexpr double kZeroThreshold = 1e-12;
    ConvergenceReport report;
    report.probe_description = probe.description();
    std::complex<double> reference = pair_gaussian(probe, GaussianMethod::quadrature);

    for (std::int64_t n : n_values) {
        if (n < 4)
            throw DomainError("convergence_study: every n must be >= 4");
        laws::BinomialLaw law(n, p);
        double err = std::abs(pair_binomial(law, probe).value - reference);
        report.n_values.push_back(n);
        report.errors.push_back(err);
        if (err <= kZeroThreshold)
            ++report.zero_error_count;
    }

    std::vector<double> log_n, log_e;
    for (std::size_t i = 0; i < report.errors.size(); ++i) {
        if (report.errors[i] > kZeroThreshold) {
            log_n.push_back(std::log(static_cast<double>(report.n_values[i])));
            log_e.push_back(std::log(report.errors[i]));
        }
    }

    if (log_n.size() >= 3) {
        // ordinary least squares slope
        double mean_x = 0.0, mean_y = 0.0;
        for (std::size_t i = 0; i < log_n.size(); ++i) {
            mean_x += log_n[i];
            mean_y += log_e[i];
        }
        mean_x /= static_cast<double>(log_n.size());
        mean_y /= static_cast<double>(log_n.size());
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < log_n.size(); ++i) {
            sxy += (log_n[i] - mean_x) * (log_e[i] - mean_y);
            sxx += (log_n[i] - mean_x) * (log_n[i] - mean_x);
        }
        report.fitted_slope = sxy / sxx;
        if (report.zero_error_count > 0)
            report.note = "excluded " + std::to_string(report.zero_error_count) +
                          " exact-zero error(s) from the fit";
    } else if (report.zero_error_count == static_cast<int>(report.errors.size())) {
        report.note = "all errors at numerical zero (exact symmetry); no slope fitted";
    } else {
        throw InsufficientDataError(
            "convergence_study: fewer than 3 usable (nonzero-error) points");
    }
    return report;
}

LocalRatio local_ratio(std::int64_t n, std::int64_t l) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("local_ratio: symmetric form requires even n >= 2");
    if (std::llabs(l) > n / 2)
        throw DomainError("local_ratio: |l| must be <= n/2");
    LocalRatio r;
    r.exact_log_ratio =
        numerics::log_binomial(n, n / 2 + l) - numerics::log_binomial(n, n / 2);
    r.demoivre_log_ratio =
        -2.0 * static_cast<double>(l) * static_cast<double>(l) / static_cast<double>(n);
    return r;
}

LocalRatio local_ratio(std::int64_t n, std::int64_t l, double p) {
    laws::BinomialLaw law(n, p); // validates n, p
    std::int64_t k0 = std::llround(law.mean());
    std::int64_t k = k0 + l;
    if (k < 0 || k > n)
        throw DomainError("local_ratio: offset l leaves the support");
    LocalRatio r;
    r.exact_log_ratio = law.log_weight(k) - law.log_weight(k0);
    double ll = static_cast<double>(l);
    r.demoivre_log_ratio = -ll * ll / (2.0 * law.mean() * law.q());
    return r;
}

} // namespace demoivre::pairing
