#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "demoivre/laws.hpp"
#include "demoivre/probes.hpp"

namespace demoivre::pairing {

inline constexpr double default_cutoff_M = 10.0;

// Standard normal mass outside [-12, 12]; recorded truncation bound for the
// quadrature route of the Gaussian pairing (times sup|phi|).
inline constexpr double gaussian_truncation_mass = 2e-32;

// <T_n, phi> split at the cutoff |x_k| <= M. value is always the sum
// bulk_value + tail_value of the same partitioned summation. When the probe
// carries a decay bound, tail_certificate = C (1+M)^{-N} / M^2 (Chebyshev
// tail mass times the sup of |phi| beyond the cutoff); otherwise NaN.
struct PairingResult {
    std::complex<double> value;
    std::complex<double> bulk_value;
    std::complex<double> tail_value;
    double tail_certificate = 0.0; // quiet NaN when unavailable
    double cutoff_M = default_cutoff_M;
};

struct PairOptions {
    double cutoff_M = default_cutoff_M;
    bool parallel = false; // opt-in chunked sum; agrees with the sequential
                           // result to ~1e-13 relative
};

// <T_n, phi> = sum_k C(n,k) p^k q^{n-k} phi((k - np)/sqrt(npq)), exact finite
// sum over all n+1 atoms in increasing k with compensated accumulation.
PairingResult pair_binomial(const laws::BinomialLaw& law, const probes::Probe& probe,
                            const PairOptions& options = {});

enum class GaussianMethod { series, quadrature };

// <T_N, phi> = (2 pi)^{-1/2} int phi(x) e^{-x^2/2} dx. The series method is
// valid only for indicator probes (symmetry + complements over the
// alternating series); quadrature uses composite Boole over [-12, 12].
std::complex<double> pair_gaussian(const probes::Probe& probe,
                                   GaussianMethod method = GaussianMethod::quadrature);

// |<T_n,phi> - <T_N,phi>| split into the three over-covering parts:
//   local_error   |sum_bulk (w_k - density(x_k) dx) phi(x_k)|
//   riemann_error |sum_bulk density(x_k) phi(x_k) dx - int_{-M}^{M} density phi|
//   tail_bound    Chebyshev certificate + Gaussian tail integral bound
// local + riemann + tail >= total always holds.
struct ErrorDecomposition {
    double local_error = 0.0;
    double tail_bound = 0.0;
    double riemann_error = 0.0;
    double total_error = 0.0;
};

// Requires a Schwartz probe (decay bound present) and cutoff_M >= 1.
ErrorDecomposition error_decomposition(const laws::BinomialLaw& law,
                                       const probes::Probe& probe, double cutoff_M);

// Errors |<T_n,phi> - <T_N,phi>| along n_values with a log-log least-squares
// slope. Errors at numerical zero (<= 1e-12, e.g. odd probe against a
// symmetric law) are recorded but excluded from the fit; if everything is
// zero the slope is absent and `note` says why. Fewer than 3 usable points
// otherwise raises InsufficientDataError.
struct ConvergenceReport {
    std::vector<std::int64_t> n_values;
    std::vector<double> errors;
    std::optional<double> fitted_slope;
    std::string probe_description;
    int zero_error_count = 0;
    std::string note;
};

ConvergenceReport convergence_study(double p, const probes::Probe& probe,
                                    std::span<const std::int64_t> n_values);

// ln of the term ratio at offset l from the central/largest term, against
// the Gaussian exponent. Symmetric form: exact = ln[C(n,n/2+l)/C(n,n/2)],
// approx = -2 l^2 / n (n even). General form: reference index k0 = round(np),
// exact from log-weights, approx = -l^2/(2npq).
struct LocalRatio {
    double exact_log_ratio = 0.0;
    double demoivre_log_ratio = 0.0;
};

LocalRatio local_ratio(std::int64_t n, std::int64_t l);
LocalRatio local_ratio(std::int64_t n, std::int64_t l, double p);

} // namespace demoivre::pairing
