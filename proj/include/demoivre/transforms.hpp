#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "demoivre/laws.hpp"
#include "demoivre/probes.hpp"

namespace demoivre::transforms {

// Probability generating function (p z + q)^n by repeated squaring.
std::complex<double> pgf(const laws::BinomialLaw& law, std::complex<double> z);

// Characteristic function (p e^{it} + q)^n (closed form, the default route).
std::complex<double> characteristic_function(const laws::BinomialLaw& law, double t);

// Same quantity as the pairing sum_k w_k e^{itk} over raw counts.
std::complex<double> characteristic_function_by_pairing(const laws::BinomialLaw& law,
                                                        double t);

// sum_k w_k k^r (raw) or sum_k w_k x_k^r (standardized). Degrees above 20
// are refused: alternating-sign cancellation across the standardized grid
// degrades silently past that. Throws DomainError for r < 0 or r > 20.
double classical_moment(const laws::BinomialLaw& law, int r, bool standardized);

// values[r] for r = 0..r_max. With standardized = true, values[1] = 0 and
// values[2] = 1 up to rounding.
struct MomentSequence {
    std::vector<double> values;
    bool standardized = false;
};

MomentSequence moment_sequence(const laws::BinomialLaw& law, int r_max,
                               bool standardized);

enum class Symmetry { none, even };

// Evaluable probability density with a declared sup bound (used by the
// truncation-radius solver) and a symmetry flag used only by tests.
struct Density {
    std::function<double(double)> f;
    double sup_bound = 0.0;
    Symmetry symmetry = Symmetry::none;
};

Density gaussian_density_fn();
Density cauchy_density_fn(const laws::CauchyLaw& law);

// Weak moment <T, x^r phi> = int x^r phi(x) density(x) dx. Finite for every
// r whenever the window is Schwartz, even when the classical moment
// diverges (Cauchy). Quadrature over [-R, R] with R solved from the window's
// decay bound so the truncated tail sits below 1e-14 of the result scale.
double weak_moment(const Density& density, int r, const probes::Probe& window);

// Regularised characteristic function <T, e^{itx} phi>.
std::complex<double> weak_characteristic_function(const Density& density, double t,
                                                  const probes::Probe& window);

// Coefficient recovery: pgf sampled on the 2^m-th roots of unity (2^m > n)
// and inverse-DFT'd back to the weight vector w_0..w_n.
std::vector<double> recover_weights_by_dft(const laws::BinomialLaw& law);

} // namespace demoivre::transforms
