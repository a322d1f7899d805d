#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace demoivre::probes {

// Verified polynomial decay certificate |phi(x)| <= C (1 + |x|)^{-N}.
struct DecayBound {
    int order_N = 0;
    double constant_C = 0.0;
};

struct IndicatorKind {
    double a, b; // closed interval [a, b]
};
struct MonomialKind {
    int r; // x^r, r >= 0
};
struct ComplexExponentialKind {
    double t; // e^{itx}
};
struct GaussianWindowedPolynomialKind {
    std::vector<double> coefficients; // (sum c_j x^j) e^{-x^2/2}
};
struct HermiteFunctionKind {
    int index; // orthonormal Hermite function h_m
};
class Probe;
struct ProductKind {
    std::shared_ptr<const Probe> inner;
    std::shared_ptr<const Probe> factor;
};
// Extension point: arbitrary user code. Carries no decay bound, so it is
// excluded from tail-certified pairings and from weak-moment windows.
struct CustomKind {
    std::function<std::complex<double>(double)> fn;
    std::string label;
};

// A test function paired against probability laws. Indicator, monomial and
// complex-exponential probes are the classical family; the Gaussian-windowed
// kinds are Schwartz-class and carry a decay certificate.
class Probe {
public:
    using Kind = std::variant<IndicatorKind, MonomialKind, ComplexExponentialKind,
                              GaussianWindowedPolynomialKind, HermiteFunctionKind,
                              ProductKind, CustomKind>;

    static Probe indicator(double a, double b); // requires a <= b
    static Probe monomial(int r);               // requires r >= 0
    static Probe complex_exponential(double t);
    static Probe gaussian_windowed_polynomial(std::vector<double> coefficients);
    static Probe hermite(int index); // requires index >= 0
    static Probe product(Probe inner, Probe factor);
    static Probe custom(std::function<std::complex<double>(double)> fn,
                        std::string label);

    const Kind& kind() const { return kind_; }

    // Present for Schwartz kinds (computed with N = 2 at construction).
    const std::optional<DecayBound>& decay() const { return decay_; }

    // Rapidly decreasing: Gaussian-windowed polynomial, Hermite, or a product
    // with at least one such factor.
    bool is_schwartz() const;

    // True when evaluation has zero imaginary part everywhere.
    bool is_real() const;

    // Colon-delimited spec, e.g. "hermite:3" or "indicator:-1:1".
    std::string description() const;

private:
    explicit Probe(Kind kind);
    Kind kind_;
    std::optional<DecayBound> decay_;
};

// Pointwise evaluation; real probes return a zero imaginary part.
std::complex<double> evaluate(const Probe& probe, double x);

// Orthonormal Hermite function h_m(x) by the stable three-term recurrence
//   h_{m+1} = x sqrt(2/(m+1)) h_m - sqrt(m/(m+1)) h_{m-1},
// h_0(x) = pi^{-1/4} e^{-x^2/2}.
double hermite_function(int m, double x);

// Coefficient vector c with h_m(x) = (sum c_j x^j) e^{-x^2/2}; usable as a
// GaussianWindowedPolynomial and for linear-combination probes. Stable for
// m <= ~30 (the direct polynomial overflows past that).
std::vector<double> hermite_window_coefficients(int m);

// Certificate for a Schwartz probe at the requested order: C is the maximum
// of |phi(x)| (1+|x|)^N over a dense grid on [-60, 60], inflated by 10%.
// Throws UnsupportedProbeError for non-Schwartz kinds.
DecayBound decay_bound(const Probe& probe, int requested_N);

} // namespace demoivre::probes
