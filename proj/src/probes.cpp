#include "demoivre/probes.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "demoivre/errors.hpp"

namespace demoivre::probes {

namespace {

// x^r by binary exponentiation; deterministic, exact for small integer r.
double ipow(double x, int r) {
    double result = 1.0;
    double base = x;
    for (int e = r; e > 0; e >>= 1) {
        if (e & 1)
            result *= base;
        base *= base;
    }
    return result;
}

constexpr double kQuarterRootPiInv = 0.7511255444649424828587030047762; // pi^{-1/4}

} // namespace

double hermite_function(int m, double x) {
    double h_prev = kQuarterRootPiInv * std::exp(-0.5 * x * x);
    if (m == 0)
        return h_prev;
    double h = x * std::sqrt(2.0) * h_prev;
    for (int j = 1; j < m; ++j) {
        double h_next = x * std::sqrt(2.0 / (j + 1.0)) * h -
                        std::sqrt(j / (j + 1.0)) * h_prev;
        h_prev = h;
        h = h_next;
    }
    return h;
}

std::vector<double> hermite_window_coefficients(int m) {
    if (m < 0)
        throw DomainError("hermite_window_coefficients: index must be >= 0");
    // Same recurrence applied to the polynomial parts.
    std::vector<double> prev{kQuarterRootPiInv};
    if (m == 0)
        return prev;
    std::vector<double> cur{0.0, std::sqrt(2.0) * kQuarterRootPiInv};
    for (int j = 1; j < m; ++j) {
        std::vector<double> next(cur.size() + 1, 0.0);
        double a = std::sqrt(2.0 / (j + 1.0));
        double b = std::sqrt(j / (j + 1.0));
        for (std::size_t i = 0; i < cur.size(); ++i)
            next[i + 1] += a * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= b * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::complex<double> evaluate(const Probe& probe, double x) {
    return std::visit(
        [x](const auto& k) -> std::complex<double> {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, IndicatorKind>) {
                return {(k.a <= x && x <= k.b) ? 1.0 : 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, MonomialKind>) {
                return {ipow(x, k.r), 0.0};
            } else if constexpr (std::is_same_v<T, ComplexExponentialKind>) {
                return {std::cos(k.t * x), std::sin(k.t * x)};
            } else if constexpr (std::is_same_v<T, GaussianWindowedPolynomialKind>) {
                double poly = 0.0;
                for (auto it = k.coefficients.rbegin(); it != k.coefficients.rend(); ++it)
                    poly = poly * x + *it;
                return {poly * std::exp(-0.5 * x * x), 0.0};
            } else if constexpr (std::is_same_v<T, HermiteFunctionKind>) {
                return {hermite_function(k.index, x), 0.0};
            } else if constexpr (std::is_same_v<T, CustomKind>) {
                return k.fn(x);
            } else {
                return evaluate(*k.inner, x) * evaluate(*k.factor, x);
            }
        },
        probe.kind());
}

namespace {

// Built-in kinds grow at most polynomially; nothing is known about custom code.
bool kind_is_poly_bounded(const Probe::Kind& kind) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, CustomKind>) {
                return false;
            } else if constexpr (std::is_same_v<T, ProductKind>) {
                return kind_is_poly_bounded(k.inner->kind()) &&
                       kind_is_poly_bounded(k.factor->kind());
            } else {
                return true;
            }
        },
        kind);
}

bool kind_is_schwartz(const Probe::Kind& kind) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GaussianWindowedPolynomialKind> ||
                          std::is_same_v<T, HermiteFunctionKind>) {
                return true;
            } else if constexpr (std::is_same_v<T, ProductKind>) {
                // a Gaussian window beats any polynomially bounded cofactor
                return (k.inner->is_schwartz() &&
                        kind_is_poly_bounded(k.factor->kind())) ||
                       (k.factor->is_schwartz() &&
                        kind_is_poly_bounded(k.inner->kind()));
            } else {
                return false;
            }
        },
        kind);
}

bool kind_is_real(const Probe::Kind& kind) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ComplexExponentialKind> ||
                          std::is_same_v<T, CustomKind>) {
                return false; // custom code is not certified real
            } else if constexpr (std::is_same_v<T, ProductKind>) {
                return k.inner->is_real() && k.factor->is_real();
            } else {
                return true;
            }
        },
        kind);
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

bool Probe::is_schwartz() const { return kind_is_schwartz(kind_); }
bool Probe::is_real() const { return kind_is_real(kind_); }

std::string Probe::description() const {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, IndicatorKind>) {
                return "indicator:" + format_number(k.a) + ":" + format_number(k.b);
            } else if constexpr (std::is_same_v<T, MonomialKind>) {
                return "monomial:" + std::to_string(k.r);
            } else if constexpr (std::is_same_v<T, ComplexExponentialKind>) {
                return "expi:" + format_number(k.t);
            } else if constexpr (std::is_same_v<T, GaussianWindowedPolynomialKind>) {
                std::string s = "gwp:";
                for (std::size_t i = 0; i < k.coefficients.size(); ++i) {
                    if (i)
                        s += ",";
                    s += format_number(k.coefficients[i]);
                }
                return s;
            } else if constexpr (std::is_same_v<T, HermiteFunctionKind>) {
                return "hermite:" + std::to_string(k.index);
            } else if constexpr (std::is_same_v<T, CustomKind>) {
                return "custom:" + k.label;
            } else {
                return "product(" + k.inner->description() + "," +
                       k.factor->description() + ")";
            }
        },
        kind_);
}

Probe::Probe(Kind kind) : kind_(std::move(kind)) {
    if (is_schwartz())
        decay_ = decay_bound(*this, 2);
}

Probe Probe::indicator(double a, double b) {
    if (!(a <= b))
        throw DomainError("Probe::indicator: requires a <= b");
    return Probe(Kind{IndicatorKind{a, b}});
}

Probe Probe::monomial(int r) {
    if (r < 0)
        throw DomainError("Probe::monomial: degree must be >= 0");
    return Probe(Kind{MonomialKind{r}});
}

Probe Probe::complex_exponential(double t) {
    return Probe(Kind{ComplexExponentialKind{t}});
}

Probe Probe::gaussian_windowed_polynomial(std::vector<double> coefficients) {
    if (coefficients.empty())
        throw DomainError("Probe::gaussian_windowed_polynomial: need coefficients");
    return Probe(Kind{GaussianWindowedPolynomialKind{std::move(coefficients)}});
}

Probe Probe::hermite(int index) {
    if (index < 0)
        throw DomainError("Probe::hermite: index must be >= 0");
    return Probe(Kind{HermiteFunctionKind{index}});
}

Probe Probe::product(Probe inner, Probe factor) {
    return Probe(Kind{ProductKind{std::make_shared<Probe>(std::move(inner)),
                                  std::make_shared<Probe>(std::move(factor))}});
}

Probe Probe::custom(std::function<std::complex<double>(double)> fn,
                    std::string label) {
    if (!fn)
        throw DomainError("Probe::custom: evaluation function required");
    return Probe(Kind{CustomKind{std::move(fn), std::move(label)}});
}

DecayBound decay_bound(const Probe& probe, int requested_N) {
    if (!probe.is_schwartz())
        throw UnsupportedProbeError(
            "decay_bound: probe '" + probe.description() +
            "' is not Schwartz-class; its tail handling is different");
    if (requested_N < 0 || requested_N > 100)
        throw DomainError("decay_bound: requested order must be in [0, 100]");
    // Maximize |phi(x)| (1+|x|)^N over a dense grid. Beyond |x| = 60 the
    // Gaussian window pushes any polynomial factor below 1e-300.
    constexpr double kLimit = 60.0;
    constexpr long kSteps = 122880; // spacing ~1e-3
    double max_val = 0.0;
    for (long i = 0; i <= kSteps; ++i) {
        double x = -kLimit + (2.0 * kLimit) * static_cast<double>(i) / kSteps;
        double mag = std::abs(evaluate(probe, x));
        if (mag == 0.0)
            continue;
        // log-space product avoids inf * 0 for large N at the far ends
        double v = std::exp(requested_N * std::log1p(std::abs(x)) + std::log(mag));
        if (v > max_val)
            max_val = v;
    }
    return {requested_N, 1.1 * max_val};
}

} // namespace demoivre::probes
