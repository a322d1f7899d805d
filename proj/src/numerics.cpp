#include "demoivre/numerics.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "demoivre/errors.hpp"

namespace demoivre::numerics {

namespace detail {

namespace {

// Error-free transforms (Knuth / Dekker, product via fma).
inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) { // assumes |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

// ln 2 split across two doubles.
constexpr double kLn2Hi = 6.9314718055994528623e-01;
constexpr double kLn2Lo = 2.3190468138462995584e-17;

} // namespace

DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

DoubleDouble dd_sub(DoubleDouble a, DoubleDouble b) {
    return dd_add(a, {-b.hi, -b.lo});
}

DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

DoubleDouble dd_mul(DoubleDouble a, double b) {
    DoubleDouble p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

// exp via range reduction over ln 2, a 1/512 Taylor scale, and nine
// squarings of expm1 (the double-double analogue of the textbook scheme).
DoubleDouble dd_exp(DoubleDouble a) {
    double m = std::floor(a.hi / kLn2Hi + 0.5);
    DoubleDouble r = dd_sub(a, dd_mul(DoubleDouble{kLn2Hi, kLn2Lo}, m));
    DoubleDouble s = dd_mul(r, 1.0 / 512.0);

    DoubleDouble acc = s;
    DoubleDouble power = s;
    double factorial = 1.0;
    for (int k = 2; k <= 12; ++k) {
        power = dd_mul(power, s);
        factorial *= k;
        acc = dd_add(acc, dd_mul(power, 1.0 / factorial));
    }
    // expm1(2x) = 2 expm1(x) + expm1(x)^2
    for (int i = 0; i < 9; ++i)
        acc = dd_add(dd_mul(acc, 2.0), dd_mul(acc, acc));
    DoubleDouble result = dd_add(acc, {1.0, 0.0});
    int mi = static_cast<int>(m);
    return {std::ldexp(result.hi, mi), std::ldexp(result.lo, mi)};
}

// One Newton step on top of libm's log: l0 + (x e^{-l0} - 1).
DoubleDouble dd_log(DoubleDouble x) {
    double l0 = std::log(x.hi);
    DoubleDouble e = dd_exp({-l0, 0.0});
    DoubleDouble corr = dd_sub(dd_mul(x, e), {1.0, 0.0});
    return dd_add({l0, 0.0}, corr);
}

DoubleDouble dd_log(double x) { return dd_log(DoubleDouble{x, 0.0}); }

namespace {

// Cached ln(j!) values; grown on demand under an exclusive lock.
std::shared_mutex table_mutex;
std::vector<DoubleDouble> lf_table{DoubleDouble{0.0, 0.0}}; // lf_table[0] = ln 0! = 0

void ensure_table(std::int64_t n) {
    {
        std::shared_lock lock(table_mutex);
        if (static_cast<std::int64_t>(lf_table.size()) > n)
            return;
    }
    std::unique_lock lock(table_mutex);
    lf_table.reserve(static_cast<std::size_t>(n) + 1);
    for (auto j = static_cast<std::int64_t>(lf_table.size()); j <= n; ++j)
        lf_table.push_back(dd_add(lf_table.back(), dd_log(static_cast<double>(j))));
}

} // namespace

DoubleDouble log_factorial_dd(std::int64_t n) {
    if (n < 0)
        throw DomainError("log_factorial_dd: n must be non-negative");
    ensure_table(n);
    std::shared_lock lock(table_mutex);
    return lf_table[static_cast<std::size_t>(n)];
}

std::vector<double> binomial_log_weights(std::int64_t n, double p) {
    ensure_table(n);
    DoubleDouble ln_p = dd_log(p);
    DoubleDouble ln_q = dd_log(two_sum(1.0, -p)); // q = 1-p, exactly
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    std::shared_lock lock(table_mutex);
    DoubleDouble lf_n = lf_table[static_cast<std::size_t>(n)];
    for (std::int64_t k = 0; k <= n; ++k) {
        DoubleDouble lc =
            dd_sub(dd_sub(lf_n, lf_table[static_cast<std::size_t>(k)]),
                   lf_table[static_cast<std::size_t>(n - k)]);
        DoubleDouble lw = dd_add(lc, dd_add(dd_mul(ln_p, static_cast<double>(k)),
                                            dd_mul(ln_q, static_cast<double>(n - k))));
        out[static_cast<std::size_t>(k)] = lw.to_double();
    }
    return out;
}

double binomial_log_weight(std::int64_t n, std::int64_t k, double p) {
    if (k < 0 || k > n)
        throw DomainError("binomial_log_weight: k outside [0, n]");
    DoubleDouble ln_p = dd_log(p);
    DoubleDouble ln_q = dd_log(two_sum(1.0, -p));
    DoubleDouble lc = dd_sub(dd_sub(log_factorial_dd(n), log_factorial_dd(k)),
                             log_factorial_dd(n - k));
    return dd_add(lc, dd_add(dd_mul(ln_p, static_cast<double>(k)),
                             dd_mul(ln_q, static_cast<double>(n - k))))
        .to_double();
}

} // namespace detail

namespace {

void check_stirling_cfg(const StirlingConfig& cfg) {
    if (cfg.correction_terms < 0 || cfg.correction_terms > 3)
        throw DomainError("StirlingConfig: correction_terms must be in [0..3]");
}

} // namespace

double stirling_log_factorial(std::int64_t n, StirlingConfig cfg) {
    check_stirling_cfg(cfg);
    if (n < 0)
        throw DomainError("stirling_log_factorial: n must be non-negative");
    if (n == 0)
        return 0.0;
    double m = static_cast<double>(n);
    double s = m * std::log(m) - m + 0.5 * std::log(two_pi * m);
    if (cfg.correction_terms >= 1)
        s += 1.0 / (12.0 * m);
    if (cfg.correction_terms >= 2)
        s += -1.0 / (360.0 * m * m * m);
    if (cfg.correction_terms >= 3)
        s += 1.0 / (1260.0 * m * m * m * m * m);
    return s;
}

double log_factorial(std::int64_t n, StirlingConfig cfg) {
    check_stirling_cfg(cfg);
    if (n < 0)
        throw DomainError("log_factorial: n must be non-negative");
    if (n < 20) {
        double s = 0.0;
        for (std::int64_t j = 2; j <= n; ++j)
            s += std::log(static_cast<double>(j));
        return s;
    }
    return stirling_log_factorial(n, cfg);
}

double log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0)
        throw DomainError("log_binomial: n must be non-negative");
    if (k < 0 || k > n)
        throw DomainError("log_binomial: k outside [0, n] for n = " + std::to_string(n));
    if (k > n - k)
        k = n - k; // same floating computation for k and n-k
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double gaussian_integral_series(double s, int terms) {
    if (s < 0.0)
        throw DomainError("gaussian_integral_series: s must be >= 0 (use symmetry)");
    if (terms < 1)
        throw DomainError("gaussian_integral_series: terms must be >= 1");
    // term_j = (-1)^j s^{2j+1} / (2^j j! (2j+1)); ratio gives the next term
    // without overflow-prone factorials.
    CompensatedSum sum;
    double power_part = s; // s^{2j+1} / (2^j j!)
    for (int j = 0; j < terms; ++j) {
        double term = power_part / (2.0 * j + 1.0);
        sum.add((j % 2 == 0) ? term : -term);
        power_part *= s * s / (2.0 * (j + 1.0));
    }
    return inv_sqrt_two_pi * sum.value();
}

} // namespace demoivre::numerics
