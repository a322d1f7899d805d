#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace demoivre::numerics {

// c, the circumference of the unit circle, and Stirling's constant B = sqrt(c).
inline constexpr double two_pi = 6.2831853071795864769252867665590;
inline constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;
inline constexpr double inv_sqrt_two_pi = 0.3989422804014326779399460599344;

// Number of 1/(12n)-type correction terms kept in the Stirling series.
// The series is asymptotic; depths beyond three are not supported.
struct StirlingConfig {
    int correction_terms = 3; // in [0..3]
};

// ln(n!). Exact summation of ln k for n < 20, Stirling series above.
double log_factorial(std::int64_t n, StirlingConfig cfg = {});

// Stirling-series branch regardless of n:
//   n ln n - n + ln(2 pi n)/2 + 1/(12n) - 1/(360n^3) + 1/(1260n^5)
double stirling_log_factorial(std::int64_t n, StirlingConfig cfg = {});

// ln C(n,k) = log_factorial(n) - log_factorial(k) - log_factorial(n-k).
// Throws DomainError unless 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

// (2 pi)^{-1/2} int_0^s e^{-x^2/2} dx by termwise integration of the
// exponential series:
//   (2 pi)^{-1/2} sum_{j=0}^{terms-1} (-1)^j s^{2j+1} / (2^j j! (2j+1)).
// Alternating with decreasing terms for s <~ 6; larger s belongs to
// quadrature or the complement. Throws DomainError for s < 0.
double gaussian_integral_series(double s, int terms = 40);

// Neumaier-compensated running sum; fixed left-to-right order keeps
// results bit-reproducible.
class CompensatedSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Enough precision to keep
// binomial log-weights accurate to ~1e-13 absolute even at n = 10^6, where
// plain double evaluation of ln C(n,k) loses ~1e-11 to cancellation.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
    double to_double() const { return hi + lo; }
};

DoubleDouble dd_add(DoubleDouble a, DoubleDouble b);
DoubleDouble dd_sub(DoubleDouble a, DoubleDouble b);
DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b);
DoubleDouble dd_mul(DoubleDouble a, double b);
DoubleDouble dd_exp(DoubleDouble a);
DoubleDouble dd_log(DoubleDouble x); // x.hi > 0
DoubleDouble dd_log(double x);

// ln(n!) to double-double accuracy, from a process-wide cached table.
DoubleDouble log_factorial_dd(std::int64_t n);

// lw[k] = ln C(n,k) + k ln p + (n-k) ln(1-p) for k = 0..n, with q = 1-p
// carried exactly. Output vector has n+1 entries.
std::vector<double> binomial_log_weights(std::int64_t n, double p);

// Single-point version of the above.
double binomial_log_weight(std::int64_t n, std::int64_t k, double p);

} // namespace detail

} // namespace demoivre::numerics
