#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace demoivre::quadrature {

// Closed Newton-Cotes rule on one panel, weights normalized to panel width.
// Degrees: 1 trapezoid, 2 Simpson, 3 Simpson 3/8, 4 Boole. Higher degrees
// have negative weights and are not provided.
class NewtonCotesRule {
public:
    static NewtonCotesRule of_degree(int degree); // throws DomainError unless 1..4

    int degree() const { return degree_; }
    std::span<const double> panel_weights() const { return weights_; }
    const std::string& name() const { return name_; }

private:
    NewtonCotesRule(int degree, std::vector<double> weights, std::string name)
        : degree_(degree), weights_(std::move(weights)), name_(std::move(name)) {}
    int degree_;
    std::vector<double> weights_;
    std::string name_;
};

// Composite application of `rule` over `panels` equal subintervals of [a, b],
// nodes visited left to right. Throws DomainError for a > b or panels < 1 and
// NonFiniteResultError (naming the node) when f produces a non-finite value.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const NewtonCotesRule& rule, int panels);

// P(|Z| <= s) = 2 int_0^s gaussian_density, by composite quadrature.
double gaussian_cdf_central(double s, const NewtonCotesRule& rule, int panels);

// Fourth derivative bound of the standard normal density: 3/sqrt(2 pi),
// attained at 0 (verified by grid search in the tests).
inline constexpr double gaussian_density_max_d4 = 1.1968268412042980032;

// Panel count for composite Simpson on gaussian_density over [a, b] using
// the standard error model (b-a) h^4 max|f''''| / 180 <= tol.
int gaussian_panels_for_tolerance(double a, double b, double tol);

// Deliberately coarse quadrature sweep used to bracket the eighteenth-century
// tail-probability digits. Reports every setting; claims nothing about the
// original procedure.
struct HistoricalSetting {
    int degree = 0;
    int panels = 0;
    double value = 0.0;
    std::string label; // e.g. "simpson:2"
};

struct HistoricalBracket {
    double low = 0.0;
    double high = 0.0;
    HistoricalSetting low_setting;
    HistoricalSetting high_setting;
    std::vector<HistoricalSetting> sweep;
};

// Evaluates P(|Z| <= s) over degrees 1..4 x panels 1..4.
HistoricalBracket historical_gaussian_bracket(double s);

} // namespace demoivre::quadrature
