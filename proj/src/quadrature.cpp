#include "demoivre/quadrature.hpp"

#include <cmath>
#include <limits>

#include "demoivre/errors.hpp"
#include "demoivre/laws.hpp"
#include "demoivre/numerics.hpp"

namespace demoivre::quadrature {

NewtonCotesRule NewtonCotesRule::of_degree(int degree) {
    switch (degree) {
    case 1:
        return {1, {1.0 / 2, 1.0 / 2}, "trapezoid"};
    case 2:
        return {2, {1.0 / 6, 4.0 / 6, 1.0 / 6}, "simpson"};
    case 3:
        return {3, {1.0 / 8, 3.0 / 8, 3.0 / 8, 1.0 / 8}, "simpson38"};
    case 4:
        return {4, {7.0 / 90, 32.0 / 90, 12.0 / 90, 32.0 / 90, 7.0 / 90}, "boole"};
    default:
        throw DomainError("NewtonCotesRule: degree must be in [1..4]");
    }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const NewtonCotesRule& rule, int panels) {
    if (a > b)
        throw DomainError("integrate: requires a <= b");
    if (panels < 1)
        throw DomainError("integrate: panels must be >= 1");
    if (a == b)
        return 0.0;

    const auto weights = rule.panel_weights();
    const int d = rule.degree();
    const double width = (b - a) / panels;
    numerics::CompensatedSum total;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * width;
        double panel = 0.0;
        for (int j = 0; j <= d; ++j) {
            double x = x0 + width * (static_cast<double>(j) / d);
            double fx = f(x);
            if (!std::isfinite(fx))
                throw NonFiniteResultError(x);
            panel += weights[static_cast<std::size_t>(j)] * fx;
        }
        total.add(width * panel);
    }
    return total.value();
}

double gaussian_cdf_central(double s, const NewtonCotesRule& rule, int panels) {
    if (!(s > 0.0))
        throw DomainError("gaussian_cdf_central: s must be positive");
    return 2.0 * integrate([](double x) { return laws::gaussian_density(x); }, 0.0, s,
                           rule, panels);
}

int gaussian_panels_for_tolerance(double a, double b, double tol) {
    if (a > b)
        throw DomainError("gaussian_panels_for_tolerance: requires a <= b");
    if (!(tol > 0.0))
        throw DomainError("gaussian_panels_for_tolerance: tolerance must be positive");
    double length = b - a;
    if (length == 0.0)
        return 1;
    // composite Simpson: |E| <= (b-a)^5 M4 / (180 panels^4)
    int panels = static_cast<int>(std::ceil(
        std::pow(std::pow(length, 5) * gaussian_density_max_d4 / (180.0 * tol), 0.25)));
    return panels < 4 ? 4 : panels;
}

HistoricalBracket historical_gaussian_bracket(double s) {
    HistoricalBracket bracket;
    bracket.low = std::numeric_limits<double>::infinity();
    bracket.high = -std::numeric_limits<double>::infinity();
    for (int degree = 1; degree <= 4; ++degree) {
        NewtonCotesRule rule = NewtonCotesRule::of_degree(degree);
        for (int panels = 1; panels <= 4; ++panels) {
            HistoricalSetting setting;
            setting.degree = degree;
            setting.panels = panels;
            setting.value = gaussian_cdf_central(s, rule, panels);
            setting.label = rule.name() + ":" + std::to_string(panels);
            if (setting.value < bracket.low) {
                bracket.low = setting.value;
                bracket.low_setting = setting;
            }
            if (setting.value > bracket.high) {
                bracket.high = setting.value;
                bracket.high_setting = setting;
            }
            bracket.sweep.push_back(std::move(setting));
        }
    }
    return bracket;
}

} // namespace demoivre::quadrature
