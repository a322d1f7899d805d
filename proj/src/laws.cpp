#include "demoivre/laws.hpp"

#include <cmath>
#include <string>

#include "demoivre/errors.hpp"
#include "demoivre/numerics.hpp"

namespace demoivre::laws {

double gaussian_density(double x) {
    return numerics::inv_sqrt_two_pi * std::exp(-0.5 * x * x);
}

BinomialLaw::BinomialLaw(std::int64_t n, double p) : n_(n), p_(p) {
    if (n < 1)
        throw DomainError("BinomialLaw: n must be >= 1");
    if (!(p > 0.0) || !(p < 1.0))
        throw DomainError("BinomialLaw: p must lie strictly inside (0, 1), got " +
                          std::to_string(p));
    q_ = 1.0 - p;
    mean_ = static_cast<double>(n) * p;
    sigma_ = std::sqrt(mean_ * q_);
    dx_ = 1.0 / sigma_;
}

BinomialLaw BinomialLaw::from_chances(double a, double b, std::int64_t n) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("BinomialLaw::from_chances: chances a, b must be positive");
    return BinomialLaw(n, a / (a + b));
}

double BinomialLaw::log_weight(std::int64_t k) const {
    if (k < 0 || k > n_)
        throw DomainError("BinomialLaw::log_weight: k outside [0, n]");
    return numerics::detail::binomial_log_weight(n_, k, p_);
}

std::vector<double> BinomialLaw::log_weights() const {
    return numerics::detail::binomial_log_weights(n_, p_);
}

AtomGrid atom_grid(const BinomialLaw& law) {
    AtomGrid grid;
    grid.dx = law.dx();
    grid.atoms.reserve(static_cast<std::size_t>(law.n()) + 1);
    std::vector<double> lw = law.log_weights();
    for (std::int64_t k = 0; k <= law.n(); ++k) {
        double offset = static_cast<double>(k) - law.mean();
        grid.atoms.push_back({k, offset, offset / law.sigma(),
                              lw[static_cast<std::size_t>(k)]});
    }
    return grid;
}

CauchyLaw::CauchyLaw(double location_, double scale_)
    : location(location_), scale(scale_) {
    if (!(scale > 0.0))
        throw DomainError("CauchyLaw: scale must be positive");
}

double CauchyLaw::density(double x) const {
    double d = x - location;
    return scale / ((d * d + scale * scale) * numerics::two_pi * 0.5);
}

} // namespace demoivre::laws
