#pragma once

#include <cstdint>
#include <vector>

namespace demoivre::laws {

// Standard normal density (2 pi)^{-1/2} e^{-x^2/2}.
double gaussian_density(double x);

// Law of the number of successes in n Bernoulli(p) trials, exposed through
// its standardized atoms x_k = (k - np)/sqrt(npq) and log-weights
// ln w_k = ln C(n,k) + k ln p + (n-k) ln q. Immutable after construction.
class BinomialLaw {
public:
    BinomialLaw(std::int64_t n, double p); // requires n >= 1, 0 < p < 1

    // Chance-weight form: p = a/(a+b), variance a b n / (a+b)^2 = npq.
    static BinomialLaw from_chances(double a, double b, std::int64_t n);

    std::int64_t n() const { return n_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double mean() const { return mean_; }   // np
    double sigma() const { return sigma_; } // sqrt(npq)
    double dx() const { return dx_; }       // grid spacing 1/sigma

    double standardized_x(std::int64_t k) const {
        return (static_cast<double>(k) - mean_) / sigma_;
    }

    double log_weight(std::int64_t k) const;          // single atom
    std::vector<double> log_weights() const;          // all n+1 atoms

private:
    std::int64_t n_;
    double p_, q_, mean_, sigma_, dx_;
};

struct StandardizedAtom {
    std::int64_t k;    // raw count
    double offset_l;   // l = k - np
    double x;          // offset_l / sigma
    double log_weight; // ln w_k
};

struct AtomGrid {
    std::vector<StandardizedAtom> atoms; // increasing k
    double dx = 0.0;
};

// Materializes all n+1 atoms. Weights are normalized by construction; no
// renormalization is applied.
AtomGrid atom_grid(const BinomialLaw& law);

// The limit object: standard normal, mean 0, variance 1.
struct GaussianReference {
    double density(double x) const { return gaussian_density(x); }
};

// Cauchy law for the weak-moment demonstration; classical moments diverge.
struct CauchyLaw {
    CauchyLaw(double location, double scale); // requires scale > 0
    double location = 0.0;
    double scale = 1.0;
    double density(double x) const;
};

} // namespace demoivre::laws
