// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 6 note: the 1733 2-sigma/3-sigma digits (0.95428, 0.99874) are
// historical data, bracketed by the historical mode, never reproduction
// targets.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "demoivre/laws.hpp"
#include "demoivre/numerics.hpp"
#include "demoivre/pairing.hpp"
#include "demoivre/probes.hpp"
#include "demoivre/quadrature.hpp"
#include "demoivre/transforms.hpp"
#include "oracle.hpp"

using namespace demoivre;
using demoivre::probes::Probe;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description, double budget_seconds)
        : number_(number), description_(std::move(description)),
          budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!first_failure_.empty())
                first_failure_ += "; ";
            first_failure_ += detail;
        }
    }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        if (elapsed > budget_) {
            ok_ = false;
            first_failure_ += (first_failure_.empty() ? "" : "; ") + std::string(
                "runtime budget exceeded");
        }
        std::printf("%s criterion %d: %s (%.2f s%s%s)\n", ok_ ? "PASS" : "FAIL",
                    number_, description_.c_str(), elapsed,
                    first_failure_.empty() ? "" : " -- ", first_failure_.c_str());
        if (!ok_)
            ++failures;
    }

private:
    int number_;
    std::string description_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string first_failure_;
};

std::string run_binary(const std::string& args, int& exit_code) {
    const char* bin = std::getenv("DEMOIVRE_BIN");
    if (bin == nullptr) {
        exit_code = -1;
        return "";
    }
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

double csv_field(const std::string& text, std::size_t row, std::size_t col) {
    std::istringstream in(text);
    std::string line;
    for (std::size_t r = 0; r <= row; ++r)
        if (!std::getline(in, line))
            return std::nan("");
    std::istringstream ls(line);
    std::string field;
    for (std::size_t c = 0; c <= col; ++c)
        if (!std::getline(ls, field, ','))
            return std::nan("");
    return std::strtod(field.c_str(), nullptr);
}

void criterion_1() {
    Criterion c(1, "modern table: P(|Z|<=1,2,3) digits via the `table` command", 1.0);
    int code = 0;
    std::string out = run_binary("table --format csv", code);
    c.expect(code == 0, "table exited " + std::to_string(code));
    c.expect(std::abs(csv_field(out, 1, 1) - 0.682689) <= 1e-6, "1-sigma digit");
    c.expect(std::abs(csv_field(out, 2, 1) - 0.95450) <= 5e-5, "2-sigma digit");
    c.expect(std::abs(csv_field(out, 3, 1) - 0.99730) <= 5e-5, "3-sigma digit");
}

void criterion_2() {
    Criterion c(2, "series path reproduces the 1-sigma mass to 6 decimals in <= 10 terms",
                1.0);
    const int depth = 7;
    double v = 2.0 * numerics::gaussian_integral_series(1.0, depth);
    c.expect(depth <= 10, "depth exceeds 10");
    c.expect(std::abs(v - 0.6826894921370859) <= 1e-6, "not within 1e-6");
    double six = std::floor(v * 1e6) / 1e6;
    c.expect(six == 0.682688 || six == 0.682689, "first six decimals off");
}

void criterion_3() {
    Criterion c(3, "distributional convergence at p = 0.3 for h0, h2, h3", 30.0);
    const std::vector<std::int64_t> ns{64, 256, 1024, 4096};
    struct Case {
        int index;
        double slope_threshold; // frozen after the direct-computation oracle run
    };
    for (Case to_run : {Case{0, -0.8}, Case{2, -0.8}, Case{3, -0.45}}) {
        auto report = pairing::convergence_study(0.3, Probe::hermite(to_run.index), ns);
        for (std::size_t i = 0; i + 1 < report.errors.size(); ++i)
            c.expect(report.errors[i + 1] < report.errors[i],
                     "h" + std::to_string(to_run.index) + " errors not decreasing");
        c.expect(report.fitted_slope.has_value(),
                 "h" + std::to_string(to_run.index) + " no slope");
        if (report.fitted_slope) {
            c.expect(*report.fitted_slope <= -0.4,
                     "h" + std::to_string(to_run.index) + " slope above -0.4");
            c.expect(*report.fitted_slope <= to_run.slope_threshold,
                     "h" + std::to_string(to_run.index) + " slope above frozen bound");
        }
    }
}

void criterion_4() {
    Criterion c(4, "error decomposition soundness and local-term decay", 30.0);
    for (double p : {0.3, 0.5}) {
        for (int m : {0, 2}) {
            for (double M : {4.0, 8.0}) {
                Probe probe = Probe::hermite(m);
                double previous_local = 0.0;
                int step = 0;
                for (std::int64_t n : {100, 400, 1600}) {
                    auto d = pairing::error_decomposition(laws::BinomialLaw(n, p),
                                                          probe, M);
                    c.expect(d.local_error + d.riemann_error + d.tail_bound >=
                                 d.total_error,
                             "decomposition under-covers");
                    if (step > 0)
                        c.expect(previous_local / d.local_error >= 1.8,
                                 "local error shrank by less than 1.8x");
                    previous_local = d.local_error;
                    ++step;
                }
            }
        }
    }
}

void criterion_5() {
    Criterion c(5, "exact algebraic invariants <1>, <x>, <x^2>", 5.0);
    for (std::int64_t n : {2LL, 17LL, 100LL, 10000LL}) {
        for (double p : {0.1, 0.5, 0.9}) {
            laws::BinomialLaw law(n, p);
            double m0 = pairing::pair_binomial(law, Probe::monomial(0)).value.real();
            double m1 = pairing::pair_binomial(law, Probe::monomial(1)).value.real();
            double m2 = pairing::pair_binomial(law, Probe::monomial(2)).value.real();
            std::string tag = " at n=" + std::to_string(n) + ", p=" + std::to_string(p);
            c.expect(std::abs(m0 - 1.0) <= 1e-12, "<1> != 1" + tag);
            c.expect(std::abs(m1) <= 1e-12, "<x> != 0" + tag);
            c.expect(std::abs(m2 - 1.0) <= 1e-12, "<x^2> != 1" + tag);
        }
    }
}

void criterion_6() {
    Criterion c(6, "local limit: weights track density(x) dx within 2% near the mode",
                5.0);
    for (double p : {0.5, 0.3}) {
        laws::BinomialLaw law(10000, p);
        std::vector<double> lw = law.log_weights();
        double worst = 0.0;
        for (std::int64_t k = 0; k <= law.n(); ++k) {
            double x = law.standardized_x(k);
            if (std::abs(x) > 2.0)
                continue;
            double ratio = std::exp(lw[static_cast<std::size_t>(k)]) /
                           (laws::gaussian_density(x) * law.dx());
            worst = std::max(worst, std::abs(ratio - 1.0));
        }
        c.expect(worst <= 0.02, "deviation " + std::to_string(worst));
    }
    // n = 100 central weight against the exact enumeration oracle
    laws::BinomialLaw law(100, 0.5);
    double height = std::exp(law.log_weight(50)) / law.dx();
    c.expect(std::abs(height / numerics::inv_sqrt_two_pi - 1.0) <= 0.0025,
             "central bar height off by more than 0.25%");
    long double exact = std::ldexp(oracle::to_long_double(oracle::binomial_exact(100, 50)), -100);
    c.expect(std::abs(std::exp(law.log_weight(50)) - static_cast<double>(exact)) <= 1e-12,
             "w_50 drifts from the exact value");
}

void criterion_7() {
    Criterion c(7, "probe chain: cf = pgf on the unit circle, DFT recovery, |cf| <= 1",
                5.0);
    std::mt19937 rng(101733);
    std::uniform_real_distribution<double> dist(-3.141592653589793,
                                                3.141592653589793);
    laws::BinomialLaw law(500, 0.3);
    for (int i = 0; i < 100; ++i) {
        double t = dist(rng);
        std::complex<double> lhs = transforms::characteristic_function(law, t);
        std::complex<double> rhs = transforms::pgf(law, {std::cos(t), std::sin(t)});
        c.expect(std::abs(lhs - rhs) <= 1e-13, "cf/pgf identity");
        c.expect(std::abs(lhs) <= 1.0, "|cf| above 1");
    }
    for (std::int64_t n : {8, 31, 64}) {
        for (double p : {0.2, 0.5}) {
            laws::BinomialLaw small(n, p);
            auto recovered = transforms::recover_weights_by_dft(small);
            auto lw = small.log_weights();
            double worst = 0.0;
            for (std::size_t k = 0; k < lw.size(); ++k)
                worst = std::max(worst, std::abs(recovered[k] - std::exp(lw[k])));
            c.expect(worst <= 1e-10, "DFT recovery above 1e-10");
        }
    }
}

void criterion_8() {
    Criterion c(8, "weak second moment of Cauchy is finite and oracle-checked "
                   "(classical one diverges)", 5.0);
    transforms::Density cauchy = transforms::cauchy_density_fn(laws::CauchyLaw(0.0, 1.0));
    double weak = transforms::weak_moment(cauchy, 2,
                                          Probe::gaussian_windowed_polynomial({1.0}));
    double reference = oracle::integrate_adaptive(
        [](double x) {
            return x * x * std::exp(-0.5 * x * x) /
                   ((1.0 + x * x) * 3.141592653589793);
        },
        -40.0, 40.0, 1e-13);
    c.expect(std::isfinite(weak), "weak moment not finite");
    c.expect(std::abs(weak - reference) <= 1e-8, "oracle mismatch");
}

void criterion_9() {
    Criterion c(9, "quadrature exactness and the series cross-check", 1.0);
    auto simpson = quadrature::NewtonCotesRule::of_degree(2);
    double cubic = quadrature::integrate([](double x) { return x * x * x; }, 0.0, 1.0,
                                         simpson, 1);
    c.expect(std::abs(cubic - 0.25) <= 1e-15, "Simpson not exact on x^3");
    auto boole = quadrature::NewtonCotesRule::of_degree(4);
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        double q = quadrature::gaussian_cdf_central(s, boole, 256);
        double series = 2.0 * numerics::gaussian_integral_series(s, 40);
        c.expect(std::abs(q - series) <= 1e-10,
                 "series/quadrature mismatch at s = " + std::to_string(s));
    }
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
