#include "demoivre/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "demoivre/errors.hpp"
#include "demoivre/laws.hpp"
#include "demoivre/numerics.hpp"
#include "demoivre/pairing.hpp"
#include "demoivre/quadrature.hpp"
#include "demoivre/transforms.hpp"

namespace demoivre::cli {

namespace {

constexpr const char* kProbeGrammar =
    "probe spec: hermite:<m> | indicator:<a>:<b> | monomial:<r> | expi:<t> | "
    "gwp:<c0>,<c1>,...";

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, delim))
        out.push_back(item);
    if (!s.empty() && s.back() == delim)
        out.push_back("");
    return out;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (pos != s.size())
        throw UsageError("trailing characters in number: '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (pos != s.size())
        throw UsageError("trailing characters in integer: '" + s + "'");
    return v;
}

std::string format_value(double v, OutputTable::Format format) {
    char buf[40];
    std::snprintf(buf, sizeof buf,
                  format == OutputTable::Format::csv ? "%.15g" : "%.6g", v);
    return buf;
}

} // namespace

probes::Probe parse_probe_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.empty() || parts[0].empty())
        throw UsageError(std::string("empty probe spec; ") + kProbeGrammar);
    const std::string& kind = parts[0];
    try {
        if (kind == "hermite") {
            if (parts.size() != 2)
                throw UsageError("hermite probe takes one index, e.g. hermite:3");
            return probes::Probe::hermite(parse_int(parts[1]));
        }
        if (kind == "indicator") {
            if (parts.size() != 3)
                throw UsageError("indicator probe takes two endpoints, e.g. indicator:-1:1");
            return probes::Probe::indicator(parse_double(parts[1]), parse_double(parts[2]));
        }
        if (kind == "monomial") {
            if (parts.size() != 2)
                throw UsageError("monomial probe takes one degree, e.g. monomial:2");
            return probes::Probe::monomial(parse_int(parts[1]));
        }
        if (kind == "expi") {
            if (parts.size() != 2)
                throw UsageError("expi probe takes one frequency, e.g. expi:1.5");
            return probes::Probe::complex_exponential(parse_double(parts[1]));
        }
        if (kind == "gwp") {
            if (parts.size() != 2)
                throw UsageError("gwp probe takes a coefficient list, e.g. gwp:1,0,2");
            std::vector<double> coefficients;
            for (const auto& c : split(parts[1], ','))
                coefficients.push_back(parse_double(c));
            return probes::Probe::gaussian_windowed_polynomial(std::move(coefficients));
        }
    } catch (const DomainError& e) {
        throw UsageError(std::string("invalid probe spec '") + spec + "': " + e.what());
    }
    throw UsageError("unknown probe kind '" + kind + "'; " + kProbeGrammar);
}

void OutputTable::add_row(std::vector<Cell> row) {
    rows.push_back(std::move(row));
}

std::string OutputTable::render(Format format) const {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<std::string> line;
        line.reserve(headers.size());
        for (std::size_t c = 0; c < headers.size(); ++c) {
            if (c >= row.size()) {
                line.emplace_back("");
                continue;
            }
            const Cell& cell = row[c];
            if (std::holds_alternative<double>(cell))
                line.push_back(format_value(std::get<double>(cell), format));
            else if (std::holds_alternative<std::string>(cell))
                line.push_back(std::get<std::string>(cell));
            else
                line.emplace_back(format == Format::csv ? "" : "-");
        }
        cells.push_back(std::move(line));
    }

    std::string out;
    if (format == Format::csv) {
        for (std::size_t c = 0; c < headers.size(); ++c) {
            if (c)
                out += ',';
            out += headers[c];
        }
        out += '\n';
        for (const auto& line : cells) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                if (c)
                    out += ',';
                out += line[c];
            }
            out += '\n';
        }
        return out;
    }

    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        widths[c] = headers[c].size();
        for (const auto& line : cells)
            widths[c] = std::max(widths[c], line[c].size());
    }
    auto append_line = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c)
                out += "  ";
            out.append(widths[c] - line[c].size(), ' ');
            out += line[c];
        }
        out += '\n';
    };
    append_line(headers);
    for (const auto& line : cells)
        append_line(line);
    return out;
}

namespace {

// De Moivre's published digits, shipped as data; never recomputed.
struct HistoricalEntry {
    double sigma;
    double value;
};
constexpr HistoricalEntry kHistoricalTable[] = {
    {1.0, 0.682688},
    {2.0, 0.95428},
    {3.0, 0.99874},
};

struct CommandContext {
    OutputTable::Format format = OutputTable::Format::aligned_text;
    std::string out_path;
    std::vector<OutputTable> blocks;

    int emit() const {
        std::string text;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i)
                text += '\n';
            text += blocks[i].render(format);
        }
        if (out_path.empty()) {
            std::cout << text;
            return 0;
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open output file '" + out_path + "'");
        file << text;
        return 0;
    }
};

void add_format_flags(CLI::App* cmd, CommandContext& ctx) {
    cmd->add_option_function<std::string>(
           "--format",
           [&ctx](const std::string& v) {
               if (v == "csv")
                   ctx.format = OutputTable::Format::csv;
               else if (v == "text")
                   ctx.format = OutputTable::Format::aligned_text;
               else
                   throw CLI::ValidationError("--format", "must be 'text' or 'csv'");
           },
           "Output format: text (aligned, 6 digits) or csv (15 digits)")
        ->default_str("text");
    cmd->add_option("--out", ctx.out_path, "Write output to a file instead of stdout");
}

void check_probability(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw UsageError("--p must lie strictly inside (0, 1)");
}

probes::Probe widen_indicator(const probes::Probe& probe, double half_step) {
    const auto* ind = std::get_if<probes::IndicatorKind>(&probe.kind());
    if (ind == nullptr)
        throw UsageError("--continuity-correction applies only to indicator probes");
    return probes::Probe::indicator(ind->a - half_step, ind->b + half_step);
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
    std::vector<double> sigmas{1.0, 2.0, 3.0};
    std::int64_t n = 0; // 0 = no binomial column
    double p = 0.5;
    bool historical = false;
    bool continuity_correction = false;
};

int run_table(const TableArgs& args, CommandContext& ctx) {
    for (double s : args.sigmas)
        if (!(s >= 0.0))
            throw UsageError("--sigmas entries must be >= 0");
    if (args.n != 0 && args.n < 4)
        throw UsageError("--n must be >= 4");
    check_probability(args.p);

    OutputTable table;
    table.headers = {"sigma", "modern", "demoivre_1733"};
    if (args.n != 0)
        table.headers.push_back("binomial_n" + std::to_string(args.n));
    if (args.historical) {
        table.headers.push_back("hist_low");
        table.headers.push_back("hist_high");
        table.headers.push_back("hist_low_setting");
        table.headers.push_back("hist_high_setting");
    }

    auto simpson = quadrature::NewtonCotesRule::of_degree(2);
    for (double s : args.sigmas) {
        std::vector<OutputTable::Cell> row;
        row.emplace_back(s);
        double modern =
            s == 0.0 ? 0.0
                     : quadrature::gaussian_cdf_central(
                           s, simpson, quadrature::gaussian_panels_for_tolerance(0.0, s, 1e-9));
        row.emplace_back(modern);

        OutputTable::Cell demoivre = std::monostate{};
        for (const auto& entry : kHistoricalTable)
            if (entry.sigma == s)
                demoivre = entry.value;
        row.push_back(demoivre);

        if (args.n != 0) {
            laws::BinomialLaw law(args.n, args.p);
            probes::Probe probe = probes::Probe::indicator(-s, s);
            if (args.continuity_correction)
                probe = widen_indicator(probe, law.dx() / 2.0);
            row.emplace_back(pairing::pair_binomial(law, probe).value.real());
        }
        if (args.historical) {
            if (s == 0.0) {
                row.emplace_back(std::monostate{});
                row.emplace_back(std::monostate{});
                row.emplace_back(std::monostate{});
                row.emplace_back(std::monostate{});
            } else {
                auto bracket = quadrature::historical_gaussian_bracket(s);
                row.emplace_back(bracket.low);
                row.emplace_back(bracket.high);
                row.emplace_back(bracket.low_setting.label);
                row.emplace_back(bracket.high_setting.label);
            }
        }
        table.add_row(std::move(row));
    }
    ctx.blocks.push_back(std::move(table));
    return ctx.emit();
}

// ---- converge --------------------------------------------------------------

struct ConvergeArgs {
    double p = 0.5;
    std::string probe_spec;
    std::int64_t n_start = 64;
    std::int64_t n_stop = 4096;
    std::int64_t factor = 4;
};

int run_converge(const ConvergeArgs& args, CommandContext& ctx) {
    check_probability(args.p);
    if (args.n_start < 4)
        throw UsageError("--n-start must be >= 4");
    if (args.factor < 2)
        throw UsageError("--factor must be >= 2");
    std::vector<std::int64_t> n_values;
    for (std::int64_t n = args.n_start; n <= args.n_stop; n *= args.factor)
        n_values.push_back(n);
    if (n_values.size() < 3)
        throw UsageError("n range must yield at least 3 points");

    probes::Probe probe = parse_probe_spec(args.probe_spec);
    auto report = pairing::convergence_study(args.p, probe, n_values);
    std::complex<double> reference =
        pairing::pair_gaussian(probe, pairing::GaussianMethod::quadrature);

    OutputTable table;
    table.headers = {"n", "pairing_re", "pairing_im", "gaussian_re", "gaussian_im",
                     "abs_error"};
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
        laws::BinomialLaw law(report.n_values[i], args.p);
        std::complex<double> value = pairing::pair_binomial(law, probe).value;
        table.add_row({static_cast<double>(report.n_values[i]), value.real(),
                       value.imag(), reference.real(), reference.imag(),
                       report.errors[i]});
    }
    ctx.blocks.push_back(std::move(table));

    OutputTable trailer;
    trailer.headers = {"fitted_slope", "note"};
    if (report.fitted_slope)
        trailer.add_row({*report.fitted_slope,
                         report.note.empty() ? OutputTable::Cell{std::monostate{}}
                                             : OutputTable::Cell{report.note}});
    else
        trailer.add_row({std::monostate{}, report.note});
    ctx.blocks.push_back(std::move(trailer));
    return ctx.emit();
}

// ---- plot-data -------------------------------------------------------------

struct PlotDataArgs {
    std::int64_t n = 0;
    double p = 0.5;
    double range = 4.0;
};

int run_plot_data(const PlotDataArgs& args, CommandContext& ctx) {
    if (args.n < 4)
        throw UsageError("--n must be >= 4");
    check_probability(args.p);
    if (!(args.range >= 0.0))
        throw UsageError("--range must be >= 0");

    laws::BinomialLaw law(args.n, args.p);
    OutputTable atoms;
    atoms.headers = {"x", "height"}; // height = w_k / dx, comparable to the density
    std::vector<double> lw = law.log_weights();
    for (std::int64_t k = 0; k <= law.n(); ++k) {
        double x = law.standardized_x(k);
        if (std::abs(x) < args.range)
            atoms.add_row({x, std::exp(lw[static_cast<std::size_t>(k)]) * law.sigma()});
    }
    ctx.blocks.push_back(std::move(atoms));

    OutputTable curve;
    curve.headers = {"x", "density"};
    for (int i = 0; i <= 400; ++i) {
        double x = -args.range + 2.0 * args.range * static_cast<double>(i) / 400.0;
        curve.add_row({x, laws::gaussian_density(x)});
    }
    ctx.blocks.push_back(std::move(curve));
    return ctx.emit();
}

// ---- pair ------------------------------------------------------------------

struct PairArgs {
    std::int64_t n = 0;
    double p = 0.5;
    std::string probe_spec;
    double cutoff_m = pairing::default_cutoff_M;
    bool continuity_correction = false;
    bool parallel = false;
};

int run_pair(const PairArgs& args, CommandContext& ctx) {
    if (args.n < 1)
        throw UsageError("--n must be >= 1");
    check_probability(args.p);
    if (!(args.cutoff_m > 0.0))
        throw UsageError("--cutoff-m must be positive");

    laws::BinomialLaw law(args.n, args.p);
    probes::Probe probe = parse_probe_spec(args.probe_spec);
    if (args.continuity_correction)
        probe = widen_indicator(probe, law.dx() / 2.0);

    pairing::PairOptions options;
    options.cutoff_M = args.cutoff_m;
    options.parallel = args.parallel;
    auto result = pairing::pair_binomial(law, probe, options);

    OutputTable table;
    table.headers = {"value_re", "value_im",  "bulk_re",          "bulk_im",
                     "tail_re",  "tail_im",   "tail_certificate", "cutoff_m"};
    table.add_row({result.value.real(), result.value.imag(), result.bulk_value.real(),
                   result.bulk_value.imag(), result.tail_value.real(),
                   result.tail_value.imag(), result.tail_certificate, result.cutoff_M});
    ctx.blocks.push_back(std::move(table));
    return ctx.emit();
}

// ---- local -----------------------------------------------------------------

struct LocalArgs {
    std::int64_t n = 0;
    std::vector<std::int64_t> l;
    double p = -1.0; // < 0 = symmetric form
};

int run_local(const LocalArgs& args, CommandContext& ctx) {
    if (args.n < 2)
        throw UsageError("--n must be >= 2");
    if (args.l.empty())
        throw UsageError("--l is required");
    if (args.p >= 0.0)
        check_probability(args.p);

    OutputTable table;
    table.headers = {"l", "exact_log_ratio", "demoivre_log_ratio", "difference"};
    for (std::int64_t l : args.l) {
        pairing::LocalRatio ratio = args.p >= 0.0 ? pairing::local_ratio(args.n, l, args.p)
                                                  : pairing::local_ratio(args.n, l);
        table.add_row({static_cast<double>(l), ratio.exact_log_ratio,
                       ratio.demoivre_log_ratio,
                       ratio.exact_log_ratio - ratio.demoivre_log_ratio});
    }
    ctx.blocks.push_back(std::move(table));
    return ctx.emit();
}

// ---- moments ---------------------------------------------------------------

struct MomentsArgs {
    std::int64_t n = 0;
    double p = 0.5;
    std::vector<int> r;
    bool standardized = false;
    bool weak = false;
    std::string density_spec;
    std::string window_spec;
};

transforms::Density parse_density_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    if (!parts.empty() && parts[0] == "gaussian" && parts.size() == 1)
        return transforms::gaussian_density_fn();
    if (!parts.empty() && parts[0] == "cauchy") {
        if (parts.size() == 1)
            return transforms::cauchy_density_fn(laws::CauchyLaw(0.0, 1.0));
        if (parts.size() == 3) {
            double location = parse_double(parts[1]);
            double scale = parse_double(parts[2]);
            if (!(scale > 0.0))
                throw UsageError("cauchy scale must be positive");
            return transforms::cauchy_density_fn(laws::CauchyLaw(location, scale));
        }
        throw UsageError("density spec: cauchy or cauchy:<location>:<scale>");
    }
    throw UsageError("density spec: gaussian | cauchy | cauchy:<location>:<scale>");
}

int run_moments(const MomentsArgs& args, CommandContext& ctx) {
    if (args.r.empty())
        throw UsageError("--r is required");

    OutputTable table;
    table.headers = {"r", "value"};
    if (args.weak) {
        if (args.density_spec.empty() || args.window_spec.empty())
            throw UsageError("--weak requires --density and --window");
        transforms::Density density = parse_density_spec(args.density_spec);
        probes::Probe window = parse_probe_spec(args.window_spec);
        for (int r : args.r)
            table.add_row({static_cast<double>(r),
                           transforms::weak_moment(density, r, window)});
    } else {
        if (args.n < 1)
            throw UsageError("--n is required for classical moments");
        check_probability(args.p);
        laws::BinomialLaw law(args.n, args.p);
        for (int r : args.r)
            table.add_row({static_cast<double>(r),
                           transforms::classical_moment(law, r, args.standardized)});
    }
    ctx.blocks.push_back(std::move(table));
    return ctx.emit();
}

// ---- cf --------------------------------------------------------------------

struct CfArgs {
    std::int64_t n = 0;
    double p = 0.5;
    std::vector<double> t;
    std::string route = "closed";
    bool weak = false;
    std::string density_spec;
    std::string window_spec;
};

int run_cf(const CfArgs& args, CommandContext& ctx) {
    if (args.t.empty())
        throw UsageError("--t is required");

    OutputTable table;
    if (args.weak) {
        if (args.density_spec.empty() || args.window_spec.empty())
            throw UsageError("--weak requires --density and --window");
        transforms::Density density = parse_density_spec(args.density_spec);
        probes::Probe window = parse_probe_spec(args.window_spec);
        double window_mass = transforms::weak_moment(density, 0, window);
        table.headers = {"t", "raw_re", "raw_im", "normalized_re", "normalized_im"};
        for (double t : args.t) {
            std::complex<double> raw =
                transforms::weak_characteristic_function(density, t, window);
            std::complex<double> normalized = raw / window_mass;
            table.add_row({t, raw.real(), raw.imag(), normalized.real(),
                           normalized.imag()});
        }
    } else {
        if (args.n < 1)
            throw UsageError("--n is required");
        check_probability(args.p);
        if (args.route != "closed" && args.route != "pairing")
            throw UsageError("--route must be 'closed' or 'pairing'");
        laws::BinomialLaw law(args.n, args.p);
        table.headers = {"t", "re", "im", "abs"};
        for (double t : args.t) {
            std::complex<double> value =
                args.route == "closed"
                    ? transforms::characteristic_function(law, t)
                    : transforms::characteristic_function_by_pairing(law, t);
            table.add_row({t, value.real(), value.imag(), std::abs(value)});
        }
    }
    ctx.blocks.push_back(std::move(table));
    return ctx.emit();
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Operational probability toolkit: binomial laws paired against "
                 "probe families, with the Gaussian limit and its error "
                 "decomposition"};
    app.require_subcommand(1);
    std::string grammar_footer = std::string(kProbeGrammar);
    app.footer(grammar_footer);

    CommandContext ctx;

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand(
        "table", "Central-probability table: modern quadrature next to the 1733 "
                 "digits; optional exact binomial column");
    table_cmd->add_option("--sigmas", table_args.sigmas,
                          "Interval half-widths in sigma units (default 1 2 3)");
    table_cmd->add_option("--n", table_args.n, "Binomial trial count for an exact column");
    table_cmd->add_option("--p", table_args.p, "Success probability (default 0.5)");
    table_cmd->add_flag("--historical", table_args.historical,
                        "Add a coarse-quadrature bracketing column (reports settings)");
    table_cmd->add_flag("--continuity-correction", table_args.continuity_correction,
                        "Widen indicator endpoints outward by dx/2");

    ConvergeArgs converge_args;
    auto* converge_cmd = app.add_subcommand(
        "converge", "Pairing errors against the Gaussian limit along a geometric n "
                    "ladder, with fitted log-log slope");
    converge_cmd->add_option("--p", converge_args.p, "Success probability")->required();
    converge_cmd->add_option("--probe", converge_args.probe_spec, "Probe spec")->required();
    converge_cmd->add_option("--n-start", converge_args.n_start, "First n (default 64)");
    converge_cmd->add_option("--n-stop", converge_args.n_stop, "Last n (default 4096)");
    converge_cmd->add_option("--factor", converge_args.factor, "Geometric step (default 4)");

    PlotDataArgs plot_args;
    auto* plot_cmd = app.add_subcommand(
        "plot-data", "Density-normalized atom heights plus a 401-point Gaussian "
                     "curve sample, as two CSV blocks");
    plot_cmd->add_option("--n", plot_args.n, "Trial count")->required();
    plot_cmd->add_option("--p", plot_args.p, "Success probability (default 0.5)");
    plot_cmd->add_option("--range", plot_args.range,
                         "Atoms with |x| < range are emitted (default 4)");

    PairArgs pair_args;
    auto* pair_cmd = app.add_subcommand(
        "pair", "Pair a binomial law against a probe; reports the bulk/tail split "
                "at the cutoff and the tail certificate (closed intervals)");
    pair_cmd->add_option("--n", pair_args.n, "Trial count")->required();
    pair_cmd->add_option("--p", pair_args.p, "Success probability (default 0.5)");
    pair_cmd->add_option("--probe", pair_args.probe_spec, "Probe spec")->required();
    pair_cmd->add_option("--cutoff-m", pair_args.cutoff_m, "Bulk/tail cutoff (default 10)");
    pair_cmd->add_flag("--continuity-correction", pair_args.continuity_correction,
                       "Widen indicator endpoints outward by dx/2");
    pair_cmd->add_flag("--parallel", pair_args.parallel,
                       "Chunked parallel atom sum (agrees with sequential to 1e-13)");

    LocalArgs local_args;
    auto* local_cmd = app.add_subcommand(
        "local", "Exact vs Gaussian-exponent log term ratios at offset l from the "
                 "largest term");
    local_cmd->add_option("--n", local_args.n, "Trial count")->required();
    local_cmd->add_option("--l", local_args.l, "Offsets from the central term")->required();
    local_cmd->add_option("--p", local_args.p,
                          "Success probability for the general form (omit for p = 1/2)");

    MomentsArgs moments_args;
    auto* moments_cmd = app.add_subcommand(
        "moments", "Classical binomial moments, or weak (windowed) moments of a "
                   "density that need no classical moments at all");
    moments_cmd->add_option("--n", moments_args.n, "Trial count (classical route)");
    moments_cmd->add_option("--p", moments_args.p, "Success probability (default 0.5)");
    moments_cmd->add_option("--r", moments_args.r, "Moment orders")->required();
    moments_cmd->add_flag("--standardized", moments_args.standardized,
                          "Moments of (k - np)/sigma instead of raw counts");
    moments_cmd->add_flag("--weak", moments_args.weak, "Weak-moment route");
    moments_cmd->add_option("--density", moments_args.density_spec,
                            "gaussian | cauchy | cauchy:<location>:<scale>");
    moments_cmd->add_option("--window", moments_args.window_spec,
                            "Schwartz window probe spec (weak route)");

    CfArgs cf_args;
    auto* cf_cmd = app.add_subcommand(
        "cf", "Characteristic function of a binomial law, or the regularised "
              "(windowed) characteristic function of a density");
    cf_cmd->add_option("--n", cf_args.n, "Trial count");
    cf_cmd->add_option("--p", cf_args.p, "Success probability (default 0.5)");
    cf_cmd->add_option("--t", cf_args.t, "Frequencies")->required();
    cf_cmd->add_option("--route", cf_args.route,
                       "closed (product form) or pairing (atom sum); default closed");
    cf_cmd->add_flag("--weak", cf_args.weak, "Weak characteristic function route");
    cf_cmd->add_option("--density", cf_args.density_spec,
                       "gaussian | cauchy | cauchy:<location>:<scale>");
    cf_cmd->add_option("--window", cf_args.window_spec, "Schwartz window probe spec");

    for (auto* cmd : {table_cmd, converge_cmd, plot_cmd, pair_cmd, local_cmd,
                      moments_cmd, cf_cmd})
        add_format_flags(cmd, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help on stdout, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e); // message on stderr
        return 2;
    }

    try {
        if (table_cmd->parsed())
            return run_table(table_args, ctx);
        if (converge_cmd->parsed())
            return run_converge(converge_args, ctx);
        if (plot_cmd->parsed())
            return run_plot_data(plot_args, ctx);
        if (pair_cmd->parsed())
            return run_pair(pair_args, ctx);
        if (local_cmd->parsed())
            return run_local(local_args, ctx);
        if (moments_cmd->parsed())
            return run_moments(moments_args, ctx);
        if (cf_cmd->parsed())
            return run_cf(cf_args, ctx);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2; // no subcommand
}

} // namespace demoivre::cli
