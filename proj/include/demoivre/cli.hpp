#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "demoivre/probes.hpp"

namespace demoivre::cli {

// Malformed flags or probe specs; mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Colon-delimited probe mini-grammar:
//   hermite:<m> | indicator:<a>:<b> | monomial:<r> | expi:<t> | gwp:<c0>,<c1>,...
probes::Probe parse_probe_spec(const std::string& spec);

// Column-oriented table rendered either as aligned text (6 significant
// digits) or RFC-4180-style CSV (15 significant digits, LF endings).
struct OutputTable {
    enum class Format { aligned_text, csv };
    using Cell = std::variant<std::monostate, double, std::string>;

    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    std::string render(Format format) const;
};

// Entry point behind the binary: 0 success, 1 computational error, 2 usage.
int run(int argc, const char* const* argv);

} // namespace demoivre::cli
