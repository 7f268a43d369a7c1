#pragma once

// Scenario execution: each scenario computes a CSV table and a set of golden
// checks against closed forms and four-decimal reference values.

#include <iosfwd>
#include <string>
#include <vector>

#include "qoptics/cli/config.hpp"

namespace qoptics::cli {

struct GoldenCheck {
    std::string name;
    double deviation;
    double tolerance;

    bool passed() const noexcept { return deviation <= tolerance; }
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// RFC 4180 style, LF line endings.
    std::string render() const;
};

/// Fixed formatting for CSV cells: %.12g in the C locale.
std::string format_number(double x);

struct ScenarioResult {
    CsvTable table;
    std::vector<GoldenCheck> checks;
    std::vector<std::string> notes;  // extra human-readable summary lines

    bool all_passed() const;
};

/// Pure computation; no I/O.
ScenarioResult run_scenario(const ScenarioConfig& config);

/// out_path if set, otherwise "<scenario-name>.csv".
std::string output_path(const ScenarioConfig& config);

/// Writes the CSV (throws Error if the file cannot be written) and prints the
/// notes plus one PASS/FAIL line per check. Returns 0 iff every check passed.
int execute(const ScenarioConfig& config, std::ostream& out);

/// Prints the catalog.
void print_catalog(std::ostream& out);

}  // namespace qoptics::cli
