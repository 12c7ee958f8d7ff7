#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "varextropy/simulation.hpp"

namespace varextropy {

/// Whitespace/newline separated decimals; '#' starts a comment line.
/// Throws ParseError naming the line on bad tokens or an empty input.
std::vector<double> read_values(std::istream& in);
std::vector<double> read_values_file(const std::string& path);

/// Grid CSV: header "m\n,<n...>", one row per m, 4-decimal cells, blank where
/// the (n, m) pair is invalid.
void write_table_csv(std::ostream& out, const SimulationTable& table);

/// Reads back a grid written by write_table_csv into `kind`'s table. Metadata
/// not carried by the CSV (alpha, reps, seed) is left at its defaults.
SimulationTable read_table_csv(std::istream& in, TableKind kind);

/// printf-style "%.*g" / "%.*f" helpers.
std::string format_significant(double value, int digits = 6);
std::string format_fixed(double value, int decimals = 4);

}  // namespace varextropy
