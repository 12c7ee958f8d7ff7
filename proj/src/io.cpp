#include "varextropy/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "varextropy/errors.hpp"

namespace varextropy {

namespace {

bool parse_double(const std::string& token, double& value) {
    const auto* first = token.data();
    const auto* last = first + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last && std::isfinite(value);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a positive integer, got '" + token + "'");
    }
    return value;
}

}  // namespace

std::vector<double> read_values(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            double value = 0.0;
            if (!parse_double(token, value)) {
                throw ParseError(line_no, "'" + token + "' is not a finite decimal number");
            }
            values.push_back(value);
        }
    }
    if (values.empty()) throw ParseError(line_no, "input contains no observations");
    return values;
}

std::vector<double> read_values_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file '" + path + "'");
    return read_values(in);
}

std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

void write_table_csv(std::ostream& out, const SimulationTable& table) {
    out << "m\\n";
    for (const auto n : table.n_list) out << ',' << n;
    out << '\n';
    for (const auto m : table.m_list) {
        out << m;
        for (const auto n : table.n_list) {
            out << ',';
            if (const auto v = table.at(n, m)) out << format_fixed(*v, 4);
        }
        out << '\n';
    }
}

SimulationTable read_table_csv(std::istream& in, TableKind kind) {
    SimulationTable table;
    table.kind = kind;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_csv(line);
        if (!have_header) {
            if (fields.front() != "m\\n") throw ParseError(line_no, "expected header starting with 'm\\n'");
            for (std::size_t i = 1; i < fields.size(); ++i) {
                table.n_list.push_back(parse_count(fields[i], line_no));
            }
            have_header = true;
            continue;
        }
        if (fields.size() != table.n_list.size() + 1) {
            throw ParseError(line_no, "row has " + std::to_string(fields.size()) + " fields, expected " +
                                          std::to_string(table.n_list.size() + 1));
        }
        const auto m = parse_count(fields.front(), line_no);
        table.m_list.push_back(m);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i].empty()) continue;
            double value = 0.0;
            if (!parse_double(fields[i], value)) {
                throw ParseError(line_no, "bad cell '" + fields[i] + "'");
            }
            table.cells[{table.n_list[i - 1], m}] = value;
        }
    }
    if (!have_header) throw ParseError(line_no, "empty table");
    return table;
}

}  // namespace varextropy
