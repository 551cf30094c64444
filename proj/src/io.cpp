#include "mirrad/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace mirrad {
namespace {

bool is_number_cell(const std::string& cell) {
    if (cell.empty()) return false;
    const char* begin = cell.c_str();
    char* end = nullptr;
    std::strtod(begin, &end);
    return end == begin + cell.size();
}

void write_json_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default: os << ch;
        }
    }
    os << '"';
}

}  // namespace

std::string format_sci(double v) {
    if (v == 0.0) v = 0.0;  // collapse -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + name);
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) os << ',';
            os << table.columns[i];
        }
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                os << row[i];
            }
            os << '\n';
        }
        return;
    }

    os << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << "  {";
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ", ";
            write_json_string(os, table.columns[i]);
            os << ": ";
            if (is_number_cell(row[i]))
                os << row[i];
            else
                write_json_string(os, row[i]);
        }
        os << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    os << "]\n";
}

void write_table_file(const std::string& path, const Table& table, OutputFormat format) {
    if (path.empty() || path == "-") {
        write_table(std::cout, table, format);
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    write_table(out, table, format);
    if (!out.flush()) throw IoError("write failed: " + path);
}

}  // namespace mirrad
