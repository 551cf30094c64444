#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrad {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scientific notation with 12 significant digits. Negative zero prints as
// positive zero so equal values always serialize identically.
std::string format_sci(double v);

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);  // throws std::invalid_argument

// Rectangular table of preformatted cells. Serializers never reformat;
// numeric cells are expected to come from format_sci.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// CSV: header line, comma separated, LF line ends, no quoting (cells are
// numbers or plain tokens). JSON: array of one object per row; cells that
// parse fully as numbers are written unquoted.
void write_table(std::ostream& os, const Table& table, OutputFormat format);

// Empty path or "-" writes to stdout. Throws IoError when the file cannot
// be opened.
void write_table_file(const std::string& path, const Table& table, OutputFormat format);

}  // namespace mirrad
