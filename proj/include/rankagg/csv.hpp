#pragma once

// Minimal RFC-4180 reader/writer: comma separated, double-quoted fields with
// "" escapes, LF or CRLF line ends, optional UTF-8 byte order mark.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rankagg::csv {

using Row = std::vector<std::string>;

/// Parses the whole document. Blank lines are skipped. Throws InputError on
/// an unterminated quote, naming `source` and the line.
std::vector<Row> parse(std::string_view text, std::string_view source = "<csv>");

std::string quote(std::string_view field);

void write_row(std::ostream& out, const Row& row);

}  // namespace rankagg::csv
