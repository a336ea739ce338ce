#pragma once

#include <string>
#include <vector>

namespace kolan::csv {

// RFC-4180 style fields: quotes optional, "" escapes a quote inside quotes.
std::vector<std::string> split_line(const std::string& line);

std::string escape(const std::string& field);
std::string join(const std::vector<std::string>& fields);

// Shortest round-trip formatting, locale independent ('.'); reparsing
// yields the identical double, which keeps serialize/load lossless.
std::string format_double(double v);
std::string format_int(long long v);

// Strict parsers: the whole token must be consumed. Return false on junk.
bool parse_double(const std::string& s, double& out);
bool parse_int(const std::string& s, long long& out);

}  // namespace kolan::csv
