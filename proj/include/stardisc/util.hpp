#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stardisc {

// Formats a double with 17 significant digits ("%.17g"), enough for exact
// round-trips through text.
std::string format_g17(double x);

std::vector<std::string> split(const std::string& s, char sep);

// Strict numeric parsers; throw FormatError when the whole token does not
// parse.
long long parse_ll(const std::string& tok);
std::uint64_t parse_u64(const std::string& tok);
double parse_double(const std::string& tok);

std::vector<long long> parse_ll_list(const std::string& csv);
std::vector<int> parse_int_list(const std::string& csv);
std::vector<double> parse_double_list(const std::string& csv);

}  // namespace stardisc
