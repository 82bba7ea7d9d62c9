#include "stardisc/util.hpp"

#include <cerrno>
#include <climits>
#include <cstdio>
#include <cstdlib>

#include "stardisc/errors.hpp"

namespace stardisc {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

namespace {

// Wraps strtoll/strtoull/strtod with whole-token and range checking.
template <typename T, typename F>
T parse_with(const std::string& tok, F conv, const char* what) {
  if (tok.empty()) throw FormatError(std::string("empty ") + what + " token");
  errno = 0;
  char* end = nullptr;
  T value = conv(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || errno == ERANGE)
    throw FormatError("bad " + std::string(what) + " '" + tok + "'");
  return value;
}

}  // namespace

long long parse_ll(const std::string& tok) {
  return parse_with<long long>(
      tok, [](const char* s, char** e) { return std::strtoll(s, e, 10); },
      "integer");
}

std::uint64_t parse_u64(const std::string& tok) {
  if (!tok.empty() && tok[0] == '-')
    throw FormatError("bad unsigned integer '" + tok + "'");
  return parse_with<std::uint64_t>(
      tok, [](const char* s, char** e) { return std::strtoull(s, e, 10); },
      "unsigned integer");
}

double parse_double(const std::string& tok) {
  return parse_with<double>(
      tok, [](const char* s, char** e) { return std::strtod(s, e); }, "number");
}

std::vector<long long> parse_ll_list(const std::string& csv) {
  std::vector<long long> out;
  for (const auto& tok : split(csv, ',')) out.push_back(parse_ll(tok));
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (long long v : parse_ll_list(csv)) {
    if (v < INT_MIN || v > INT_MAX) throw FormatError("integer out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  for (const auto& tok : split(csv, ',')) out.push_back(parse_double(tok));
  return out;
}

}  // namespace stardisc
