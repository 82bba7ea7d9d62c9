#include "stardisc/point_set.hpp"

#include <fstream>
#include <sstream>

#include "stardisc/errors.hpp"
#include "stardisc/util.hpp"

namespace stardisc {

PointSet::PointSet(int dim, std::vector<double> coords)
    : dim_(dim), n_(0), coords_(std::move(coords)) {
  if (dim_ < 1) throw UsageError("point set dimension must be >= 1");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
    throw UsageError("coordinate count is not a positive multiple of the dimension");
  n_ = static_cast<long long>(coords_.size()) / dim_;
  for (double c : coords_) {
    if (!(c >= 0.0 && c < 1.0))
      throw UsageError("coordinate " + format_g17(c) + " outside [0,1)");
  }
}

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

PointSet read_pointset(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw FormatError("missing point-set header");
  auto head = tokens(line);
  if (head.size() != 2) throw FormatError("header must be 'N s'");
  long long n = parse_ll(head[0]);
  long long s = parse_ll(head[1]);
  if (n < 1 || s < 1) throw FormatError("header requires N >= 1 and s >= 1");

  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n * s));
  for (long long row = 0; row < n; ++row) {
    if (!next_content_line(in, line))
      throw FormatError("expected " + std::to_string(n) + " rows, found " +
                        std::to_string(row));
    auto toks = tokens(line);
    if (static_cast<long long>(toks.size()) != s)
      throw FormatError("row " + std::to_string(row + 1) + " has " +
                        std::to_string(toks.size()) + " columns, header says " +
                        std::to_string(s));
    for (const auto& tok : toks) {
      double c = parse_double(tok);
      if (!(c >= 0.0 && c < 1.0))
        throw FormatError("coordinate " + tok + " outside [0,1)");
      coords.push_back(c);
    }
  }
  if (next_content_line(in, line))
    throw FormatError("trailing content after " + std::to_string(n) + " rows");
  return PointSet(static_cast<int>(s), std::move(coords));
}

PointSet read_pointset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_pointset(in);
}

void write_pointset(std::ostream& out, const PointSet& ps,
                    const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << ps.size() << " " << ps.dim() << "\n";
  for (long long n = 0; n < ps.size(); ++n) {
    for (int j = 0; j < ps.dim(); ++j) {
      if (j) out << " ";
      out << format_g17(ps.coord(n, j));
    }
    out << "\n";
  }
}

void write_pointset_file(const std::string& path, const PointSet& ps,
                         const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_pointset(out, ps, comment);
  out.flush();
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace stardisc
