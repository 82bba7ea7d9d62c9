#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace stardisc {

// A finite multi-set of N points in [0,1)^s. Immutable after construction,
// so instances can be shared read-only across threads. Duplicate points are
// preserved.
class PointSet {
 public:
  // coords is row-major, N*s entries, every entry in [0,1).
  PointSet(int dim, std::vector<double> coords);

  int dim() const { return dim_; }
  long long size() const { return n_; }

  double coord(long long n, int j) const { return coords_[n * dim_ + j]; }
  std::span<const double> row(long long n) const {
    return {coords_.data() + n * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> raw() const { return coords_; }

 private:
  int dim_;
  long long n_;
  std::vector<double> coords_;
};

// Text format shared across the tool chain: lines starting with '#' are
// comments, the first content line is the header "N s", then N rows of s
// space-separated coordinates printed with 17 significant digits. Readers
// reject row/column counts that disagree with the header.
PointSet read_pointset(std::istream& in);
PointSet read_pointset_file(const std::string& path);
void write_pointset(std::ostream& out, const PointSet& ps,
                    const std::string& comment = "");
void write_pointset_file(const std::string& path, const PointSet& ps,
                         const std::string& comment = "");

}  // namespace stardisc
