#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stardisc/discrepancy.hpp"
#include "stardisc/point_set.hpp"

namespace stardisc {

// Infinite sequence u_1, u_2, ... in [0,1). Single-owner: next() advances
// the 1-based position. Profiles create one fresh stream per cell.
class Stream {
 public:
  virtual ~Stream() = default;
  double next() {
    ++pos_;
    return emit();
  }
  // 1-based index of the next element to be emitted.
  long long position() const { return pos_ + 1; }

 private:
  virtual double emit() = 0;
  long long pos_ = 0;
};

// Parsed form of the stream mini-syntax:
//   lcg:a,c,m,x0   states x_{i+1} = (a*x_i + c) mod m, emits x_i/m
//   vdc:base       radical inverse of n = 1, 2, ...
//   random:seed    named 64-bit generator (see rng.hpp)
struct StreamSpec {
  enum class Kind { Lcg, Vdc, Random };
  Kind kind = Kind::Vdc;
  long long a = 0, c = 0, m = 0, x0 = 0;  // lcg
  long long base = 2;                     // vdc
  std::uint64_t seed = 0;                 // random

  static StreamSpec parse(const std::string& text);  // FormatError on bad syntax
  std::string describe() const;
  std::unique_ptr<Stream> make() const;
};

// Consecutive non-overlapping blocks: point n is (u_{(n-1)s+1}, ..., u_{ns}).
// Consumes exactly N*s values; calling again continues where the stream
// stopped, so back-to-back calls yield disjoint stretches of the sequence.
PointSet blocks(Stream& stream, int s, long long n);

struct ProfileOptions {
  Method method = Method::Exact;
  std::uint64_t budget = kDefaultBudget;
  int restarts = 64;        // lower-bound search only
  std::uint64_t seed = 1;   // lower-bound search only
  int workers = 0;
};

struct ProfileRow {
  int s = 0;
  long long n = 0;
  double dstar = 0.0;
  Method method = Method::Exact;
  bool ok = true;  // false when the cell's budget was exceeded; dstar unset
};

// Block discrepancy over the grid dims x Ns, one fresh stream per cell so
// cells are independent. A budget breach marks the cell and the run
// continues. Rows are sorted by (s, N).
std::vector<ProfileRow> cud_profile(const StreamSpec& spec,
                                    const std::vector<int>& dims,
                                    const std::vector<long long>& ns,
                                    const ProfileOptions& opts = {});

struct GrowingDimRow {
  long long n = 0;
  int s = 0;  // max(1, ceil(c * ln N))
  double dstar = 0.0;
  double envelope = 0.0;  // sqrt(s * ln N / N)
  Method method = Method::Exact;
  bool ok = true;
};

// Discrepancy of blocks whose dimension grows like c*ln N, reported against
// the sqrt(s_N ln N / N) envelope. No pass/fail: the envelope's constant is
// unknown, ratios are for inspection.
std::vector<GrowingDimRow> growing_dim_profile(const StreamSpec& spec, double c,
                                               const std::vector<long long>& ns,
                                               const ProfileOptions& opts = {});

}  // namespace stardisc
