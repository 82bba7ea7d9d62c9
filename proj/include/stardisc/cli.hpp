#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stardisc/discrepancy.hpp"

namespace stardisc::cli {

// Entry point behind the binary. args excludes the program name. Results on
// out, diagnostics on err. Exit codes: 0 success, 2 usage error, 3 input
// format error, 4 budget exceeded, 5 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

enum class StudyKind { RandomScaling, PsetDecay, CudVdc };
StudyKind parse_study_kind(const std::string& name);  // UsageError
const char* study_kind_name(StudyKind kind);

struct StudyParams {
  std::vector<int> dims = {2, 3};                  // random-scaling
  std::vector<long long> ns = {50, 100, 200, 400}; // random-scaling, cud-vdc
  std::vector<long long> ps = {11, 23, 47, 97};    // pset-decay
  int s = 2;                                       // pset-decay, cud-vdc
  int seeds = 20;                                  // random-scaling
  std::uint64_t seed0 = 1;                         // first seed
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;
};

// Writes one CSV row per cell (inputs, measured exact D*, reference rate,
// ratio). Deterministic: identical flags produce byte-identical files.
//   random-scaling  header s,N,seed,dstar,ref,ratio      ref = sqrt(s/N)
//   pset-decay      header family,p,s,dstar,ref,ratio    ref = s/sqrt(p)
//   cud-vdc         header s,N,dstar,ref,ratio           ref = 0.25
int study(StudyKind kind, const StudyParams& params, const std::string& out_path,
          std::ostream& err);

}  // namespace stardisc::cli
