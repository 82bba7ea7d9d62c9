#pragma once

#include <cstdint>
#include <vector>

#include "stardisc/generators.hpp"

namespace stardisc {

struct ExpSumReport {
  PsetFamily family = PsetFamily::P;
  long long p = 0;
  std::vector<long long> h;
  double magnitude = 0.0;
  double bound = 0.0;        // (s-1)*sqrt(p) for P, (s-1)*p for Q and R
  bool bound_applies = true; // false when every h_j is divisible by p
  bool tight = false;        // |magnitude - bound| < 1e-6
};

// |sum_n e((h1*n + ... + hs*n^s)/p)| for family P (n = 0..p-1), the same sum
// with denominator p^2 and n = 0..p^2-1 for family Q, and the double sum
// sum_{a,k} e(k*(h1 + h2*a + ... + hs*a^(s-1))/p) for family R. Polynomial
// arguments are reduced mod p (or p^2) in integer arithmetic before the
// complex exponential, so no precision is lost to large h*n^s products.
ExpSumReport exp_sum(PsetFamily family, long long p,
                     const std::vector<long long>& h);

struct WeilReport {
  long long p = 0;
  int s = 0;
  double tol = 1e-6;
  // Per family: number of admissible h vectors checked and the largest
  // magnitude/bound ratio seen (bound-zero cases count as ratio 0 when the
  // magnitude is within tol). checked_q is 0 when s > 2 (skipped for cost).
  std::uint64_t checked_p = 0, checked_q = 0, checked_r = 0;
  double max_ratio_p = 0.0, max_ratio_q = 0.0, max_ratio_r = 0.0;
  std::uint64_t violations = 0;
  bool pass = true;
};

// Exhaustively checks the exponential-sum bounds for every admissible h:
// families P and R over h in {0..p-1}^s, family Q over h in {0..p^2-1}^s
// (s <= 2 only), in each case excluding vectors whose entries are all
// divisible by p — the bound's hypothesis requires at least one h_j coprime
// to p. Requires 3 <= p <= 13 and s <= 4: the bound is simply false at
// p = 2 (s = 2, h = (1,1) gives |S| = 2 > sqrt(2)), and larger grids blow
// the enumeration budget.
WeilReport verify_weil(long long p, int s, double tol = 1e-6);

}  // namespace stardisc
