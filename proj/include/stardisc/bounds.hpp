#pragma once

#include <string>

#include "stardisc/weights.hpp"

namespace stardisc {

// Rate shapes without their unspecified leading constants. All logs natural.
enum class RateKind {
  Hnww,             // sqrt(s/N)
  Thm2,             // sqrt(s/N) * sqrt(ln s + ln N)
  AsymptoticUpper,  // (ln N)^(s-1) / N, needs N >= 2
};

RateKind parse_rate_kind(const std::string& name);  // UsageError on bad kind
const char* rate_kind_name(RateKind kind);

double rate(RateKind kind, double n, int s);

struct HoeffdingResult {
  double epsilon = 1.0;  // smallest eps in (0,1] satisfying the inequality
  double value = 1.0;    // min(1, 2*epsilon)
  bool attained = true;  // false when even eps = 1 fails the inequality
};

// Smallest eps in (0,1] with 2*(ceil(s/eps)+1)^s * exp(-N*eps^2/2) <= 1,
// located by bisection to 1e-12 (the left side is non-increasing in eps).
// The probabilistic argument gives D* <= 2*eps with positive probability,
// so the bound on the best achievable discrepancy is min(1, 2*eps).
HoeffdingResult hoeffding_bound(long long n, int s);

// sqrt(ln(max(s,2))/N) * max_k (Gamma_k * sqrt(k)) where Gamma_k is the
// product of the k largest weights. Equals the max over non-empty
// coordinate subsets u of gamma_u * sqrt(|u|), scaled: for fixed |u| = k the
// best gamma_u takes the k largest factors.
double hps_weighted_rate(long long n, int s, const ProductWeights& weights);

// (1/N) * prod over {j : t_j > 1} of t_j with t_j = gamma_j*C*j*ln(j+q)*ln(qN),
// or (1/N) * max_j t_j when no t_j exceeds 1. Either case equals
// (1/N) * max over non-empty subsets u of prod_{j in u} t_j. q must be a
// prime power; C > 0 is caller-supplied (no canonical default exists).
double wang_bound(long long n, int s, long long q, const ProductWeights& weights,
                  double c_const);

}  // namespace stardisc
