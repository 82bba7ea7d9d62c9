#include "stardisc/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "stardisc/errors.hpp"
#include "stardisc/primes.hpp"

namespace stardisc {

RateKind parse_rate_kind(const std::string& name) {
  if (name == "hnww") return RateKind::Hnww;
  if (name == "thm2") return RateKind::Thm2;
  if (name == "asymptotic-upper") return RateKind::AsymptoticUpper;
  throw UsageError("unknown rate kind '" + name + "'");
}

const char* rate_kind_name(RateKind kind) {
  switch (kind) {
    case RateKind::Hnww: return "hnww";
    case RateKind::Thm2: return "thm2";
    case RateKind::AsymptoticUpper: return "asymptotic-upper";
  }
  return "?";
}

double rate(RateKind kind, double n, int s) {
  if (s < 1) throw UsageError("dimension must be >= 1");
  switch (kind) {
    case RateKind::Hnww:
      if (!(n >= 1.0)) throw UsageError("N must be >= 1");
      return std::sqrt(static_cast<double>(s) / n);
    case RateKind::Thm2:
      if (!(n >= 1.0)) throw UsageError("N must be >= 1");
      return std::sqrt(static_cast<double>(s) / n) *
             std::sqrt(std::log(static_cast<double>(s)) + std::log(n));
    case RateKind::AsymptoticUpper:
      if (!(n >= 2.0))
        throw UsageError("asymptotic-upper requires N >= 2 (log N > 0)");
      return std::pow(std::log(n), s - 1) / n;
  }
  throw UsageError("unknown rate kind");
}

HoeffdingResult hoeffding_bound(long long n, int s) {
  if (n < 1 || s < 1) throw UsageError("N and s must be >= 1");
  // feasible(eps): 2*(ceil(s/eps)+1)^s * exp(-n*eps^2/2) <= 1, checked in
  // log space; non-increasing in eps, so bisection applies
  auto feasible = [&](double eps) {
    const double m = std::ceil(static_cast<double>(s) / eps);
    return std::log(2.0) + static_cast<double>(s) * std::log(m + 1.0) -
               static_cast<double>(n) * eps * eps / 2.0 <=
           0.0;
  };
  if (!feasible(1.0)) return {1.0, 1.0, false};
  double lo = 1e-15, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return {hi, std::min(1.0, 2.0 * hi), true};
}

double hps_weighted_rate(long long n, int s, const ProductWeights& weights) {
  if (n < 2) throw UsageError("N must be >= 2");
  if (s < 1) throw UsageError("dimension must be >= 1");
  std::vector<double> gam = weights.prefix(s);
  std::sort(gam.begin(), gam.end(), std::greater<>());
  double inner = 0.0, prod = 1.0;
  for (int k = 1; k <= s; ++k) {
    prod *= gam[k - 1];  // product of the k largest weights
    inner = std::max(inner, prod * std::sqrt(static_cast<double>(k)));
  }
  const int sp = std::max(s, 2);  // guards ln at s = 1
  return std::sqrt(std::log(static_cast<double>(sp)) / static_cast<double>(n)) *
         inner;
}

double wang_bound(long long n, int s, long long q, const ProductWeights& weights,
                  double c_const) {
  if (n < 1) throw UsageError("N must be >= 1");
  if (s < 1) throw UsageError("dimension must be >= 1");
  if (!(c_const > 0.0))
    throw UsageError("the constant C must be supplied and positive");
  if (q < 2 || !is_prime_power(static_cast<std::uint64_t>(q)))
    throw UsageError("q must be a prime power >= 2");
  const std::vector<double> gam = weights.prefix(s);
  const double ln_qn = std::log(static_cast<double>(q) * static_cast<double>(n));
  // max over non-empty subsets of prod t_j: multiply the terms above 1 when
  // any exist, otherwise the best singleton
  double prod = 1.0, mx = 0.0;
  bool any_above_one = false;
  for (int j = 1; j <= s; ++j) {
    const double t = gam[j - 1] * c_const * static_cast<double>(j) *
                     std::log(static_cast<double>(j) + static_cast<double>(q)) *
                     ln_qn;
    mx = std::max(mx, t);
    if (t > 1.0) {
      prod *= t;
      any_above_one = true;
    }
  }
  return (any_above_one ? prod : mx) / static_cast<double>(n);
}

}  // namespace stardisc
