#include "stardisc/expsum.hpp"

#include <cmath>
#include <numbers>

#include "stardisc/errors.hpp"
#include "stardisc/primes.hpp"

namespace stardisc {

namespace {

using ll = long long;
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 reduce(ll h, u64 m) {
  ll r = h % static_cast<ll>(m);
  if (r < 0) r += static_cast<ll>(m);
  return static_cast<u64>(r);
}

// e(r/m) for r = 0..m-1, tabulated once per sum.
struct Roots {
  std::vector<double> re, im;
  explicit Roots(u64 m) : re(m), im(m) {
    for (u64 r = 0; r < m; ++r) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(m);
      re[r] = std::cos(ang);
      im[r] = std::sin(ang);
    }
  }
};

// h_1*x + h_2*x^2 + ... + h_s*x^s mod m (Horner, coefficients pre-reduced).
u64 poly_no_const(const std::vector<u64>& h, u64 x, u64 m) {
  u64 acc = 0;
  for (std::size_t j = h.size(); j-- > 0;) acc = (mulmod(acc, x, m) + h[j]) % m;
  return mulmod(acc, x, m);
}

// h_1 + h_2*a + ... + h_s*a^(s-1) mod m.
u64 poly_const(const std::vector<u64>& h, u64 a, u64 m) {
  u64 acc = 0;
  for (std::size_t j = h.size(); j-- > 0;) acc = (mulmod(acc, a, m) + h[j]) % m;
  return acc;
}

}  // namespace

ExpSumReport exp_sum(PsetFamily family, long long p,
                     const std::vector<long long>& h) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (h.empty()) throw UsageError("h must have at least one entry");
  const int s = static_cast<int>(h.size());
  const u64 up = static_cast<u64>(p);

  ExpSumReport rep;
  rep.family = family;
  rep.p = p;
  rep.h = h;
  rep.bound_applies = false;
  for (ll hj : h)
    if (reduce(hj, up) != 0) rep.bound_applies = true;

  double re = 0.0, im = 0.0;
  switch (family) {
    case PsetFamily::P: {
      const u64 m = up;
      std::vector<u64> hr(h.size());
      for (int j = 0; j < s; ++j) hr[j] = reduce(h[j], m);
      const Roots w(m);
      for (u64 x = 0; x < m; ++x) {
        const u64 r = poly_no_const(hr, x, m);
        re += w.re[r];
        im += w.im[r];
      }
      rep.bound = static_cast<double>(s - 1) * std::sqrt(static_cast<double>(p));
      break;
    }
    case PsetFamily::Q: {
      const u64 m = up * up;
      std::vector<u64> hr(h.size());
      for (int j = 0; j < s; ++j) hr[j] = reduce(h[j], m);
      const Roots w(m);
      for (u64 x = 0; x < m; ++x) {
        const u64 r = poly_no_const(hr, x, m);
        re += w.re[r];
        im += w.im[r];
      }
      rep.bound = static_cast<double>(s - 1) * static_cast<double>(p);
      break;
    }
    case PsetFamily::R: {
      const u64 m = up;
      std::vector<u64> hr(h.size());
      for (int j = 0; j < s; ++j) hr[j] = reduce(h[j], m);
      const Roots w(m);
      for (u64 a = 0; a < m; ++a) {
        const u64 base = poly_const(hr, a, m);
        for (u64 k = 0; k < m; ++k) {
          const u64 r = mulmod(base, k, m);
          re += w.re[r];
          im += w.im[r];
        }
      }
      rep.bound = static_cast<double>(s - 1) * static_cast<double>(p);
      break;
    }
  }
  rep.magnitude = std::hypot(re, im);
  rep.tight = std::abs(rep.magnitude - rep.bound) < 1e-6;
  return rep;
}

WeilReport verify_weil(long long p, int s, double tol) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (p == 2)
    throw UsageError(
        "verification requires p >= 3: at p = 2 the inequality itself fails "
        "(s = 2, h = (1,1) gives |S| = 2 > sqrt(2))");
  if (s < 1) throw UsageError("dimension must be >= 1");
  if (p > 13 || s > 4)
    throw BudgetExceeded("exhaustive verification is limited to p <= 13, s <= 4");

  WeilReport rep;
  rep.p = p;
  rep.s = s;
  rep.tol = tol;

  // ratio/violation bookkeeping; a zero bound (s = 1) admits only
  // zero-magnitude sums
  auto record = [&](const ExpSumReport& r, std::uint64_t& checked,
                    double& max_ratio) {
    ++checked;
    if (r.bound > 0.0) {
      max_ratio = std::max(max_ratio, r.magnitude / r.bound);
      if (r.magnitude > r.bound + tol) ++rep.violations;
    } else if (r.magnitude > tol) {
      ++rep.violations;
    }
  };

  // families P and R: h over {0..p-1}^s; the all-zero vector is the only
  // all-divisible one in this range
  {
    std::vector<ll> h(static_cast<std::size_t>(s), 0);
    while (true) {
      bool all_zero = true;
      for (ll hj : h)
        if (hj != 0) all_zero = false;
      if (!all_zero) {
        record(exp_sum(PsetFamily::P, p, h), rep.checked_p, rep.max_ratio_p);
        record(exp_sum(PsetFamily::R, p, h), rep.checked_r, rep.max_ratio_r);
      }
      int j = s - 1;
      while (j >= 0 && ++h[j] == p) h[j--] = 0;
      if (j < 0) break;
    }
  }

  // family Q: h over {0..p^2-1}^s, skipping vectors with every entry
  // divisible by p; enumerated only for s <= 2 to keep the grid small
  if (s <= 2) {
    const ll m = p * p;
    std::vector<ll> h(static_cast<std::size_t>(s), 0);
    while (true) {
      bool all_div = true;
      for (ll hj : h)
        if (hj % p != 0) all_div = false;
      if (!all_div)
        record(exp_sum(PsetFamily::Q, p, h), rep.checked_q, rep.max_ratio_q);
      int j = s - 1;
      while (j >= 0 && ++h[j] == m) h[j--] = 0;
      if (j < 0) break;
    }
  }

  rep.pass = rep.violations == 0;
  return rep;
}

}  // namespace stardisc
