#include <cmath>
#include <vector>

#include "doctest.h"
#include "stardisc/errors.hpp"
#include "stardisc/expsum.hpp"

using namespace stardisc;

TEST_CASE("complete sums vanish for a single linear term") {
  // sum over a full period of e(h*n/p) with p coprime to h is 0
  const ExpSumReport r = exp_sum(PsetFamily::P, 7, {1});
  CHECK(r.magnitude == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.bound == 0.0);  // (s-1)*sqrt(p) with s = 1
  CHECK(r.bound_applies);
}

TEST_CASE("Gauss sum has magnitude sqrt(p)") {
  const ExpSumReport r = exp_sum(PsetFamily::P, 5, {0, 1});
  CHECK(std::abs(r.magnitude - std::sqrt(5.0)) <= 1e-9);
  CHECK(r.bound == doctest::Approx(std::sqrt(5.0)));
  CHECK(r.tight);
}

TEST_CASE("zero vector gives the full point count and no bound") {
  const ExpSumReport p = exp_sum(PsetFamily::P, 7, {0, 0});
  CHECK(p.magnitude == doctest::Approx(7.0));
  CHECK_FALSE(p.bound_applies);
  const ExpSumReport q = exp_sum(PsetFamily::Q, 5, {0, 0});
  CHECK(q.magnitude == doctest::Approx(25.0));
  CHECK_FALSE(q.bound_applies);
  const ExpSumReport r = exp_sum(PsetFamily::R, 3, {0, 0});
  CHECK(r.magnitude == doctest::Approx(9.0));
  CHECK_FALSE(r.bound_applies);
}

TEST_CASE("R-family sum collapses when the inner angle is zero") {
  // h = (1, 0): inner sum over k of e(k*1*a^0... ) — for each a the angle is
  // k/3, summing to 0 unless the residue vanishes
  const ExpSumReport r = exp_sum(PsetFamily::R, 3, {1, 0});
  CHECK(r.magnitude == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("negative h entries are reduced into range") {
  const ExpSumReport a = exp_sum(PsetFamily::P, 7, {-1, 2});
  const ExpSumReport b = exp_sum(PsetFamily::P, 7, {6, 2});
  CHECK(a.magnitude == doctest::Approx(b.magnitude).epsilon(1e-12));
}

TEST_CASE("conjugation symmetry: h and -h have equal magnitude") {
  for (long long p : {3LL, 5LL, 7LL})
    for (long long h1 = 0; h1 < p; ++h1)
      for (long long h2 = 0; h2 < p; ++h2) {
        const double m1 = exp_sum(PsetFamily::P, p, {h1, h2}).magnitude;
        const double m2 =
            exp_sum(PsetFamily::P, p, {(p - h1) % p, (p - h2) % p}).magnitude;
        CHECK(std::abs(m1 - m2) <= 1e-9);
      }
}

TEST_CASE("h validation") {
  CHECK_THROWS_AS((void)exp_sum(PsetFamily::P, 5, {}), UsageError);
  CHECK_THROWS_AS((void)exp_sum(PsetFamily::P, 4, {1}), UsageError);
  // degree may reach or exceed p; the sum is still well-defined
  const ExpSumReport r = exp_sum(PsetFamily::P, 3, {1, 1, 1});
  CHECK(r.magnitude <= r.bound + 1e-9);
}

TEST_CASE("exhaustive verification passes for small primes") {
  const WeilReport r5 = verify_weil(5, 2);
  CHECK(r5.pass);
  CHECK(r5.violations == 0);
  CHECK(r5.checked_p == 24);    // 5^2 - 1 vectors, none excluded beyond h=0
  CHECK(r5.checked_q == 600);   // 25^2 - 25 all-divisible vectors
  CHECK(r5.checked_r == 24);
  // the Gauss sum makes the P-family ratio exactly 1
  CHECK(std::abs(r5.max_ratio_p - 1.0) <= 1e-9);
  CHECK(r5.max_ratio_q <= 1.0 + 1e-9);
  CHECK(r5.max_ratio_r <= 1.0 + 1e-9);

  const WeilReport r13 = verify_weil(13, 3);
  CHECK(r13.pass);
  CHECK(r13.checked_p == 13 * 13 * 13 - 1);
  CHECK(r13.checked_q == 0);  // skipped above s = 2
}

TEST_CASE("verification rejects p = 2 where the inequality is false") {
  CHECK_THROWS_AS((void)verify_weil(2, 2), UsageError);
}

TEST_CASE("verification rejects oversized grids and non-primes") {
  CHECK_THROWS_AS((void)verify_weil(17, 2), BudgetExceeded);
  CHECK_THROWS_AS((void)verify_weil(13, 5), BudgetExceeded);
  CHECK_THROWS_AS((void)verify_weil(9, 2), UsageError);
}
