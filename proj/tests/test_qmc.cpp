#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stardisc/errors.hpp"
#include "stardisc/generators.hpp"
#include "stardisc/qmc.hpp"

using namespace stardisc;

TEST_CASE("test function names") {
  for (const char* name : {"prod", "sum-sq", "linear-1d"})
    CHECK(test_function_name(parse_test_function(name)) == std::string(name));
  CHECK_THROWS_AS((void)parse_test_function("product"), UsageError);
}

TEST_CASE("integrals and variations are the advertised constants") {
  const TestFunction prod = test_function(TestFunctionId::Prod);
  CHECK(prod.exact_integral(3) == 0.125);
  CHECK(prod.variation(3) == 7.0);
  const TestFunction sumsq = test_function(TestFunctionId::SumSq);
  CHECK(sumsq.exact_integral(5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(sumsq.variation(5) == 1.0);
  const TestFunction lin = test_function(TestFunctionId::Linear1d);
  CHECK(lin.exact_integral(1) == 0.5);
  CHECK(lin.variation(1) == 1.0);
  CHECK(lin.accepts_dim(1));
  CHECK_FALSE(lin.accepts_dim(2));
}

TEST_CASE("variation constants match the finite-difference computation") {
  // mixed alternating differences summed over every coordinate face; the
  // integrands are polynomial with one-signed mixed derivatives, so the grid
  // sums telescope to the exact variation
  const TestFunction prod = test_function(TestFunctionId::Prod);
  for (int s = 1; s <= 3; ++s)
    CHECK(std::abs(oracles::finite_difference_variation(prod, s, 64) -
                   prod.variation(s)) <= 1e-10);
  const TestFunction sumsq = test_function(TestFunctionId::SumSq);
  for (int s = 1; s <= 3; ++s)
    CHECK(std::abs(oracles::finite_difference_variation(sumsq, s, 64) -
                   sumsq.variation(s)) <= 1e-10);
  const TestFunction lin = test_function(TestFunctionId::Linear1d);
  CHECK(std::abs(oracles::finite_difference_variation(lin, 1, 64) - 1.0) <=
        1e-12);
}

TEST_CASE("equal-weight averages") {
  const PointSet ps(2, {0.0, 0.0, 0.5, 0.5});
  CHECK(integrate(ps, test_function(TestFunctionId::Prod)) == 0.125);
  CHECK(integrate(ps, test_function(TestFunctionId::SumSq)) == 0.125);
  const PointSet mid(2, {0.5, 0.5});
  CHECK(integrate(mid, test_function(TestFunctionId::SumSq)) == 0.25);
  const PointSet centered = generate_centered(2);
  CHECK(integrate(centered, test_function(TestFunctionId::Linear1d)) == 0.5);
}

TEST_CASE("integrate rejects dimension mismatches") {
  const PointSet ps(2, {0.25, 0.5});
  CHECK_THROWS_AS((void)integrate(ps, test_function(TestFunctionId::Linear1d)),
                  UsageError);
}

TEST_CASE("integration order does not matter beyond roundoff") {
  const PointSet a = generate_random(64, 3, 21);
  std::vector<double> rev;
  for (long long i = 63; i >= 0; --i)
    for (int j = 0; j < 3; ++j) rev.push_back(a.coord(i, j));
  const PointSet b(3, rev);
  const TestFunction f = test_function(TestFunctionId::Prod);
  CHECK(integrate(a, f) == doctest::Approx(integrate(b, f)).epsilon(1e-12));
}

TEST_CASE("error bound report on exactly solvable cases") {
  const PointSet centered = generate_centered(2);
  const KhReport r = kh_check(centered, test_function(TestFunctionId::Linear1d));
  CHECK(r.estimate == 0.5);
  CHECK(r.abs_error == 0.0);
  CHECK(r.dstar == 0.25);
  CHECK(r.bound == 0.25);
  CHECK(r.holds);

  const PointSet origin(1, {0.0});
  const KhReport worst = kh_check(origin, test_function(TestFunctionId::Linear1d));
  CHECK(worst.abs_error == 0.5);
  CHECK(worst.dstar == doctest::Approx(1.0));
  CHECK(worst.holds);
}

TEST_CASE("error inequality holds across families and integrands") {
  const TestFunction prod = test_function(TestFunctionId::Prod);
  const TestFunction sumsq = test_function(TestFunctionId::SumSq);
  for (int s : {1, 2, 3}) {
    for (long long n : {1LL, 5LL, 16LL, 64LL}) {
      const PointSet h = generate_halton(n, s);
      CHECK(kh_check(h, prod).holds);
      CHECK(kh_check(h, sumsq).holds);
      const PointSet r = generate_random(n, s, 1000 + n);
      CHECK(kh_check(r, prod).holds);
      CHECK(kh_check(r, sumsq).holds);
    }
    if (s < 3) {  // s must stay below p
      const PointSet k = generate_pset(PsetFamily::P, 3, s);
      CHECK(kh_check(k, prod).holds);
    }
  }
  const PointSet k13 = generate_pset(PsetFamily::P, 13, 3);
  CHECK(kh_check(k13, prod).holds);
  CHECK(kh_check(k13, sumsq).holds);
  // the five-point Korobov set in two dimensions, where V(x1*x2) = 3
  const KhReport five = kh_check(generate_pset(PsetFamily::P, 5, 2), prod);
  CHECK(five.bound == doctest::Approx(3.0 * 0.44).epsilon(1e-12));
  CHECK(five.holds);
}

TEST_CASE("tighter self-check in one dimension") {
  // for f(x) = x the integration error never exceeds D* itself
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet ps = generate_random(32, 1, seed);
    const KhReport r = kh_check(ps, test_function(TestFunctionId::Linear1d));
    CHECK(r.abs_error <= r.dstar + 1e-12);
  }
}
