#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "stardisc/discrepancy.hpp"
#include "stardisc/point_set.hpp"

namespace stardisc {

// Closed-form test integrands with known Hardy-Krause variation (anchored
// at 1). The variation values are fixed constants confirmed against a
// finite-difference mixed-variation computation (see tests/oracles.hpp).
enum class TestFunctionId {
  Prod,     // prod_j x_j          integral 2^-s   variation 2^s - 1
  SumSq,    // (1/s) sum_j x_j^2   integral 1/3    variation 1
  Linear1d, // x                   integral 1/2    variation 1 (s = 1 only)
};

TestFunctionId parse_test_function(const std::string& name);  // UsageError
const char* test_function_name(TestFunctionId id);

struct TestFunction {
  TestFunctionId id = TestFunctionId::Prod;
  double eval(std::span<const double> x) const;
  double exact_integral(int s) const;
  double variation(int s) const;
  bool accepts_dim(int s) const;  // Linear1d requires s == 1
};

TestFunction test_function(TestFunctionId id);

// Equal-weight quasi-Monte Carlo average (1/N) * sum_n f(x_n).
double integrate(const PointSet& ps, const TestFunction& f);

struct KhReport {
  double estimate = 0.0;
  double exact_integral = 0.0;
  double abs_error = 0.0;
  double dstar = 0.0;
  double variation = 0.0;
  double bound = 0.0;  // variation * dstar
  bool holds = false;  // abs_error <= bound + 1e-12
};

// Checks the integration-error inequality |I(f) - Q(f)| <= V(f) * D*(P)
// with the exact discrepancy engine. A 'holds = false' outcome indicates an
// implementation bug somewhere, never a property of the inputs.
KhReport kh_check(const PointSet& ps, const TestFunction& f,
                  std::uint64_t budget = kDefaultBudget);

}  // namespace stardisc
