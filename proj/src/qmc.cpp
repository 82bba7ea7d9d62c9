#include "stardisc/qmc.hpp"

#include <cmath>

#include "stardisc/errors.hpp"

namespace stardisc {

TestFunctionId parse_test_function(const std::string& name) {
  if (name == "prod") return TestFunctionId::Prod;
  if (name == "sum-sq") return TestFunctionId::SumSq;
  if (name == "linear-1d") return TestFunctionId::Linear1d;
  throw UsageError("unknown test function '" + name + "'");
}

const char* test_function_name(TestFunctionId id) {
  switch (id) {
    case TestFunctionId::Prod: return "prod";
    case TestFunctionId::SumSq: return "sum-sq";
    case TestFunctionId::Linear1d: return "linear-1d";
  }
  return "?";
}

TestFunction test_function(TestFunctionId id) { return TestFunction{id}; }

double TestFunction::eval(std::span<const double> x) const {
  switch (id) {
    case TestFunctionId::Prod: {
      double p = 1.0;
      for (double v : x) p *= v;
      return p;
    }
    case TestFunctionId::SumSq: {
      double acc = 0.0;
      for (double v : x) acc += v * v;
      return acc / static_cast<double>(x.size());
    }
    case TestFunctionId::Linear1d:
      return x[0];
  }
  return 0.0;
}

double TestFunction::exact_integral(int s) const {
  switch (id) {
    case TestFunctionId::Prod: return std::ldexp(1.0, -s);  // 2^-s
    case TestFunctionId::SumSq: return 1.0 / 3.0;
    case TestFunctionId::Linear1d: return 0.5;
  }
  return 0.0;
}

double TestFunction::variation(int s) const {
  switch (id) {
    // prod: every one of the 2^s - 1 mixed differences contributes 1
    case TestFunctionId::Prod: return std::ldexp(1.0, s) - 1.0;
    // sum-sq: each term is monotone in one variable with range 1, no cross
    // terms, scaled by 1/s
    case TestFunctionId::SumSq: return 1.0;
    case TestFunctionId::Linear1d: return 1.0;
  }
  return 0.0;
}

bool TestFunction::accepts_dim(int s) const {
  if (s < 1) return false;
  return id == TestFunctionId::Linear1d ? s == 1 : true;
}

double integrate(const PointSet& ps, const TestFunction& f) {
  if (!f.accepts_dim(ps.dim()))
    throw UsageError(std::string(test_function_name(f.id)) +
                     " is not defined in dimension " + std::to_string(ps.dim()));
  double acc = 0.0;
  for (long long n = 0; n < ps.size(); ++n) acc += f.eval(ps.row(n));
  return acc / static_cast<double>(ps.size());
}

KhReport kh_check(const PointSet& ps, const TestFunction& f,
                  std::uint64_t budget) {
  KhReport rep;
  rep.estimate = integrate(ps, f);
  rep.exact_integral = f.exact_integral(ps.dim());
  rep.abs_error = std::abs(rep.exact_integral - rep.estimate);
  rep.dstar = star_discrepancy_exact(ps, budget).value;
  rep.variation = f.variation(ps.dim());
  rep.bound = rep.variation * rep.dstar;
  rep.holds = rep.abs_error <= rep.bound + 1e-12;
  return rep;
}

}  // namespace stardisc
