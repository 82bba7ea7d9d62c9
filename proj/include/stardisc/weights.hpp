#pragma once

#include <string>
#include <vector>

namespace stardisc {

// Per-coordinate weights gamma_j >= 0 with derived subset weights
// gamma_u = prod_{j in u} gamma_j (empty product = 1).
class ProductWeights {
 public:
  static ProductWeights from_list(std::vector<double> gammas);
  static ProductWeights geometric(double r);    // gamma_j = r^j
  static ProductWeights polynomial(double a);   // gamma_j = j^-a
  static ProductWeights ones();

  // gamma_j for 1-based j. Throws UsageError past the end of an explicit
  // list.
  double gamma(int j) const;
  std::vector<double> prefix(int s) const;

  // Round-trips through parse_weights.
  std::string describe() const;

 private:
  enum class Kind { List, Geometric, Polynomial, Ones };
  ProductWeights(Kind kind, double param, std::vector<double> list)
      : kind_(kind), param_(param), list_(std::move(list)) {}

  Kind kind_;
  double param_ = 0.0;
  std::vector<double> list_;
};

// "ones", "1,0.5,0.25" (explicit list), "geo:r" (gamma_j = r^j), or "poly:a"
// (gamma_j = j^-a).
ProductWeights parse_weights(const std::string& spec);

}  // namespace stardisc
