#include "stardisc/weights.hpp"

#include <cmath>

#include "stardisc/errors.hpp"
#include "stardisc/util.hpp"

namespace stardisc {

ProductWeights ProductWeights::from_list(std::vector<double> gammas) {
  if (gammas.empty()) throw UsageError("weight list must not be empty");
  for (double g : gammas)
    if (!(g >= 0.0)) throw UsageError("weights must be non-negative");
  return ProductWeights(Kind::List, 0.0, std::move(gammas));
}

ProductWeights ProductWeights::geometric(double r) {
  if (!(r >= 0.0)) throw UsageError("geometric ratio must be non-negative");
  return ProductWeights(Kind::Geometric, r, {});
}

ProductWeights ProductWeights::polynomial(double a) {
  return ProductWeights(Kind::Polynomial, a, {});
}

ProductWeights ProductWeights::ones() {
  return ProductWeights(Kind::Ones, 0.0, {});
}

double ProductWeights::gamma(int j) const {
  if (j < 1) throw UsageError("weight index is 1-based");
  switch (kind_) {
    case Kind::List:
      if (j > static_cast<int>(list_.size()))
        throw UsageError("only " + std::to_string(list_.size()) +
                         " weights supplied, gamma_" + std::to_string(j) +
                         " requested");
      return list_[j - 1];
    case Kind::Geometric:
      return std::pow(param_, j);
    case Kind::Polynomial:
      return std::pow(static_cast<double>(j), -param_);
    case Kind::Ones:
      return 1.0;
  }
  return 0.0;
}

std::vector<double> ProductWeights::prefix(int s) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) out.push_back(gamma(j));
  return out;
}

std::string ProductWeights::describe() const {
  switch (kind_) {
    case Kind::List: {
      std::string out;
      for (std::size_t i = 0; i < list_.size(); ++i) {
        if (i) out += ",";
        out += format_g17(list_[i]);
      }
      return out;
    }
    case Kind::Geometric:
      return "geo:" + format_g17(param_);
    case Kind::Polynomial:
      return "poly:" + format_g17(param_);
    case Kind::Ones:
      return "ones";
  }
  return "?";
}

ProductWeights parse_weights(const std::string& spec) {
  if (spec == "ones") return ProductWeights::ones();
  if (spec.rfind("geo:", 0) == 0)
    return ProductWeights::geometric(parse_double(spec.substr(4)));
  if (spec.rfind("poly:", 0) == 0)
    return ProductWeights::polynomial(parse_double(spec.substr(5)));
  return ProductWeights::from_list(parse_double_list(spec));
}

}  // namespace stardisc
