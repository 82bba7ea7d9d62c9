#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stardisc/generators.hpp"
#include "stardisc/point_set.hpp"
#include "stardisc/weights.hpp"

namespace stardisc {

// Default cap on box-point operations for the exact engine; the cost model
// charged against it is (N+1)^s * N * s. Exact star-discrepancy is NP-hard
// in the dimension, so oversized requests are refused instead of running
// for hours.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

enum class BoxSide { Open, Closed };

enum class Method { Exact, LowerBound };
const char* method_name(Method m);

// Axis-parallel box anchored at the origin: [0,t) per coordinate when Open,
// prod [0,t_j] when Closed.
struct AnchoredBox {
  std::vector<double> corner;
  BoxSide side = BoxSide::Open;
};

struct DiscrepancyResult {
  double value = 0.0;
  AnchoredBox witness;
  Method method = Method::Exact;
  std::uint64_t boxes_evaluated = 0;
};

// Fraction of points in the open box [0,t) minus its volume.
double local_discrepancy(const PointSet& ps, std::span<const double> t);

// Number of points of ps inside the box.
long long box_count(const PointSet& ps, const AnchoredBox& box);

// Exact star-discrepancy by enumeration of the critical grid (per-dimension
// point coordinates extended by 1). Every corner is scored on both sides:
// open-box deficit  prod(q) - A_open(q)/N  and closed-box excess
// A_closed(q)/N - prod(q); the maximum over corners and sides equals the sup
// over [0,1]^s. Tie-break for the witness: lexicographically smallest
// corner, open side preferred. The enumeration may be partitioned across
// workers; the result does not depend on the worker count (workers = 0
// picks a count automatically).
DiscrepancyResult star_discrepancy_exact(const PointSet& ps,
                                         std::uint64_t budget = kDefaultBudget,
                                         int workers = 0);

// Closed form for one dimension: with sorted points x_(1) <= ... <= x_(N),
// D* = 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|. Serves as an independent
// oracle for the enumeration engine.
double star_discrepancy_1d(const PointSet& ps);

// Randomized multistart lower bound: corners start at random critical-grid
// indices and hill-climb one grid step per coordinate, scoring both box
// sides, until no move improves. Deterministic given the seed, and
// non-decreasing in the restart count for a fixed seed.
DiscrepancyResult star_discrepancy_lower(const PointSet& ps, int restarts,
                                         std::uint64_t seed);

// Multi-set projection onto the coordinates in u (1-based, non-empty,
// within range); duplicates are kept.
PointSet project(const PointSet& ps, const std::vector<int>& u);

struct WeightedResult {
  double value = 0.0;
  std::vector<int> argmax;  // 1-based coordinate subset attaining the max
  Method method = Method::Exact;
};

// Weighted star-discrepancy for product weights:
//     max over non-empty u of gamma_u * D*(project(ps, u)).
// The anchor sup decouples per subset because the local discrepancy of
// (z_u, 1) is exactly the local discrepancy of the projected set at z_u, and
// each subset attains its own sup independently. Subsets are visited in
// decreasing gamma_u order (ties: larger |u| first, then smaller bitmask)
// and pruned once gamma_u cannot beat the incumbent, which is valid since
// D* <= 1. Projections whose exact enumeration would exceed the budget fall
// back to the lower-bound search and downgrade the method tag.
WeightedResult weighted_star_discrepancy(const PointSet& ps,
                                         const ProductWeights& weights,
                                         std::uint64_t budget = kDefaultBudget);

// Smallest admissible N <= n_max whose generated point set has exact
// D* <= eps, or nullopt if none qualifies. Admissible sizes: primes p > s
// for korobov-P, squares of such primes for korobov-Q/huawang-R, every
// N >= 1 otherwise. Throws BudgetExceeded if the exact engine would be
// refused before a witness is found.
std::optional<long long> inverse_discrepancy_search(
    Family family, int s, double eps, long long n_max,
    std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0,
    long long base = 2);

}  // namespace stardisc
