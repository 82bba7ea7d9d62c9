#include "stardisc/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "stardisc/errors.hpp"
#include "stardisc/primes.hpp"
#include "stardisc/rng.hpp"

namespace stardisc {

const char* method_name(Method m) {
  return m == Method::Exact ? "exact" : "lower-bound";
}

namespace {

using ll = long long;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Cost model charged against the budget: (N+1)^s * N * s.
bool within_budget(ll n, int s, u64 budget) {
  u128 cost = static_cast<u128>(n) * static_cast<unsigned>(s);
  if (cost > budget) return false;
  for (int j = 0; j < s; ++j) {
    cost *= static_cast<u64>(n) + 1;
    if (cost > budget) return false;
  }
  return true;
}

[[noreturn]] void refuse(ll n, int s, u64 budget) {
  throw BudgetExceeded("exact star-discrepancy refused: (N+1)^s*N*s exceeds budget " +
                       std::to_string(budget) + " for N=" + std::to_string(n) +
                       ", s=" + std::to_string(s));
}

// Per-dimension critical grid (sorted unique coordinates plus 1) and each
// point's exact index into it. Index comparisons then reproduce coordinate
// comparisons: coord < grid value iff idx < grid index, likewise <=.
struct Grids {
  std::vector<std::vector<double>> vals;
  std::vector<std::vector<int>> idx;  // [dim][point]
};

Grids build_grids(const PointSet& ps) {
  const int s = ps.dim();
  const ll n = ps.size();
  Grids g;
  g.vals.resize(static_cast<std::size_t>(s));
  g.idx.assign(static_cast<std::size_t>(s),
               std::vector<int>(static_cast<std::size_t>(n)));
  for (int j = 0; j < s; ++j) {
    auto& v = g.vals[j];
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (ll i = 0; i < n; ++i) v.push_back(ps.coord(i, j));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    v.push_back(1.0);  // all coordinates are < 1
    for (ll i = 0; i < n; ++i)
      g.idx[j][i] = static_cast<int>(
          std::lower_bound(v.begin(), v.end(), ps.coord(i, j)) - v.begin());
  }
  return g;
}

struct Best {
  double value = -1.0;
  std::vector<int> corner;  // grid indices, one per dimension
  BoxSide side = BoxSide::Open;
};

// Scans outer-odometer assignments [lo, hi) (linearized lexicographically,
// dimension 0 most significant). Corners are visited in lexicographic order
// with the open side scored before the closed side, and the incumbent is
// replaced only on strict improvement — together that realizes the
// documented tie-break (lex-smallest corner, open preferred) without extra
// comparisons.
Best scan_outer_range(const Grids& g, ll n, u64 lo, u64 hi) {
  const int s = static_cast<int>(g.vals.size());
  const int t = s - 2;  // outer dims 0..t-1; y = t, z = t+1
  const auto& vy = g.vals[t];
  const auto& vz = g.vals[t + 1];
  const int gy = static_cast<int>(vy.size());
  const int gz = static_cast<int>(vz.size());
  const double dn = static_cast<double>(n);

  std::vector<int> o(static_cast<std::size_t>(t));
  u64 rem = lo;
  for (int j = t - 1; j >= 0; --j) {
    u64 gj = g.vals[j].size();
    o[j] = static_cast<int>(rem % gj);
    rem /= gj;
  }

  // closed buckets hold every point passing the outer prefix weakly;
  // open buckets the strictly-dominated subset. The y/z sweep then applies
  // the strict/weak comparisons for the two inner dimensions.
  std::vector<std::vector<int>> open_b(static_cast<std::size_t>(gy));
  std::vector<std::vector<int>> closed_b(static_cast<std::size_t>(gy));
  std::vector<ll> hist_open(static_cast<std::size_t>(gz));
  std::vector<ll> hist_closed(static_cast<std::size_t>(gz));
  Best best;

  auto take = [&](double v, BoxSide side, int iy, int iz) {
    best.value = v;
    best.side = side;
    best.corner.assign(o.begin(), o.end());
    best.corner.push_back(iy);
    best.corner.push_back(iz);
  };

  for (u64 m = lo; m < hi; ++m) {
    double outer_vol = 1.0;
    for (int j = 0; j < t; ++j) outer_vol *= g.vals[j][o[j]];

    for (auto& b : open_b) b.clear();
    for (auto& b : closed_b) b.clear();
    std::fill(hist_open.begin(), hist_open.end(), 0);
    std::fill(hist_closed.begin(), hist_closed.end(), 0);

    for (ll i = 0; i < n; ++i) {
      bool strict = true, weak = true;
      for (int j = 0; j < t; ++j) {
        const int pi = g.idx[j][i];
        if (pi > o[j]) {
          weak = false;
          break;
        }
        if (pi == o[j]) strict = false;
      }
      if (!weak) continue;
      const int iy = g.idx[t][i];
      const int iz = g.idx[t + 1][i];
      closed_b[iy].push_back(iz);
      if (strict) open_b[iy].push_back(iz);
    }

    for (int iy = 0; iy < gy; ++iy) {
      for (int iz : closed_b[iy]) ++hist_closed[iz];
      const double vol_base = outer_vol * vy[iy];
      ll acc_open = 0;    // points with yidx < iy and zidx < current iz
      ll acc_closed = 0;  // points with yidx <= iy and zidx <= current iz
      for (int iz = 0; iz < gz; ++iz) {
        acc_closed += hist_closed[iz];
        const double vol = vol_base * vz[iz];
        const double cand_open = vol - static_cast<double>(acc_open) / dn;
        if (cand_open > best.value) take(cand_open, BoxSide::Open, iy, iz);
        const double cand_closed = static_cast<double>(acc_closed) / dn - vol;
        if (cand_closed > best.value) take(cand_closed, BoxSide::Closed, iy, iz);
        acc_open += hist_open[iz];
      }
      for (int iz : open_b[iy]) ++hist_open[iz];
    }

    for (int j = t - 1; j >= 0; --j) {
      if (++o[j] < static_cast<int>(g.vals[j].size())) break;
      o[j] = 0;
    }
  }
  return best;
}

Best scan_1d(const Grids& g, ll n) {
  const auto& v = g.vals[0];
  const int gz = static_cast<int>(v.size());
  const double dn = static_cast<double>(n);
  std::vector<ll> cnt(static_cast<std::size_t>(gz), 0);
  for (int pi : g.idx[0]) ++cnt[pi];
  Best best;
  ll acc_open = 0, acc_closed = 0;
  for (int iz = 0; iz < gz; ++iz) {
    acc_closed += cnt[iz];
    const double cand_open = v[iz] - static_cast<double>(acc_open) / dn;
    if (cand_open > best.value) best = {cand_open, {iz}, BoxSide::Open};
    const double cand_closed = static_cast<double>(acc_closed) / dn - v[iz];
    if (cand_closed > best.value) best = {cand_closed, {iz}, BoxSide::Closed};
    acc_open += cnt[iz];
  }
  return best;
}

// Both-side counts at a grid-index corner, O(N*s).
void counts_at_indices(const Grids& g, ll n, const std::vector<int>& c,
                       ll& a_open, ll& a_closed) {
  const int s = static_cast<int>(g.vals.size());
  a_open = a_closed = 0;
  for (ll i = 0; i < n; ++i) {
    bool strict = true, weak = true;
    for (int j = 0; j < s; ++j) {
      const int pi = g.idx[j][i];
      if (pi > c[j]) {
        weak = false;
        strict = false;
        break;
      }
      if (pi == c[j]) strict = false;
    }
    if (weak) ++a_closed;
    if (strict) ++a_open;
  }
}

constexpr int kWeightedFallbackRestarts = 32;
constexpr u64 kWeightedFallbackSeed = 20130815;

}  // namespace

double local_discrepancy(const PointSet& ps, std::span<const double> t) {
  if (static_cast<int>(t.size()) != ps.dim())
    throw UsageError("corner dimension does not match the point set");
  double vol = 1.0;
  for (double v : t) {
    if (!(v >= 0.0 && v <= 1.0)) throw UsageError("corner outside [0,1]^s");
    vol *= v;
  }
  ll cnt = 0;
  for (ll i = 0; i < ps.size(); ++i) {
    bool in = true;
    for (int j = 0; j < ps.dim(); ++j) {
      if (!(ps.coord(i, j) < t[j])) {
        in = false;
        break;
      }
    }
    cnt += in;
  }
  return static_cast<double>(cnt) / static_cast<double>(ps.size()) - vol;
}

long long box_count(const PointSet& ps, const AnchoredBox& box) {
  if (static_cast<int>(box.corner.size()) != ps.dim())
    throw UsageError("box dimension does not match the point set");
  const bool open = box.side == BoxSide::Open;
  ll cnt = 0;
  for (ll i = 0; i < ps.size(); ++i) {
    bool in = true;
    for (int j = 0; j < ps.dim(); ++j) {
      const double x = ps.coord(i, j);
      const double q = box.corner[j];
      if (open ? !(x < q) : !(x <= q)) {
        in = false;
        break;
      }
    }
    cnt += in;
  }
  return cnt;
}

DiscrepancyResult star_discrepancy_exact(const PointSet& ps, std::uint64_t budget,
                                         int workers) {
  const int s = ps.dim();
  const ll n = ps.size();
  if (!within_budget(n, s, budget)) refuse(n, s, budget);
  const Grids g = build_grids(ps);

  u64 corners = 1;
  for (const auto& v : g.vals) corners *= v.size();

  Best best;
  if (s == 1) {
    best = scan_1d(g, n);
  } else {
    u64 outer_total = 1;
    for (int j = 0; j < s - 2; ++j) outer_total *= g.vals[j].size();
    int w = workers > 0 ? workers
                        : static_cast<int>(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    if (static_cast<u64>(w) > outer_total) w = static_cast<int>(outer_total);
    if (w == 1) {
      best = scan_outer_range(g, n, 0, outer_total);
    } else {
      std::vector<Best> part(static_cast<std::size_t>(w));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(w));
      for (int k = 0; k < w; ++k) {
        const u64 lo = static_cast<u64>(static_cast<u128>(outer_total) * k / w);
        const u64 hi =
            static_cast<u64>(static_cast<u128>(outer_total) * (k + 1) / w);
        pool.emplace_back(
            [&g, n, lo, hi, &part, k] { part[k] = scan_outer_range(g, n, lo, hi); });
      }
      for (auto& th : pool) th.join();
      // ranges are in lexicographic order, so first-strictly-greater keeps
      // the same tie-break as a sequential scan
      best = std::move(part[0]);
      for (int k = 1; k < w; ++k)
        if (part[k].value > best.value) best = std::move(part[k]);
    }
  }

  DiscrepancyResult out;
  out.value = best.value;
  out.method = Method::Exact;
  out.boxes_evaluated =
      corners > std::numeric_limits<u64>::max() / 2 ? std::numeric_limits<u64>::max()
                                                    : 2 * corners;
  out.witness.side = best.side;
  out.witness.corner.resize(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) out.witness.corner[j] = g.vals[j][best.corner[j]];
  return out;
}

double star_discrepancy_1d(const PointSet& ps) {
  if (ps.dim() != 1) throw UsageError("closed form requires a 1-dimensional set");
  std::vector<double> x(ps.raw().begin(), ps.raw().end());
  std::sort(x.begin(), x.end());
  const double dn = static_cast<double>(ps.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double target =
        (2.0 * static_cast<double>(i + 1) - 1.0) / (2.0 * dn);
    dev = std::max(dev, std::abs(x[i] - target));
  }
  return 1.0 / (2.0 * dn) + dev;
}

DiscrepancyResult star_discrepancy_lower(const PointSet& ps, int restarts,
                                         std::uint64_t seed) {
  if (restarts < 1) throw UsageError("restarts must be >= 1");
  const int s = ps.dim();
  const ll n = ps.size();
  const Grids g = build_grids(ps);
  const double dn = static_cast<double>(n);
  std::mt19937_64 gen(seed);
  u64 evals = 0;

  auto score = [&](const std::vector<int>& c, BoxSide& side) {
    ll a_open = 0, a_closed = 0;
    counts_at_indices(g, n, c, a_open, a_closed);
    ++evals;
    double vol = 1.0;
    for (int j = 0; j < s; ++j) vol *= g.vals[j][c[j]];
    const double cand_open = vol - static_cast<double>(a_open) / dn;
    const double cand_closed = static_cast<double>(a_closed) / dn - vol;
    if (cand_open >= cand_closed) {
      side = BoxSide::Open;
      return cand_open;
    }
    side = BoxSide::Closed;
    return cand_closed;
  };

  Best best;
  for (int r = 0; r < restarts; ++r) {
    std::vector<int> c(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j)
      c[j] = static_cast<int>(bounded(gen, g.vals[j].size()));
    BoxSide side;
    double val = score(c, side);
    // coordinate-wise hill climb: walk each index while it strictly
    // improves, sweep until a full pass makes no move
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j = 0; j < s; ++j) {
        for (int dir : {1, -1}) {
          while (true) {
            const int nj = c[j] + dir;
            if (nj < 0 || nj >= static_cast<int>(g.vals[j].size())) break;
            c[j] = nj;
            BoxSide side2;
            const double v2 = score(c, side2);
            if (v2 > val) {
              val = v2;
              side = side2;
              moved = true;
            } else {
              c[j] -= dir;
              break;
            }
          }
        }
      }
    }
    if (val > best.value) best = {val, c, side};
  }

  DiscrepancyResult out;
  out.value = best.value;
  out.method = Method::LowerBound;
  out.boxes_evaluated = 2 * evals;
  out.witness.side = best.side;
  out.witness.corner.resize(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) out.witness.corner[j] = g.vals[j][best.corner[j]];
  return out;
}

PointSet project(const PointSet& ps, const std::vector<int>& u) {
  if (u.empty()) throw UsageError("projection subset must be non-empty");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 1 || u[i] > ps.dim())
      throw UsageError("projection index " + std::to_string(u[i]) +
                       " outside 1.." + std::to_string(ps.dim()));
    if (i > 0 && u[i] <= u[i - 1])
      throw UsageError("projection indices must be strictly increasing");
  }
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(ps.size()) * u.size());
  for (ll i = 0; i < ps.size(); ++i)
    for (int j : u) coords.push_back(ps.coord(i, j - 1));
  return PointSet(static_cast<int>(u.size()), std::move(coords));
}

WeightedResult weighted_star_discrepancy(const PointSet& ps,
                                         const ProductWeights& weights,
                                         std::uint64_t budget) {
  const int s = ps.dim();
  if (s > 30) throw UsageError("weighted search enumerates 2^s subsets; s > 30 unsupported");
  const std::vector<double> gam = weights.prefix(s);

  struct Sub {
    std::uint32_t mask;
    double gamma_u;
    int size;
  };
  std::vector<Sub> subs;
  subs.reserve((1u << s) - 1);
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    double gu = 1.0;
    for (int j = 0; j < s; ++j)
      if (mask >> j & 1u) gu *= gam[j];
    subs.push_back({mask, gu, std::popcount(mask)});
  }
  // best-first: larger subset weight first; ties broken toward larger
  // subsets, then smaller bitmask, so the reported argmax is reproducible
  std::sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
    if (a.gamma_u != b.gamma_u) return a.gamma_u > b.gamma_u;
    if (a.size != b.size) return a.size > b.size;
    return a.mask < b.mask;
  });

  WeightedResult out;
  out.method = Method::Exact;
  double best = -1.0;
  std::uint32_t best_mask = subs.front().mask;
  for (const Sub& sub : subs) {
    if (sub.gamma_u <= best) break;  // gamma_u * D* <= gamma_u, cannot win
    std::vector<int> u;
    for (int j = 0; j < s; ++j)
      if (sub.mask >> j & 1u) u.push_back(j + 1);
    const PointSet proj = project(ps, u);
    double d;
    if (within_budget(proj.size(), proj.dim(), budget)) {
      d = star_discrepancy_exact(proj, budget).value;
    } else {
      d = star_discrepancy_lower(proj, kWeightedFallbackRestarts,
                                 kWeightedFallbackSeed)
              .value;
      out.method = Method::LowerBound;
    }
    const double v = sub.gamma_u * d;
    if (v > best) {
      best = v;
      best_mask = sub.mask;
    }
  }

  out.value = best;
  for (int j = 0; j < s; ++j)
    if (best_mask >> j & 1u) out.argmax.push_back(j + 1);
  return out;
}

std::optional<long long> inverse_discrepancy_search(Family family, int s,
                                                    double eps, long long n_max,
                                                    std::uint64_t budget,
                                                    std::uint64_t seed,
                                                    long long base) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("target must be in (0,1]");
  if (n_max < 1) throw UsageError("N_max must be >= 1");
  if (s < 1) throw UsageError("dimension must be >= 1");

  auto meets_target = [&](const PointSet& ps) {
    // one dimension has a closed form; besides being cheap it avoids the
    // enumeration's last-ulp rounding, which matters when eps sits exactly on
    // the attained value (centered sets at eps = 1/(2N))
    if (ps.dim() == 1) return star_discrepancy_1d(ps) <= eps;
    if (!within_budget(ps.size(), ps.dim(), budget))
      refuse(ps.size(), ps.dim(), budget);
    return star_discrepancy_exact(ps, budget).value <= eps;
  };

  switch (family) {
    case Family::KorobovP: {
      for (u64 p = next_prime(static_cast<u64>(s));
           static_cast<ll>(p) <= n_max; p = next_prime(p)) {
        if (meets_target(generate_pset(PsetFamily::P, static_cast<ll>(p), s)))
          return static_cast<ll>(p);
      }
      return std::nullopt;
    }
    case Family::KorobovQ:
    case Family::HuaWangR: {
      const PsetFamily fam =
          family == Family::KorobovQ ? PsetFamily::Q : PsetFamily::R;
      for (u64 p = next_prime(static_cast<u64>(s));
           static_cast<ll>(p * p) <= n_max; p = next_prime(p)) {
        if (meets_target(generate_pset(fam, static_cast<ll>(p), s)))
          return static_cast<ll>(p * p);
      }
      return std::nullopt;
    }
    default: {
      GeneratorSpec spec;
      spec.family = family;
      spec.base = base;
      spec.seed = seed;
      spec.has_seed = true;
      for (ll n = 1; n <= n_max; ++n) {
        spec.n = n;
        if (meets_target(generate(spec, s))) return n;
      }
      return std::nullopt;
    }
  }
}

}  // namespace stardisc
