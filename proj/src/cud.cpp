#include "stardisc/cud.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stardisc/errors.hpp"
#include "stardisc/generators.hpp"
#include "stardisc/rng.hpp"
#include "stardisc/util.hpp"

namespace stardisc {

namespace {

using ll = long long;
using u64 = std::uint64_t;

class LcgStream final : public Stream {
 public:
  LcgStream(ll a, ll c, ll m, ll x0) : a_(a), c_(c), m_(m), x_(x0) {}

 private:
  double emit() override {
    // emit the current state, then advance
    const double u = static_cast<double>(x_) / static_cast<double>(m_);
    x_ = static_cast<ll>(
        (static_cast<unsigned __int128>(x_) * static_cast<u64>(a_) +
         static_cast<u64>(c_)) %
        static_cast<u64>(m_));
    return u;
  }
  ll a_, c_, m_, x_;
};

class VdcStream final : public Stream {
 public:
  explicit VdcStream(ll base) : base_(base) {}

 private:
  double emit() override { return vdc_value(++n_, base_); }
  ll base_;
  u64 n_ = 0;
};

class RandomStream final : public Stream {
 public:
  explicit RandomStream(u64 seed) : gen_(seed) {}

 private:
  double emit() override { return unit_double(gen_); }
  std::mt19937_64 gen_;
};

double dstar_of(const PointSet& ps, const ProfileOptions& opts, Method& method) {
  if (opts.method == Method::Exact) {
    method = Method::Exact;
    return star_discrepancy_exact(ps, opts.budget, opts.workers).value;
  }
  method = Method::LowerBound;
  return star_discrepancy_lower(ps, opts.restarts, opts.seed).value;
}

}  // namespace

StreamSpec StreamSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw FormatError("stream spec must look like lcg:a,c,m,x0 | vdc:base | random:seed");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  StreamSpec sp;
  if (kind == "lcg") {
    const auto v = parse_ll_list(rest);
    if (v.size() != 4) throw FormatError("lcg spec needs exactly a,c,m,x0");
    sp.kind = Kind::Lcg;
    sp.a = v[0];
    sp.c = v[1];
    sp.m = v[2];
    sp.x0 = v[3];
    if (sp.m < 1) throw FormatError("lcg modulus must be >= 1");
    if (sp.a < 0 || sp.c < 0) throw FormatError("lcg multiplier and increment must be >= 0");
    if (sp.x0 < 0 || sp.x0 >= sp.m) throw FormatError("lcg state must satisfy 0 <= x0 < m");
  } else if (kind == "vdc") {
    sp.kind = Kind::Vdc;
    sp.base = parse_ll(rest);
    if (sp.base < 2) throw FormatError("vdc base must be >= 2");
  } else if (kind == "random") {
    sp.kind = Kind::Random;
    sp.seed = parse_u64(rest);
  } else {
    throw FormatError("unknown stream kind '" + kind + "'");
  }
  return sp;
}

std::string StreamSpec::describe() const {
  switch (kind) {
    case Kind::Lcg:
      return "lcg:" + std::to_string(a) + "," + std::to_string(c) + "," +
             std::to_string(m) + "," + std::to_string(x0);
    case Kind::Vdc:
      return "vdc:" + std::to_string(base);
    case Kind::Random:
      return "random:" + std::to_string(seed);
  }
  return "?";
}

std::unique_ptr<Stream> StreamSpec::make() const {
  switch (kind) {
    case Kind::Lcg: return std::make_unique<LcgStream>(a, c, m, x0);
    case Kind::Vdc: return std::make_unique<VdcStream>(base);
    case Kind::Random: return std::make_unique<RandomStream>(seed);
  }
  throw UsageError("unknown stream kind");
}

PointSet blocks(Stream& stream, int s, long long n) {
  if (s < 1) throw UsageError("block dimension must be >= 1");
  if (n < 1) throw UsageError("block count must be >= 1");
  std::vector<double> coords(static_cast<std::size_t>(n) * s);
  for (auto& c : coords) c = stream.next();
  return PointSet(s, std::move(coords));
}

std::vector<ProfileRow> cud_profile(const StreamSpec& spec,
                                    const std::vector<int>& dims,
                                    const std::vector<long long>& ns,
                                    const ProfileOptions& opts) {
  if (dims.empty() || ns.empty())
    throw UsageError("profile needs at least one dimension and one N");
  std::vector<int> ds = dims;
  std::vector<ll> sizes = ns;
  std::sort(ds.begin(), ds.end());
  std::sort(sizes.begin(), sizes.end());

  std::vector<ProfileRow> rows;
  rows.reserve(ds.size() * sizes.size());
  for (int s : ds) {
    for (ll n : sizes) {
      ProfileRow row;
      row.s = s;
      row.n = n;
      auto stream = spec.make();  // fresh stream: cells are independent
      const PointSet ps = blocks(*stream, s, n);
      try {
        row.dstar = dstar_of(ps, opts, row.method);
      } catch (const BudgetExceeded&) {
        row.ok = false;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<GrowingDimRow> growing_dim_profile(const StreamSpec& spec, double c,
                                               const std::vector<long long>& ns,
                                               const ProfileOptions& opts) {
  if (!(c >= 0.0)) throw UsageError("rate constant c must be >= 0");
  if (ns.empty()) throw UsageError("profile needs at least one N");
  std::vector<ll> sizes = ns;
  std::sort(sizes.begin(), sizes.end());

  std::vector<GrowingDimRow> rows;
  rows.reserve(sizes.size());
  for (ll n : sizes) {
    if (n < 1) throw UsageError("N must be >= 1");
    const double ln_n = std::log(static_cast<double>(n));
    GrowingDimRow row;
    row.n = n;
    row.s = std::max(1, static_cast<int>(std::ceil(c * ln_n)));
    row.envelope = std::sqrt(static_cast<double>(row.s) * ln_n /
                             static_cast<double>(n));
    auto stream = spec.make();
    const PointSet ps = blocks(*stream, row.s, n);
    try {
      row.dstar = dstar_of(ps, opts, row.method);
    } catch (const BudgetExceeded&) {
      row.ok = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stardisc
