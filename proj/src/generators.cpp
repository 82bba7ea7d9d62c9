#include "stardisc/generators.hpp"

#include <random>

#include "stardisc/errors.hpp"
#include "stardisc/primes.hpp"
#include "stardisc/rng.hpp"

namespace stardisc {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

void require_pset_args(long long p, int s) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw UsageError("dimension must be >= 1");
  if (s >= p)
    throw UsageError("p-set families require s < p (got s = " +
                     std::to_string(s) + ", p = " + std::to_string(p) + ")");
}

void require_count(long long n) {
  if (n < 1) throw UsageError("point count must be >= 1");
}

}  // namespace

PointSet generate_pset(PsetFamily family, long long p, int s) {
  require_pset_args(p, s);
  const u64 up = static_cast<u64>(p);
  std::vector<double> coords;

  switch (family) {
    case PsetFamily::P: {
      coords.reserve(static_cast<std::size_t>(p) * s);
      for (u64 n = 0; n < up; ++n) {
        u64 power = 1;  // n^j mod p, built by iterated multiplication
        for (int j = 0; j < s; ++j) {
          power = mulmod(power, n, up);
          coords.push_back(static_cast<double>(power) / static_cast<double>(up));
        }
      }
      break;
    }
    case PsetFamily::Q: {
      const u64 m = up * up;
      coords.reserve(static_cast<std::size_t>(m) * s);
      for (u64 n = 0; n < m; ++n) {
        u64 power = 1;
        for (int j = 0; j < s; ++j) {
          power = mulmod(power, n, m);
          coords.push_back(static_cast<double>(power) / static_cast<double>(m));
        }
      }
      break;
    }
    case PsetFamily::R: {
      // Union over a of the rank-1 lattice with generator (1, a, ..., a^{s-1});
      // a multi-set (k = 0 contributes the origin once per a).
      coords.reserve(static_cast<std::size_t>(up) * up * s);
      for (u64 a = 0; a < up; ++a) {
        for (u64 k = 0; k < up; ++k) {
          u64 apow = 1;  // a^{j-1} mod p
          for (int j = 0; j < s; ++j) {
            coords.push_back(static_cast<double>(mulmod(apow, k, up)) /
                             static_cast<double>(up));
            apow = mulmod(apow, a, up);
          }
        }
      }
      break;
    }
  }
  return PointSet(s, std::move(coords));
}

double vdc_value(std::uint64_t n, long long base) {
  if (base < 2) throw UsageError("radical-inverse base must be >= 2");
  const u64 b = static_cast<u64>(base);
  // Reversed digits as an exact fraction num/den, rounded by one division.
  u64 num = 0, den = 1;
  u64 rest = n;
  while (rest) {
    if (den > (1ULL << 62) / b) {
      // den would overflow; finish with floating accumulation. Only
      // reachable for n beyond any use in this code base.
      double r = static_cast<double>(num) / static_cast<double>(den);
      double f = 1.0 / static_cast<double>(den);
      while (rest) {
        f /= static_cast<double>(b);
        r += static_cast<double>(rest % b) * f;
        rest /= b;
      }
      return r;
    }
    num = num * b + rest % b;
    den *= b;
    rest /= b;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

PointSet generate_halton(long long n, int s) {
  require_count(n);
  if (s < 1) throw UsageError("dimension must be >= 1");
  auto bases = first_primes(s);
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n) * s);
  for (long long i = 1; i <= n; ++i)
    for (int j = 0; j < s; ++j)
      coords.push_back(vdc_value(static_cast<u64>(i),
                                 static_cast<long long>(bases[j])));
  return PointSet(s, std::move(coords));
}

PointSet generate_random(long long n, int s, std::uint64_t seed) {
  require_count(n);
  if (s < 1) throw UsageError("dimension must be >= 1");
  std::mt19937_64 gen(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * s);
  for (auto& c : coords) c = unit_double(gen);
  return PointSet(s, std::move(coords));
}

PointSet generate_centered(long long n) {
  require_count(n);
  std::vector<double> coords(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i)
    coords[i - 1] = (2.0 * static_cast<double>(i) - 1.0) /
                    (2.0 * static_cast<double>(n));
  return PointSet(1, std::move(coords));
}

PointSet generate_vdc(long long n, long long base) {
  require_count(n);
  std::vector<double> coords(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i)
    coords[i - 1] = vdc_value(static_cast<u64>(i), base);
  return PointSet(1, std::move(coords));
}

Family parse_family(const std::string& name) {
  if (name == "korobov-P") return Family::KorobovP;
  if (name == "korobov-Q") return Family::KorobovQ;
  if (name == "huawang-R") return Family::HuaWangR;
  if (name == "vdc") return Family::Vdc;
  if (name == "halton") return Family::Halton;
  if (name == "random") return Family::Random;
  if (name == "centered") return Family::Centered;
  throw UsageError("unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::KorobovP: return "korobov-P";
    case Family::KorobovQ: return "korobov-Q";
    case Family::HuaWangR: return "huawang-R";
    case Family::Vdc: return "vdc";
    case Family::Halton: return "halton";
    case Family::Random: return "random";
    case Family::Centered: return "centered";
  }
  return "?";
}

PointSet generate(const GeneratorSpec& spec, int s) {
  switch (spec.family) {
    case Family::KorobovP:
      return generate_pset(PsetFamily::P, spec.p, s);
    case Family::KorobovQ:
      return generate_pset(PsetFamily::Q, spec.p, s);
    case Family::HuaWangR:
      return generate_pset(PsetFamily::R, spec.p, s);
    case Family::Vdc:
      if (s != 1) throw UsageError("vdc generates 1-dimensional sets only");
      return generate_vdc(spec.n, spec.base);
    case Family::Halton:
      return generate_halton(spec.n, s);
    case Family::Random:
      if (!spec.has_seed) throw UsageError("random family requires a seed");
      return generate_random(spec.n, s, spec.seed);
    case Family::Centered:
      if (s != 1) throw UsageError("centered generates 1-dimensional sets only");
      return generate_centered(spec.n);
  }
  throw UsageError("unknown family");
}

}  // namespace stardisc
