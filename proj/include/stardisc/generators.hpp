#pragma once

#include <cstdint>
#include <string>

#include "stardisc/point_set.hpp"

namespace stardisc {

// The three explicit constructions built from modular powers of n (or of a
// lattice parameter a) over a prime modulus.
enum class PsetFamily { P, Q, R };

enum class Family {
  KorobovP,   // p points,  x_n = ({n/p}, {n^2/p}, ..., {n^s/p})
  KorobovQ,   // p^2 points, same shape with denominator p^2
  HuaWangR,   // p^2 points, x_{a,k} = ({k/p}, {ak/p}, ..., {a^{s-1}k/p})
  Vdc,        // radical-inverse values phi_b(1), ..., phi_b(N); 1-dimensional
  Halton,     // bases are the first s primes, indices 1..N
  Random,     // seeded mt19937_64, s consecutive draws per point
  Centered,   // (2i-1)/(2N) for i = 1..N; 1-dimensional
};

Family parse_family(const std::string& name);
const char* family_name(Family f);

struct GeneratorSpec {
  Family family = Family::Halton;
  long long p = 0;         // korobov-P/Q, huawang-R
  long long base = 2;      // vdc
  std::uint64_t seed = 0;  // random
  bool has_seed = false;
  long long n = 0;         // vdc/halton/random/centered
};

// Builds P_(p,s), Q_(p^2,s) or R_(p^2,s). All modular powers are computed by
// iterated integer multiplication, so every coordinate is the exact rational
// k/p (or k/p^2) rounded once to double. Requires p prime and s < p.
PointSet generate_pset(PsetFamily family, long long p, int s);

// Radical inverse of n in the given base (digit reversal); exact dyadic
// rational for base 2. n = 0 maps to 0.
double vdc_value(std::uint64_t n, long long base);

PointSet generate_halton(long long n, int s);
PointSet generate_random(long long n, int s, std::uint64_t seed);
PointSet generate_centered(long long n);
PointSet generate_vdc(long long n, long long base);

// Dispatch on spec.family; s is the requested dimension (must be 1 for the
// vdc and centered families).
PointSet generate(const GeneratorSpec& spec, int s);

}  // namespace stardisc
