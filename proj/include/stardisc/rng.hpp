#pragma once

#include <cstdint>
#include <random>

namespace stardisc {

// All randomness in the library flows through std::mt19937_64, whose output
// sequence is fixed by the standard, so seeded runs reproduce everywhere.

// Uniform double in [0,1) from the top 53 bits.
inline double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Bounded draw by modulo. std::uniform_int_distribution is implementation
// defined, which would break replay across standard libraries; the modulo
// bias is irrelevant for our search heuristics.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
  return gen() % n;
}

}  // namespace stardisc
