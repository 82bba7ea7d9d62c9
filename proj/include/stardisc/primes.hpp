#pragma once

#include <cstdint>
#include <vector>

namespace stardisc {

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

// q = f^k for a prime f and k >= 1.
bool is_prime_power(std::uint64_t q);

// The first k primes: 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(int k);

}  // namespace stardisc
