#include "stardisc/primes.hpp"

namespace stardisc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Miller-Rabin with a base set proven deterministic for all 64-bit n.
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

bool is_prime_power(u64 q) {
  if (q < 2) return false;
  // Find the smallest prime factor, then divide it out completely.
  u64 f = q;
  for (u64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      f = d;
      break;
    }
  }
  while (q % f == 0) q /= f;
  return q == 1;
}

std::vector<u64> first_primes(int k) {
  std::vector<u64> out;
  u64 c = 2;
  while (static_cast<int>(out.size()) < k) {
    if (is_prime(c)) out.push_back(c);
    ++c;
  }
  return out;
}

}  // namespace stardisc
