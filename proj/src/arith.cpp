#include "cmforge/arith.hpp"

#include <cstdlib>

#include "cmforge/errors.hpp"

namespace cmforge {

i64 gcd(i64 a, i64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd(a, b) * b);
}

Bezout ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 inv_mod(i64 a, i64 m) {
  Bezout e = ext_gcd(mod(a, m), m);
  if (e.g != 1) throw DomainError("inv_mod: element is not a unit");
  return mod(e.x, m);
}

i64 pow_mod(i64 base, std::uint64_t exp, i64 m) {
  using u128 = unsigned __int128;
  std::uint64_t b = static_cast<std::uint64_t>(mod(base, m));
  std::uint64_t mm = static_cast<std::uint64_t>(m);
  std::uint64_t result = 1 % mm;
  while (exp > 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>(static_cast<u128>(result) * b % mm);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % mm);
    exp >>= 1U;
  }
  return static_cast<i64>(result);
}

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  using u128 = unsigned __int128;
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = static_cast<std::uint64_t>(pow_mod(a, d, n));
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n - 1)) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(std::llabs(n))) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  n = std::llabs(n);
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(i64 n, i64 p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 crt(const std::vector<i64>& residues, const std::vector<i64>& moduli) {
  i64 x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    i64 mi = moduli[i];
    i64 ri = mod(residues[i], mi);
    // x + m*k = ri (mod mi)
    i64 k = mod((ri - mod(x, mi)) * inv_mod(m % mi, mi), mi);
    x += m * k;
    m *= mi;
    x = mod(x, m);
  }
  return x;
}

std::vector<i64> primes_up_to(i64 bound) {
  std::vector<i64> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
  for (i64 i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (i64 j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

}  // namespace cmforge
