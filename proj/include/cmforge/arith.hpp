#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cmforge {

using i64 = std::int64_t;

// Least non-negative residue.
constexpr i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

struct Bezout {
  i64 g;
  i64 x;
  i64 y;
};

// g = gcd(a, b) = x*a + y*b, with g >= 0.
Bezout ext_gcd(i64 a, i64 b);

// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

i64 pow_mod(i64 base, std::uint64_t exp, i64 m);
i64 ipow(i64 base, int exp);

bool is_prime(i64 n);
bool is_squarefree(i64 n);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

// p-adic valuation of n != 0.
int valuation(i64 n, i64 p);

// x with x = residues[i] (mod moduli[i]); moduli pairwise coprime.
i64 crt(const std::vector<i64>& residues, const std::vector<i64>& moduli);

std::vector<i64> primes_up_to(i64 bound);

}  // namespace cmforge
