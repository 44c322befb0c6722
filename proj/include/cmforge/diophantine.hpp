#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmforge/arith.hpp"
#include "cmforge/minpoly.hpp"

namespace cmforge {

struct DiophQuery {
  i64 n = 1;
  i64 N = 1;
  PolyZ f;
  mpz_class disc;
  i64 p = 3;
};

DiophQuery make_query(i64 n, i64 N, const PolyZ& f, i64 p);

// p = x^2 + n y^2 with x = 1, y = 0 (mod N), decided via the minimal polynomial.
bool criterion(const DiophQuery& q);

std::optional<i64> root_mod_p_scan(const PolyZ& f, i64 p);
std::optional<i64> root_mod_p_gcd(const PolyZ& f, i64 p);
// Scan below 10^6, gcd with X^p - X above.
std::optional<i64> root_mod_p(const PolyZ& f, i64 p);

std::optional<std::pair<i64, i64>> brute_force_representation(i64 n, i64 N, i64 p);

struct Mismatch {
  i64 p;
  bool criterion;
  bool brute_force;
};

struct CrossValidation {
  i64 n = 0;
  i64 N = 0;
  i64 bound = 0;
  std::vector<i64> nN_excluded_primes;
  std::vector<i64> disc_excluded_primes;
  std::size_t checked = 0;
  std::size_t representable = 0;
  std::vector<Mismatch> mismatches;
  // Representable primes with (-n/p) != 1; must stay empty.
  std::vector<i64> symbol_violations;
};

CrossValidation cross_validate(i64 n, i64 N, const PolyZ& f, i64 prime_bound, int threads = 1);

}  // namespace cmforge
