#include <doctest.h>

#include "cmforge/arith.hpp"
#include "cmforge/errors.hpp"

using namespace cmforge;

TEST_CASE("residues and inverses") {
  CHECK(mod(-7, 9) == 2);
  CHECK(mod(9, 9) == 0);
  CHECK(inv_mod(2, 9) == 5);
  CHECK_THROWS_AS(inv_mod(3, 9), DomainError);
  for (i64 a = -50; a <= 50; ++a) {
    for (i64 b = -50; b <= 50; ++b) {
      Bezout z = ext_gcd(a, b);
      CHECK(z.g == gcd(a, b));
      CHECK(z.x * a + z.y * b == z.g);
    }
  }
}

TEST_CASE("primality agrees with a sieve") {
  auto primes = primes_up_to(20000);
  std::size_t k = 0;
  for (i64 n = 0; n <= 20000; ++n) {
    bool sieve = k < primes.size() && primes[k] == n;
    if (sieve) ++k;
    CHECK(is_prime(n) == sieve);
  }
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1000000007LL * 3));
}

TEST_CASE("factorization and crt") {
  auto f = factorize(2 * 2 * 2 * 3 * 3 * 5 * 97);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == std::pair<i64, int>{2, 3});
  CHECK(f[3] == std::pair<i64, int>{97, 1});
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(valuation(48, 2) == 4);
  i64 x = crt({2, 3, 1}, {3, 5, 7});
  CHECK(x % 3 == 2);
  CHECK(x % 5 == 3);
  CHECK(x % 7 == 1);
  CHECK(pow_mod(3, 100, 1000000007) == 886041711);
}
