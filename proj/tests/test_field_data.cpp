#include <doctest.h>

#include <set>

#include "cmforge/errors.hpp"
#include "cmforge/field_data.hpp"

using namespace cmforge;

namespace {

std::vector<i64> squarefree_up_to(i64 bound) {
  std::vector<i64> out;
  for (i64 d = 1; d <= bound; ++d) {
    if (is_squarefree(d)) out.push_back(d);
  }
  return out;
}

// Units of Z[theta]/N counted directly.
i64 brute_force_phi(const ImagQuadField& K, i64 N) {
  i64 count = 0;
  for (i64 s = 0; s < N; ++s) {
    for (i64 t = 0; t < N; ++t) {
      if (gcd(mod(norm(K, {s, t}), N), N) == 1) ++count;
    }
  }
  return count;
}

// omega(P^k) case tables for a single prime power component.
int omega_table(const ImagQuadField& K, const IdealComponent& P) {
  if (K.is_gaussian()) {
    if (P.p != 2) return 1;
    return P.k == 1 ? 4 : (P.k == 2 ? 2 : 1);
  }
  if (K.is_eisenstein()) {
    if (P.p == 3 && P.k == 1) return 3;
    if (P.p == 2 && P.k == 1) return 2;
    return 1;
  }
  if (P.p != 2) return 1;
  int v2 = P.type == Splitting::ramified ? 2 : 1;  // ord_P(2)
  return P.k <= v2 ? 2 : 1;
}

}  // namespace

TEST_CASE("make_field") {
  ImagQuadField K7 = make_field(7);
  CHECK(K7.d_K == -7);
  CHECK(K7.B_theta == 1);
  CHECK(K7.C_theta == 2);
  CHECK(K7.omega_K == 2);
  CHECK(K7.h_K == 1);

  ImagQuadField K5 = make_field(5);
  CHECK(K5.d_K == -20);
  CHECK(K5.B_theta == 0);
  CHECK(K5.C_theta == 5);
  CHECK(K5.h_K == 2);

  CHECK(make_field(1).omega_K == 4);
  CHECK(make_field(3).omega_K == 6);
  CHECK_THROWS_AS(make_field(4), DomainError);
  CHECK_THROWS_AS(make_field(0), DomainError);
  CHECK_THROWS_AS(make_field(-3), DomainError);

  for (i64 d : squarefree_up_to(200)) {
    ImagQuadField K = make_field(d);
    CHECK(K.B_theta * K.B_theta - 4 * K.C_theta == K.d_K);
    CHECK(K.h_K == static_cast<int>(K.forms.size()));
  }
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-20, 5) == 0);
  CHECK(kronecker(-7, 2) == 1);
  CHECK_THROWS_AS(kronecker(-4, 9), DomainError);
  // Splitting type matches the number of roots of min(theta) mod p.
  for (i64 d : squarefree_up_to(60)) {
    ImagQuadField K = make_field(d);
    for (i64 p : primes_up_to(60)) {
      int roots = 0;
      for (i64 x = 0; x < p; ++x) roots += mod(x * x + K.B_theta * x + K.C_theta, p) == 0;
      int expect = roots == 2 ? 1 : (roots == 0 ? -1 : 0);
      CHECK(kronecker(K.d_K, p) == expect);
    }
  }
}

TEST_CASE("euler_phi_ideal") {
  CHECK(euler_phi_ideal(make_modulus(make_field(7), 9)) == 72);
  CHECK(euler_phi_ideal(make_modulus(make_field(5), 5)) == 20);
  CHECK(euler_phi_ideal(make_modulus(make_field(5), 4)) == 8);
  for (i64 d : squarefree_up_to(30)) {
    ImagQuadField K = make_field(d);
    for (i64 N = 2; N <= 30; ++N) {
      CAPTURE(d);
      CAPTURE(N);
      CHECK(euler_phi_ideal(make_modulus(K, N)) == brute_force_phi(K, N));
    }
  }
}

TEST_CASE("omega_f") {
  CHECK(omega_f(make_modulus(make_field(7), 9)) == 1);
  CHECK(omega_f(make_modulus(make_field(7), 2)) == 2);
  // -1 = 1 mod 2, so both real units survive; the prime (1+i) alone admits all four.
  CHECK(omega_f(make_modulus(make_field(1), 2)) == 2);
  ImagQuadField Ki = make_field(1);
  CHECK(omega_of(Ki, {{2, Splitting::ramified, 1, 0}}) == 4);

  for (i64 d : squarefree_up_to(40)) {
    ImagQuadField K = make_field(d);
    for (i64 N = 2; N <= 40; ++N) {
      RayModulus m = make_modulus(K, N);
      CHECK(K.omega_K % omega_f(m) == 0);
      CHECK(omega_of(K, components(m)) == omega_f(m));
    }
    for (i64 p : primes_up_to(30)) {
      Splitting type = K.splitting(p);
      for (int k = 1; k <= 5; ++k) {
        for (int c = 0; c < (type == Splitting::split ? 2 : 1); ++c) {
          IdealComponent P{p, type, k, c};
          CAPTURE(d);
          CAPTURE(p);
          CAPTURE(k);
          CHECK(omega_of(K, {P}) == omega_table(K, P));
        }
      }
    }
  }
}

TEST_CASE("ray_class_degree") {
  CHECK(ray_class_degree(make_modulus(make_field(5), 25)) == 500);
  CHECK(ray_class_degree(make_modulus(make_field(5), 5)) == 20);
  CHECK(ray_class_degree(make_modulus(make_field(7), 9)) == 36);
  CHECK(ray_class_degree(make_modulus(make_field(7), 25)) == 300);
  CHECK(ray_class_degree(make_modulus(make_field(5), 8)) == 32);
  // Empty modulus: phi = omega-ratio = 1, degree h_K.
  for (i64 d : squarefree_up_to(50)) {
    ImagQuadField K = make_field(d);
    CHECK(degree_of(K, {}) == K.h_K);
  }
}

TEST_CASE("g_i_order") {
  CHECK(g_i_order(make_modulus(make_field(7), 9), 3) == 36);
  CHECK(g_i_order(make_modulus(make_field(5), 4), 2) == 4);
  // 2 is inert in Q(sqrt-11) (-11 = 5 mod 8): phi = 3, omega = 2.
  CHECK(make_field(11).splitting(2) == Splitting::inert);
  CHECK(g_i_order(make_modulus(make_field(11), 2), 2) == 3);
  // In Q(sqrt-7) the prime 2 splits and |G_i| = 1.
  CHECK(g_i_order(make_modulus(make_field(7), 2), 2) == 1);
  CHECK_THROWS_AS(g_i_order(make_modulus(make_field(7), 9), 5), DomainError);
}

TEST_CASE("small |G_i| tables agree with the computed orders") {
  auto rows = check_small_gi_table(make_modulus(make_field(7), 9));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].p == 3);
  CHECK(rows[0].order == 36);
  CHECK(rows[0].matches_lemma_table);

  auto gauss = check_small_gi_table(make_modulus(make_field(1), 2));
  CHECK(gauss[0].order <= 2);
  CHECK(gauss[0].matches_lemma_table);
  auto eis = check_small_gi_table(make_modulus(make_field(3), 13));
  CHECK(eis[0].order <= 2);
  CHECK(eis[0].matches_lemma_table);

  for (i64 d : squarefree_up_to(60)) {
    ImagQuadField K = make_field(d);
    for (i64 N = 2; N <= 400; ++N) {
      for (const auto& row : check_small_gi_table(make_modulus(K, N))) {
        CAPTURE(d);
        CAPTURE(N);
        CAPTURE(row.p);
        CHECK(row.matches_lemma_table);
      }
    }
  }
}

TEST_CASE("degree_drop_test") {
  CHECK(degree_drop_test(make_modulus(make_field(7), 9)));
  CHECK(degree_drop_test(make_modulus(make_field(5), 4)));
  CHECK_FALSE(degree_drop_test(make_modulus(make_field(7), 2)));
  ImagQuadField K7 = make_field(7);
  CHECK(degree_of(K7, components(make_modulus(K7, 9))) == 36);
  CHECK(degree_of(K7, {}) == 1);
  // Split 2 to the first power never changes the field.
  for (i64 d : squarefree_up_to(60)) {
    ImagQuadField K = make_field(d);
    if (K.splitting(2) != Splitting::split) continue;
    for (i64 odd : {3, 5, 7, 9, 15}) CHECK_FALSE(degree_drop_test(make_modulus(K, 2 * odd)));
  }
}

TEST_CASE("k_p") {
  CHECK(k_p(make_modulus(make_field(7), 5), 5) == 3);
  CHECK(k_p(make_modulus(make_field(5), 5), 5) == 5);
  CHECK(k_p(make_modulus(make_field(7), 9), 3) == 3);
  CHECK_THROWS_AS(k_p(make_modulus(make_field(7), 10), 2), DomainError);
  CHECK_THROWS_AS(k_p(make_modulus(make_field(7), 10), 3), DomainError);
  // k_p divides |(O_K/N)^x / units| whenever every prime factor is needed.
  for (i64 d : squarefree_up_to(30)) {
    ImagQuadField K = make_field(d);
    for (i64 N = 3; N <= 30; ++N) {
      RayModulus m = make_modulus(K, N);
      if (!degree_drop_test(m)) continue;
      i64 order = brute_force_phi(K, N) * omega_f(m) / K.omega_K;
      for (const auto& pl : m.prime_local_data) {
        if (pl.p == 2) continue;
        CAPTURE(d);
        CAPTURE(N);
        CHECK(order % k_p(m, pl.p) == 0);
      }
    }
  }
}

TEST_CASE("beta_of_lemma") {
  AlgebraicIntegerZTheta b1 = beta_of_lemma(make_modulus(make_field(7), 9), 3);
  CHECK(b1.s == 12);
  CHECK(b1.t == 7);
  AlgebraicIntegerZTheta b2 = beta_of_lemma(make_modulus(make_field(5), 5), 5);
  CHECK(b2.s == 6);
  CHECK(b2.t == 1);
  AlgebraicIntegerZTheta b3 = beta_of_lemma(make_modulus(make_field(1), 9), 3);
  CHECK(b3.s == 6);
  CHECK(b3.t == 1);
  CHECK_THROWS_AS(beta_of_lemma(make_modulus(make_field(7), 5), 5), DomainError);

  for (i64 d : squarefree_up_to(40)) {
    ImagQuadField K = make_field(d);
    for (i64 N = 3; N <= 60; ++N) {
      RayModulus m = make_modulus(K, N);
      for (const auto& pl : m.prime_local_data) {
        const i64 p = pl.p;
        if (p == 2 || (N * K.d_K) % (p * p) != 0) continue;
        AlgebraicIntegerZTheta b = beta_of_lemma(m, p);
        const i64 nrm = norm(K, b);
        const i64 n_prime = N % 3 == 0 ? 4 * N : 12 * N;
        CAPTURE(d);
        CAPTURE(N);
        CHECK(gcd(nrm, 6 * N) == 1);
        CHECK(mod(nrm, n_prime) == 1);
      }
    }
  }
}
