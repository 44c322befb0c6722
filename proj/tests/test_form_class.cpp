#include <doctest.h>

#include "cmforge/errors.hpp"
#include "cmforge/form_class.hpp"

using namespace cmforge;

namespace {

int jacobi(i64 a, i64 n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker_symbol(i64 D, i64 a) {
  int result = 1;
  while (a % 2 == 0) {
    if (D % 2 == 0) return 0;
    i64 r = mod(D, 8);
    if (r == 3 || r == 5) result = -result;
    a /= 2;
  }
  return a == 1 ? result : result * jacobi(D, a);
}

// Dirichlet's class number formula for D < -4.
i64 analytic_class_number(i64 D) {
  i64 sum = 0;
  for (i64 a = 1; a < -D; ++a) sum += kronecker_symbol(D, a) * a;
  return -sum / -D;
}

bool fundamental(i64 D) {
  if (mod(D, 4) == 1) return is_squarefree(-D);
  if (mod(D, 4) != 0) return false;
  i64 m = -D / 4;
  return (mod(-m, 4) == 2 || mod(-m, 4) == 3) && is_squarefree(m);
}

}  // namespace

TEST_CASE("enumerate_reduced_forms") {
  auto g20 = enumerate_reduced_forms(-20);
  REQUIRE(g20.size() == 2);
  CHECK(g20.forms[0] == QuadForm{1, 0, 5});
  CHECK(g20.forms[1] == QuadForm{2, 2, 3});
  CHECK(enumerate_reduced_forms(-4).forms == std::vector<QuadForm>{{1, 0, 1}});
  CHECK(enumerate_reduced_forms(-7).forms == std::vector<QuadForm>{{1, 1, 2}});
  CHECK_THROWS_AS(enumerate_reduced_forms(-5), DomainError);
  CHECK_THROWS_AS(enumerate_reduced_forms(8), DomainError);
}

TEST_CASE("class numbers match the analytic formula") {
  int tested = 0;
  for (i64 D = -7; D >= -10000; --D) {
    if (!fundamental(D)) continue;
    auto g = enumerate_reduced_forms(D);
    CAPTURE(D);
    CHECK(static_cast<i64>(g.size()) == analytic_class_number(D));
    CHECK(g.forms.front().a == 1);
    for (const auto& f : g.forms) {
      CHECK(f.is_reduced());
      CHECK(f.discriminant() == D);
      CHECK(3 * f.a * f.a <= -D);
    }
    ++tested;
  }
  CHECK(tested > 3000);
}

TEST_CASE("theta_of_form") {
  QuadIrrational t1 = theta_of_form({1, 0, 5});
  CHECK(t1.p == 0);
  CHECK(t1.q == 2);
  CHECK(t1.D == -20);  // sqrt(-20)/2 = sqrt(-5)
  QuadIrrational t2 = theta_of_form({2, 2, 3});
  CHECK(t2.p == -2);
  CHECK(t2.q == 4);  // (-2 + 2 sqrt(-5))/4
  QuadIrrational t3 = theta_of_form({1, 1, 2});
  CHECK(t3.p == -1);
  CHECK(t3.q == 2);
  CHECK(t3.imag_approx() > 0);
  for (i64 D : {-3, -4, -7, -8, -20, -23, -24, -47, -71, -84, -231, -420}) {
    for (const auto& f : enumerate_reduced_forms(D).forms) {
      auto [rat, irr] = theta_of_form(f).eval_quadratic(f.a, f.b, f.c);
      CHECK(rat == 0);
      CHECK(irr == 0);
      CHECK(theta_of_form(f).imag_approx() > 0);
    }
  }
}

TEST_CASE("beta_q_matrix") {
  CHECK(beta_q_matrix({2, 2, 3}, 8) == MatModN(8, -1, -3, 1, 0));
  CHECK(beta_q_matrix({2, 2, 3}, 25) == MatModN(25, 2, 1, 0, 1));
  for (i64 N = 2; N <= 40; ++N) CHECK(beta_q_matrix({1, 0, 5}, N) == MatModN::identity(N));
  for (i64 D : {-4, -7, -8, -20, -24}) {
    for (const auto& f : enumerate_reduced_forms(D).forms) {
      for (i64 N = 2; N <= 30; ++N) {
        MatModN b = beta_q_matrix(f, N);
        CAPTURE(D);
        CAPTURE(N);
        CHECK(b.invertible());
      }
    }
  }
}
