#include <doctest.h>

#include <random>

#include "cmforge/errors.hpp"
#include "cmforge/minpoly.hpp"
#include "cmforge/reciprocity.hpp"
#include "golden.hpp"

using namespace cmforge;

namespace {

PolyZ golden_poly(const std::vector<std::string>& desc) {
  std::vector<mpz_class> c;
  for (const auto& s : desc) c.emplace_back(s);
  return PolyZ::from_descending(c);
}

// Fraction-free Gaussian elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sw = k + 1;
      while (sw < n && a[sw][k] == 0) ++sw;
      if (sw == n) return 0;
      std::swap(a[k], a[sw]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

mpz_class sylvester_discriminant(const PolyZ& f) {
  const auto& c = f.ascending();
  const int n = f.degree();
  std::vector<mpz_class> d;
  for (int k = 1; k <= n; ++k) d.push_back(c[static_cast<std::size_t>(k)] * k);
  const int m = n - 1;
  const std::size_t size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<mpz_class>> S(size, std::vector<mpz_class>(size, 0));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S[i][static_cast<std::size_t>(i + n - k)] = c[static_cast<std::size_t>(k)];
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + m - k)] = d[static_cast<std::size_t>(k)];
  mpz_class res = bareiss_det(S);
  return ((n * (n - 1) / 2) % 2 == 1) ? mpz_class(-res) : res;
}

mp::Complex cval(mpfr_prec_t prec, const std::string& re, const std::string& im = "0") {
  return mp::Complex(mp::Real(prec, re), mp::Real(prec, im));
}

bool same_bits(const mp::Complex& a, const mp::Complex& b) {
  return mpfr_equal_p(a.re().get(), b.re().get()) && mpfr_equal_p(a.im().get(), b.im().get());
}

OrbitValues orbit_for(const InvariantSpec& spec, i64 d, i64 N, const PrecisionContext& ctx, int threads = 1) {
  RayModulus m = make_modulus(make_field(d), N);
  return evaluate_orbit(spec, m, select_level(spec), ctx, threads);
}

}  // namespace

TEST_CASE("PolyZ") {
  PolyZ p = PolyZ::from_descending({1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "X^2 + 1");
  CHECK(p.eval(3) == 10);
  CHECK(PolyZ::from_descending({1, -3, 0, 2}).to_string() == "X^3 - 3X^2 + 2");
  CHECK_THROWS_AS(PolyZ::from_descending({2, 1}), DomainError);
  CHECK_THROWS_AS(PolyZ::from_descending({1}), DomainError);
}

TEST_CASE("discriminants") {
  CHECK(discriminant(PolyZ::from_descending({1, 0, 1})) == -4);
  CHECK(discriminant(PolyZ::from_descending({1, 0, -1, 0})) == 4);
  CHECK(discriminant(PolyZ::from_descending({1, -2, 1})) == 0);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-20, 20), degd(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = degd(rng);
    std::vector<mpz_class> c;
    for (int k = 0; k < n; ++k) c.push_back(coef(rng));
    c.push_back(1);
    PolyZ f(c);
    CHECK(discriminant(f) == sylvester_discriminant(f));
  }
  for (const auto* g : {&golden::kF4, &golden::kF9, &golden::kQuotient7N5, &golden::kSR5N4}) {
    PolyZ f = golden_poly(*g);
    CHECK(discriminant(f) == sylvester_discriminant(f));
  }
}

TEST_CASE("integer factorization") {
  CHECK(factor_integer(discriminant(golden_poly(golden::kF4))).to_string() == "2^68*5^4");
  CHECK(factor_integer(discriminant(golden_poly(golden::kF9))).to_string() == "2^54*3^135*127^6*827^2");
  Factorization f = factor_integer(-12);
  CHECK(f.sign == -1);
  CHECK(f.to_string() == "-2^2*3");
  CHECK(factor_integer(1).to_string() == "1");
  mpz_class big_prime("1000000000000000000117");
  CHECK(factor_integer(big_prime * big_prime * 7).to_string() == "7*1000000000000000000117^2");
  mpz_class q("1000000000000000000000007");
  Factorization hard = factor_integer(big_prime * q);
  CHECK_FALSE(hard.complete());
  CHECK(hard.cofactor == big_prime * q);
  CHECK_THROWS_AS(factor_integer(0), DomainError);
}

TEST_CASE("unit check") {
  CHECK(unit_check(golden_poly(golden::kF4)));
  CHECK(unit_check(golden_poly(golden::kF9)));
  CHECK_FALSE(unit_check(golden_poly(golden::kSR7N5)));
  CHECK_FALSE(unit_check(PolyZ::from_descending({1, 0, 2})));
}

TEST_CASE("reconstruction from hand-made orbits") {
  PrecisionContext ctx{60, 20};
  const mpfr_prec_t prec = ctx.bits();

  OrbitValues single;
  single.values.push_back(cval(prec, "3.0000000000000000000000000000000000000000001"));
  CHECK(reconstruct_polynomial(single, ctx).polynomial == PolyZ::from_descending({1, -3}));

  OrbitValues gauss;
  gauss.values.push_back(cval(prec, "0", "1"));
  gauss.include_conjugates = true;
  Reconstruction r = reconstruct_polynomial(gauss, ctx);
  CHECK(r.polynomial == PolyZ::from_descending({1, 0, 1}));
  CHECK(r.distinct == 1);

  OrbitValues uneven;
  for (const char* v : {"1", "1", "2"}) uneven.values.push_back(cval(prec, v));
  CHECK_THROWS_AS(reconstruct_polynomial(uneven, ctx), MultiplicityMismatch);

  OrbitValues half;
  half.values.push_back(cval(prec, "0.5"));
  CHECK_THROWS_AS(reconstruct_polynomial(half, ctx), IntegralityFailure);

  OrbitValues rep;
  for (const char* v : {"2", "-1", "2", "-1"}) rep.values.push_back(cval(prec, v));
  Reconstruction rr = reconstruct_polynomial(rep, ctx);
  CHECK(rr.multiplicity == 2);
  CHECK(rr.polynomial == PolyZ::from_descending({1, -1, -2}));

  auto e = expand_roots({cval(prec, "1"), cval(prec, "2")});
  CHECK(e.size() == 3);
  CHECK(e[0].re().round() == 2);
  CHECK(e[1].re().round() == -3);
  CHECK(e[2].re().round() == 1);
}

TEST_CASE("approximate polynomial formatting") {
  PrecisionContext ctx{60, 20};
  OrbitValues two;
  two.values.push_back(cval(ctx.bits(), "2"));
  auto c = approx_polynomial(two);
  REQUIRE(c.size() == 2);
  CHECK(format_sci(c[0].re()) == "1.0000e+00");
  CHECK(format_sci(c[1].re()) == "-2.0000e+00");
  CHECK(format_sci(mp::Real(ctx.bits(), "-58014123456789012"), 5) == "-5.8014e+16");
}

TEST_CASE("real cubic quotient over Q(i)") {
  PrecisionContext ctx{120, 20};
  InvariantSpec spec = make_cor63(make_modulus(make_field(1), 9), 3);
  OrbitValues o = orbit_for(spec, 1, 9, ctx);
  CHECK(o.values.size() == 18);
  // The identity element comes first.
  CHECK(mp::log10(mp::abs(o.values[0].im()) / mp::abs(o.values[0])).to_double() < -100);
  Reconstruction r = reconstruct_polynomial(o, ctx);
  CHECK(r.polynomial == golden_poly(golden::kF9));
  CHECK(r.max_rounding_error_log10 < -ctx.digits / 4.0);

  // Each orbit value is a root of the reconstructed polynomial.
  for (const auto& v : o.values) {
    mp::Complex acc(ctx.bits());
    mp::Real scale(ctx.bits(), 0);
    mp::Real pw(ctx.bits(), 1);
    const auto desc = r.polynomial.descending();
    for (const auto& a : desc) {
      acc = acc * v + mp::Complex(mp::Real(ctx.bits(), a), mp::Real(ctx.bits(), 0));
    }
    for (auto it = r.polynomial.ascending().begin(); it != r.polynomial.ascending().end(); ++it) {
      scale += mp::abs(mp::Real(ctx.bits(), *it)) * pw;
      pw *= mp::abs(v);
    }
    CHECK(mp::log10(mp::abs(acc) / scale).to_double() < -ctx.digits / 2.0);
  }

  PrecisionContext hi{240, 20};
  CHECK(reconstruct_polynomial(orbit_for(spec, 1, 9, hi), hi).polynomial == r.polynomial);
}

TEST_CASE("thread count does not change orbit values") {
  PrecisionContext ctx{80, 20};
  InvariantSpec spec = make_thm51_quotient(make_modulus(make_field(5), 4), 3, 2);
  OrbitValues a = orbit_for(spec, 5, 4, ctx, 1);
  OrbitValues b = orbit_for(spec, 5, 4, ctx, 4);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(same_bits(a.values[i], b.values[i]));
}

TEST_CASE("quotient over Q(sqrt-5) with conjugates") {
  PrecisionContext ctx{120, 20};
  InvariantSpec spec = make_cor52(make_modulus(make_field(5), 5), 5);
  OrbitValues o = orbit_for(spec, 5, 5, ctx, 2);
  CHECK(o.include_conjugates);
  CHECK(o.values.size() == 500);
  Reconstruction r = reconstruct_polynomial(o, ctx);
  CHECK(r.distinct == 20);
  CHECK(r.multiplicity == 25);
  CHECK(r.polynomial.degree() == 40);
  CHECK(r.polynomial == golden_poly(golden::kQuotient5N5));
}

TEST_CASE("reciprocal symmetry of unit polynomials") {
  PrecisionContext ctx{150, 20};
  // x -> 1/x permutes the roots
  Reconstruction q = reconstruct_polynomial(orbit_for(make_thm51_quotient(make_modulus(make_field(7), 5), 12, 13), 7, 5, ctx), ctx);
  CHECK(q.polynomial.ascending() == q.polynomial.descending());
  // x -> -1/x permutes the roots
  Reconstruction r = reconstruct_polynomial(orbit_for(make_thm62_real_ii(make_modulus(make_field(5), 4), 1), 5, 4, ctx), ctx);
  auto asc = r.polynomial.ascending();
  auto desc = r.polynomial.descending();
  for (std::size_t k = 0; k < asc.size(); ++k) CHECK(asc[k] == (k % 2 == 0 ? desc[k] : mpz_class(-desc[k])));
}
