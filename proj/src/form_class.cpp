#include "cmforge/form_class.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cmforge/errors.hpp"

namespace cmforge {

bool QuadForm::is_reduced() const {
  if (gcd(gcd(a, b), c) != 1) return false;
  if (-a < b && b <= a && a < c) return true;
  return 0 <= b && b <= a && a == c;
}

std::string QuadForm::to_string() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

double QuadIrrational::real_approx() const { return static_cast<double>(p) / static_cast<double>(q); }

double QuadIrrational::imag_approx() const {
  return std::sqrt(static_cast<double>(-D)) / static_cast<double>(q);
}

std::pair<mpq_class, mpq_class> QuadIrrational::eval_quadratic(i64 a, i64 b, i64 c) const {
  // x = (p + sqrt D)/q, x^2 = (p^2 + D + 2p sqrt D)/q^2
  mpq_class qq(q);
  mpq_class q2 = qq * qq;
  mpq_class rational = mpq_class(a) * (mpq_class(p) * p + mpq_class(D)) / q2 + mpq_class(b) * p / qq + mpq_class(c);
  mpq_class irrational = mpq_class(a) * 2 * p / q2 + mpq_class(b) / qq;
  rational.canonicalize();
  irrational.canonicalize();
  return {rational, irrational};
}

FormClassGroup enumerate_reduced_forms(i64 d_K) {
  if (d_K >= 0 || (mod(d_K, 4) != 0 && mod(d_K, 4) != 1)) {
    throw DomainError("invalid discriminant " + std::to_string(d_K));
  }
  FormClassGroup out;
  out.d_K = d_K;
  // a <= sqrt(-d_K/3)
  for (i64 a = 1; 3 * a * a <= -d_K; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      i64 num = b * b - d_K;
      if (num % (4 * a) != 0) continue;
      QuadForm f{a, b, num / (4 * a)};
      if (f.is_reduced()) out.forms.push_back(f);
    }
  }
  std::sort(out.forms.begin(), out.forms.end(),
            [](const QuadForm& x, const QuadForm& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  return out;
}

QuadIrrational theta_of_form(const QuadForm& Q) { return {-Q.b, 2 * Q.a, Q.discriminant()}; }

MatModN beta_q_matrix(const QuadForm& Q, i64 N) {
  if (N < 2) throw DomainError("N must be at least 2");
  const bool case1 = mod(Q.discriminant(), 4) == 0;
  const i64 a = Q.a, b = Q.b, c = Q.c;
  std::array<std::vector<i64>, 4> residues;
  std::vector<i64> moduli;
  for (auto [p, e] : factorize(N)) {
    std::array<i64, 4> m{};
    if (case1) {
      if (a % p != 0) {
        m = {a, b / 2, 0, 1};
      } else if (c % p != 0) {
        m = {-b / 2, -c, 1, 0};
      } else {
        m = {-a - b / 2, -c - b / 2, 1, -1};
      }
    } else {
      if (a % p != 0) {
        m = {a, (b - 1) / 2, 0, 1};
      } else if (c % p != 0) {
        m = {-(b + 1) / 2, -c, 1, 0};
      } else {
        m = {-a - (b + 1) / 2, -c + (1 - b) / 2, 1, -1};
      }
    }
    i64 pe = ipow(p, e);
    for (int k = 0; k < 4; ++k) residues[k].push_back(mod(m[k], pe));
    moduli.push_back(pe);
  }
  return {N, crt(residues[0], moduli), crt(residues[1], moduli), crt(residues[2], moduli),
          crt(residues[3], moduli)};
}

}  // namespace cmforge
