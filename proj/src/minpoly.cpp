#include "cmforge/minpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "cmforge/errors.hpp"
#include "cmforge/parallel.hpp"
#include "cmforge/reciprocity.hpp"

namespace cmforge {

PolyZ::PolyZ(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw DomainError("polynomial must have degree at least 1");
  if (coeffs_.back() != 1) throw DomainError("polynomial must be monic");
}

PolyZ PolyZ::from_descending(const std::vector<mpz_class>& descending) {
  return PolyZ(std::vector<mpz_class>(descending.rbegin(), descending.rend()));
}

std::vector<mpz_class> PolyZ::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

mpz_class PolyZ::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolyZ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "X";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

OrbitValues evaluate_orbit(const InvariantSpec& spec, const RayModulus& m, i64 level, const PrecisionContext& ctx,
                           int threads) {
  ctx.validate();
  const Family family = spec.family();
  if (!modularity_check(family, level)) {
    throw DomainError("the invariant is not modular of level " + std::to_string(level));
  }
  const auto elements = galois_orbit(m, level, m.field.forms);
  std::vector<TransformedFamily> images;
  images.reserve(elements.size());
  for (const auto& g : elements) images.push_back(act_on_family(family, spec.phase, g));

  // Each distinct (form, reduced index) pair is evaluated once.
  using Key = std::tuple<std::size_t, mpq_class, mpq_class>;
  auto key_less = [](const Key& x, const Key& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
    return std::get<2>(x) < std::get<2>(y);
  };
  std::map<Key, std::size_t, decltype(key_less)> slot(key_less);
  std::vector<Key> keys;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& f : images[i].factors) {
      Key k{elements[i].form_index, f.first.r1, f.first.r2};
      if (slot.emplace(k, keys.size()).second) keys.push_back(k);
    }
  }
  const mpfr_prec_t prec = ctx.bits();
  std::vector<mp::Complex> taus;
  for (const auto& Q : m.field.forms.forms) taus.push_back(tau_of_form(Q, prec));
  std::vector<mp::Complex> cores(keys.size(), mp::Complex(prec));
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    const auto& [qi, r1, r2] = keys[i];
    cores[i] = siegel_core(IndexVector(r1, r2), taus[qi], ctx).value;
  });

  OrbitValues out;
  out.level = level;
  out.include_conjugates = !spec.real;
  out.declared_field_degree = ray_class_degree(make_modulus(m.field, spec.conductor));
  out.values.assign(elements.size(), mp::Complex(prec));
  parallel_for(elements.size(), threads, [&](std::size_t i) {
    const auto& img = images[i];
    mpq_class total = img.phase;
    mp::Complex v = mp::one(prec);
    for (const auto& [r, mult] : img.factors) {
      total += mult * r.r2 * (r.r1 - 1);
      v *= mp::pow(cores[slot.at(Key{elements[i].form_index, r.r1, r.r2})], mult);
    }
    out.values[i] = v * mp::exp_i_pi(prec, total);
  });
  return out;
}

std::vector<std::pair<mp::Complex, std::size_t>> dedup_values(const std::vector<mp::Complex>& values,
                                                              const mp::Real& tol) {
  std::vector<std::pair<mp::Complex, std::size_t>> out;
  for (const auto& v : values) {
    bool found = false;
    for (auto& [u, count] : out) {
      // Purely relative: orbit values can be tiny but never vanish.
      if (mp::abs(v - u) < tol * mp::abs(u)) {
        ++count;
        found = true;
        break;
      }
    }
    if (!found) out.emplace_back(v, 1);
  }
  return out;
}

namespace {

std::vector<mp::Complex> poly_mul(const std::vector<mp::Complex>& a, const std::vector<mp::Complex>& b) {
  const mpfr_prec_t prec = a.front().precision();
  std::vector<mp::Complex> out(a.size() + b.size() - 1, mp::Complex(prec));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<mp::Complex> expand_range(const std::vector<mp::Complex>& roots, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) {
    const mpfr_prec_t prec = roots[lo].precision();
    return {-roots[lo], mp::one(prec)};
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return poly_mul(expand_range(roots, lo, mid), expand_range(roots, mid, hi));
}

}  // namespace

std::vector<mp::Complex> expand_roots(const std::vector<mp::Complex>& roots) {
  if (roots.empty()) throw DomainError("no roots to expand");
  return expand_range(roots, 0, roots.size());
}

Reconstruction reconstruct_polynomial(const OrbitValues& orbit, const PrecisionContext& ctx,
                                      const ReconstructionTolerance& tol) {
  if (orbit.values.empty()) throw DomainError("empty orbit");
  const mpfr_prec_t prec = ctx.bits();
  const mp::Real dedup_tol =
      mp::pow10(prec, -static_cast<long>(std::floor(ctx.digits * tol.dedup_fraction)));
  const mp::Real int_tol =
      mp::pow10(prec, -static_cast<long>(std::floor(ctx.digits * tol.integrality_fraction)));

  auto distinct = dedup_values(orbit.values, dedup_tol);
  const std::size_t mult = distinct.front().second;
  for (const auto& d : distinct) {
    if (d.second != mult) {
      throw MultiplicityMismatch("orbit values repeat unevenly (" + std::to_string(d.second) + " vs " +
                                 std::to_string(mult) + ")");
    }
  }
  std::vector<mp::Complex> roots;
  for (auto& d : distinct) roots.push_back(d.first);
  if (orbit.include_conjugates) {
    std::vector<mp::Complex> with_conj = roots;
    for (const auto& r : roots) with_conj.push_back(mp::conj(r));
    roots.clear();
    for (auto& d : dedup_values(with_conj, dedup_tol)) roots.push_back(d.first);
  }

  auto coeffs = expand_roots(roots);
  std::vector<mpz_class> exact;
  double worst = -1e9;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    mpz_class rounded = coeffs[k].re().round();
    mp::Real err_re = mp::abs(coeffs[k].re() - mp::Real(prec, rounded));
    mp::Real err_im = mp::abs(coeffs[k].im());
    mp::Real err = err_re > err_im ? err_re : err_im;
    if (!(err < int_tol)) {
      throw IntegralityFailure("coefficient of X^" + std::to_string(k) + " is not near an integer (error " +
                               err.to_string(3) + ")");
    }
    if (!err.is_zero()) worst = std::max(worst, mp::log10(err).to_double());
    exact.push_back(rounded);
  }
  Reconstruction out{PolyZ(std::move(exact)), orbit.values.size(), distinct.size(), mult, worst};
  return out;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

// lc(B)^{deg A - deg B + 1} A = Q B + R
ZPoly pseudo_remainder(ZPoly A, const ZPoly& B) {
  const mpz_class& lb = B.back();
  int e = deg(A) - deg(B) + 1;
  while (!A.empty() && deg(A) >= deg(B)) {
    mpz_class la = A.back();
    int shift = deg(A) - deg(B);
    for (auto& c : A) c *= lb;
    for (int i = 0; i <= deg(B); ++i) A[static_cast<std::size_t>(i + shift)] -= la * B[static_cast<std::size_t>(i)];
    trim(A);
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : A) c *= f;
  }
  return A;
}

mpz_class zpow(const mpz_class& b, long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

mpz_class resultant(ZPoly A, ZPoly B) {
  trim(A);
  trim(B);
  if (A.empty() || B.empty()) return 0;
  if (deg(A) == 0 && deg(B) == 0) return 1;
  if (deg(A) == 0) return zpow(A[0], deg(B));
  if (deg(B) == 0) return zpow(B[0], deg(A));
  mpz_class a = content(A), b = content(B);
  for (auto& c : A) c /= a;
  for (auto& c : B) c /= b;
  mpz_class g = 1, h = 1;
  int s = 1;
  mpz_class t = zpow(a, deg(B)) * zpow(b, deg(A));
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if ((deg(A) * deg(B)) % 2 == 1) s = -s;
  }
  for (;;) {
    const int delta = deg(A) - deg(B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
    ZPoly R = pseudo_remainder(A, B);
    if (R.empty()) return 0;
    A = B;
    mpz_class div = g * zpow(h, delta);
    for (auto& c : R) c /= div;
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h = h^1 g^0
    } else {
      h = zpow(g, delta) / zpow(h, delta - 1);
    }
    if (deg(B) == 0) break;
  }
  const int da = deg(A);
  h = zpow(B[0], da) / zpow(h, da - 1);
  return s * t * h;
}

mpz_class discriminant(const PolyZ& p) {
  const auto& c = p.ascending();
  ZPoly deriv;
  for (std::size_t k = 1; k < c.size(); ++k) deriv.push_back(c[k] * static_cast<unsigned long>(k));
  const int n = p.degree();
  mpz_class r = resultant(c, deriv);
  return ((n * (n - 1) / 2) % 2 == 1) ? mpz_class(-r) : r;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  bool first = true;
  for (const auto& [p, e] : prime_powers) {
    if (!first) os << "*";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (cofactor != 1) {
    if (!first) os << "*";
    os << "(" << cofactor.get_str() << ")";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

Factorization factor_integer(const mpz_class& n, unsigned long trial_bound) {
  Factorization f;
  if (n == 0) throw DomainError("cannot factor 0");
  f.sign = n < 0 ? -1 : 1;
  mpz_class rest = abs(n);
  for (i64 p : primes_up_to(static_cast<i64>(trial_bound))) {
    if (rest == 1) break;
    const unsigned long up = static_cast<unsigned long>(p);
    if (mpz_divisible_ui_p(rest.get_mpz_t(), up) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), up) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), up);
      ++e;
    }
    f.prime_powers.emplace_back(mpz_class(up), e);
  }
  if (rest != 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) != 0) {
      f.prime_powers.emplace_back(rest, 1);
      rest = 1;
    } else if (mpz_perfect_power_p(rest.get_mpz_t()) != 0) {
      for (unsigned long k = mpz_sizeinbase(rest.get_mpz_t(), 2); k >= 2; --k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), k) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 30) != 0) {
          f.prime_powers.emplace_back(root, static_cast<int>(k));
          rest = 1;
          break;
        }
      }
    }
  }
  f.cofactor = rest;
  std::sort(f.prime_powers.begin(), f.prime_powers.end());
  return f;
}

bool unit_check(const PolyZ& p) { return abs(p.coeff(0)) == 1; }

std::vector<mp::Complex> approx_polynomial(const OrbitValues& orbit) {
  auto asc = expand_roots(orbit.values);
  return {asc.rbegin(), asc.rend()};
}

std::string format_sci(const mp::Real& x, int significant) { return x.to_string(significant); }

}  // namespace cmforge
