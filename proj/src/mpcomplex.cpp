#include "cmforge/mpcomplex.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace cmforge::mp {

namespace {

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(mpfr_prec_t prec, long value) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const mpq_class& value) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const mpz_class& value) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const std::string& decimal) {
  mpfr_init2(value_, prec);
  mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

mpz_class Real::round() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log10(const Real& x) {
  Real r(x.precision());
  mpfr_log10(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow10(mpfr_prec_t prec, long k) {
  Real r(prec);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(k)), MPFR_RNDN);
  if (k < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re() - b.re(), a.im() - b.im()}; }
Complex operator-(const Complex& a) { return {-a.re(), -a.im()}; }

Complex operator*(const Complex& a, const Complex& b) {
  mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Real re(prec), im(prec), t(prec);
  mpfr_mul(re.get(), a.re().get(), b.re().get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_sub(re.get(), re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(im.get(), a.re().get(), b.im().get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im().get(), b.re().get(), MPFR_RNDN);
  mpfr_add(im.get(), im.get(), t.get(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re() * b.re() + b.im() * b.im();
  Complex num = a * conj(b);
  return {num.re() / den, num.im() / den};
}

Complex one(mpfr_prec_t prec) { return {Real(prec, 1L), Real(prec, 0L)}; }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Complex exp(const Complex& z) {
  mpfr_prec_t prec = z.precision();
  Real mag = exp(z.re());
  Real s(prec), c(prec);
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return {mag * c, mag * s};
}

Complex pow(const Complex& z, long n) {
  Complex base = n < 0 ? one(z.precision()) / z : z;
  unsigned long e = static_cast<unsigned long>(std::labs(n));
  Complex result = one(z.precision());
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1UL;
    if (e > 0) base *= base;
  }
  return result;
}

Complex exp_i_pi(mpfr_prec_t prec, const mpq_class& x) {
  // Reduce to [0, 2).
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  mpz_class two_den = 2 * den;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), two_den.get_mpz_t());
  mpq_class reduced(r, den);
  reduced.canonicalize();
  if (reduced == 0) return one(prec);
  if (reduced == 1) return {Real(prec, -1L), Real(prec, 0L)};
  if (reduced == mpq_class(1, 2)) return {Real(prec, 0L), Real(prec, 1L)};
  if (reduced == mpq_class(3, 2)) return {Real(prec, 0L), Real(prec, -1L)};
  Real angle = pi(prec + 16) * Real(prec + 16, reduced);
  Real s(prec), c(prec);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

}  // namespace cmforge::mp
