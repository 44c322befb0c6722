#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace cmforge::mp {

// RAII handle for an mpfr_t. Every value owns its precision; binary
// operations produce a result at the larger of the operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(mpfr_prec_t prec, long value);
  Real(mpfr_prec_t prec, const mpq_class& value);
  Real(mpfr_prec_t prec, const mpz_class& value);
  Real(mpfr_prec_t prec, const std::string& decimal);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  // Nearest integer.
  mpz_class round() const;
  // Decimal scientific rendering with `digits` significant digits.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log10(const Real& x);
Real pi(mpfr_prec_t prec);
// 10^k at the given precision.
Real pow10(mpfr_prec_t prec, long k);

class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);

Complex one(mpfr_prec_t prec);
Complex conj(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
// z^n for any integer n, by binary powering.
Complex pow(const Complex& z, long n);
// e^{i*pi*x} for exact rational x; x is reduced mod 2 before the trig calls.
Complex exp_i_pi(mpfr_prec_t prec, const mpq_class& x);

}  // namespace cmforge::mp
