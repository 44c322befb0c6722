#include "cmforge/matmod.hpp"

#include "cmforge/errors.hpp"

namespace cmforge {

namespace {

i64 mulmod(i64 x, i64 y, i64 n) { return static_cast<i64>((static_cast<__int128>(x) * y) % n); }

}  // namespace

MatModN::MatModN(i64 modulus, i64 a, i64 b, i64 c, i64 d) : n(modulus) {
  if (modulus < 1) throw DomainError("matrix modulus must be positive");
  e = {mod(a, n), mod(b, n), mod(c, n), mod(d, n)};
}

MatModN MatModN::identity(i64 modulus) { return {modulus, 1, 0, 0, 1}; }

MatModN MatModN::scalar(i64 modulus, i64 x) { return {modulus, x, 0, 0, x}; }

i64 MatModN::det() const { return mod(mulmod(e[0], e[3], n) - mulmod(e[1], e[2], n), n); }

MatModN MatModN::operator-() const { return {n, -e[0], -e[1], -e[2], -e[3]}; }

MatModN MatModN::transpose() const { return {n, e[0], e[2], e[1], e[3]}; }

MatModN MatModN::pow(i64 k) const {
  MatModN result = identity(n);
  MatModN base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::string MatModN::to_string() const {
  return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
         std::to_string(e[3]) + "]]";
}

MatModN operator*(const MatModN& x, const MatModN& y) {
  if (x.n != y.n) throw DomainError("matrix moduli differ");
  const i64 n = x.n;
  return {n, (mulmod(x.a(), y.a(), n) + mulmod(x.b(), y.c(), n)) % n,
          (mulmod(x.a(), y.b(), n) + mulmod(x.b(), y.d(), n)) % n,
          (mulmod(x.c(), y.a(), n) + mulmod(x.d(), y.c(), n)) % n,
          (mulmod(x.c(), y.b(), n) + mulmod(x.d(), y.d(), n)) % n};
}

}  // namespace cmforge
