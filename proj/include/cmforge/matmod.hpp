#pragma once

#include <array>
#include <compare>
#include <string>

#include "cmforge/arith.hpp"

namespace cmforge {

// 2x2 matrix [[a, b], [c, d]] over Z/nZ, entries kept in [0, n).
struct MatModN {
  i64 n = 1;
  std::array<i64, 4> e{0, 0, 0, 0};

  MatModN() = default;
  MatModN(i64 modulus, i64 a, i64 b, i64 c, i64 d);

  static MatModN identity(i64 modulus);
  static MatModN scalar(i64 modulus, i64 x);

  i64 a() const { return e[0]; }
  i64 b() const { return e[1]; }
  i64 c() const { return e[2]; }
  i64 d() const { return e[3]; }

  i64 det() const;
  bool invertible() const { return gcd(det(), n) == 1; }
  MatModN operator-() const;
  MatModN transpose() const;
  MatModN pow(i64 k) const;
  std::string to_string() const;

  auto operator<=>(const MatModN&) const = default;
};

MatModN operator*(const MatModN& x, const MatModN& y);

}  // namespace cmforge
