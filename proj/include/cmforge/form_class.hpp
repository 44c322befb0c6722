#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "cmforge/arith.hpp"
#include "cmforge/matmod.hpp"

namespace cmforge {

// Binary quadratic form a X^2 + b XY + c Y^2.
struct QuadForm {
  i64 a = 1;
  i64 b = 0;
  i64 c = 0;

  i64 discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
  std::string to_string() const;

  auto operator<=>(const QuadForm&) const = default;
};

struct FormClassGroup {
  i64 d_K = 0;
  std::vector<QuadForm> forms;  // sorted by (a, b); principal form first

  std::size_t size() const { return forms.size(); }
};

// (p + sqrt(D)) / q with integers p, q and D < 0.
struct QuadIrrational {
  i64 p = 0;
  i64 q = 1;
  i64 D = -1;

  double real_approx() const;
  double imag_approx() const;
  // Value of a x^2 + b x + c written as (rational part, coefficient of sqrt(D)).
  std::pair<mpq_class, mpq_class> eval_quadratic(i64 a, i64 b, i64 c) const;
};

FormClassGroup enumerate_reduced_forms(i64 d_K);

QuadIrrational theta_of_form(const QuadForm& Q);

// beta_Q reduced mod N: per prime the case matrix, glued by CRT.
MatModN beta_q_matrix(const QuadForm& Q, i64 N);

}  // namespace cmforge
