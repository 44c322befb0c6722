#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "cmforge/field_data.hpp"
#include "cmforge/form_class.hpp"
#include "cmforge/mpcomplex.hpp"

namespace cmforge {

struct PrecisionContext {
  int digits = 120;
  int guard = 20;

  mpfr_prec_t bits() const;
  void validate() const;
};

struct IndexVector {
  mpq_class r1;
  mpq_class r2;

  IndexVector() = default;
  IndexVector(mpq_class a, mpq_class b);

  // Least common denominator of r1, r2.
  i64 level() const;
  bool integral() const;
  std::string to_string() const;

  bool operator==(const IndexVector& o) const { return r1 == o.r1 && r2 == o.r2; }
  bool operator<(const IndexVector& o) const { return r1 != o.r1 ? r1 < o.r1 : r2 < o.r2; }
};

// Signed multiplicities: g_r^m for each entry.
using Family = std::vector<std::pair<IndexVector, int>>;

enum class InvariantKind { sr_invariant, thm51_quotient, cor52, thm62_real, cor63 };

std::string to_string(InvariantKind k);
InvariantKind parse_kind(const std::string& s);

// e^{i pi phase} * prod numerator^{mult*exponent} / prod denominator^{mult*exponent}
struct InvariantSpec {
  InvariantKind kind = InvariantKind::sr_invariant;
  std::vector<std::pair<IndexVector, int>> numerator;
  std::vector<std::pair<IndexVector, int>> denominator;
  int exponent = 1;
  mpq_class phase = 0;
  QuadForm point;
  i64 conductor = 2;  // the N with K_(N) the target field
  bool real = false;  // values are real, min over K already rational
  std::string label;

  Family family() const;
};

struct SiegelValue {
  mp::Complex value;
  PrecisionContext context;
  int truncation_terms = 0;
};

mpq_class bernoulli2(const mpq_class& x);
mpq_class frac(const mpq_class& x);
IndexVector fractional_reduce(const IndexVector& r);

// g_r = e^{i pi phase} g_<r>
struct ReducedIndex {
  IndexVector reduced;
  mpq_class phase;
};
ReducedIndex reduce_with_phase(const IndexVector& r);

mp::Complex tau_of_form(const QuadForm& Q, mpfr_prec_t prec);

// g_r(tau) / e^{pi i r2 (r1 - 1)} for a reduced index: the q-product part.
SiegelValue siegel_core(const IndexVector& reduced, const mp::Complex& tau, const PrecisionContext& ctx);
SiegelValue siegel_eval(const IndexVector& r, const mp::Complex& tau, const PrecisionContext& ctx);

// e^{i pi phase} prod g_r(tau)^m
SiegelValue evaluate_family(const Family& family, const mpq_class& phase, const mp::Complex& tau,
                            const PrecisionContext& ctx);

bool modularity_check(const Family& family, i64 N);

SiegelValue sr_invariant(const RayModulus& m, const AlgebraicIntegerZTheta& omega, const PrecisionContext& ctx);
SiegelValue invariant_value(const InvariantSpec& spec, const PrecisionContext& ctx);

int m_exponent_theorem51(i64 N);
int m_exponent_theorem62(i64 N, i64 s);

InvariantSpec make_sr_invariant(const RayModulus& m, const AlgebraicIntegerZTheta& omega);
InvariantSpec make_thm51_quotient(const RayModulus& m, i64 s, i64 t);
InvariantSpec make_cor52(const RayModulus& m, i64 p);
InvariantSpec make_thm62_real_i(const RayModulus& m, i64 s);
InvariantSpec make_thm62_real_ii(const RayModulus& m, i64 t);
InvariantSpec make_cor63(const RayModulus& m, i64 p);

}  // namespace cmforge
