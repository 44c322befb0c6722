#pragma once

#include <array>
#include <vector>

#include "cmforge/field_data.hpp"
#include "cmforge/form_class.hpp"
#include "cmforge/matmod.hpp"
#include "cmforge/siegel.hpp"

namespace cmforge {

struct WGroup {
  i64 N = 2;
  std::vector<MatModN> elements;
  std::vector<MatModN> kernel;
  std::vector<MatModN> coset_reps;
  std::vector<AlgebraicIntegerZTheta> coset_omegas;  // (s, t) of each representative
};

// [[t - B s, -C s], [s, t]] mod N, no invertibility check.
MatModN w_matrix(const ImagQuadField& K, const AlgebraicIntegerZTheta& omega, i64 N);

WGroup build_w_group(const ImagQuadField& K, i64 N);
MatModN principal_class_matrix(const ImagQuadField& K, const AlgebraicIntegerZTheta& omega, i64 N);
i64 ray_class_order(const AlgebraicIntegerZTheta& omega, const RayModulus& m);

struct SL2Lift {
  std::array<i64, 4> matrix{1, 0, 0, 1};  // exact, determinant 1
  MatModN target;
  i64 det_part = 1;
};

SL2Lift decompose_gl2(const MatModN& alpha);

struct IndexAction {
  IndexVector index;      // reduced
  int sign = 1;           // a(r)
  IndexVector unreduced;  // transpose(alpha') diag(1, det) r
  mpq_class reduction_phase;
};

// -1 if exponent * level * r2 (r1 - 1) is an odd integer and det is even, else 1.
int a_sign(const IndexVector& r, int exponent, i64 level, i64 det);

IndexAction act_on_index(const IndexVector& r, const MatModN& alpha, int exponent, i64 level);

struct GaloisElement {
  MatModN alpha_coset;
  QuadForm form;
  std::size_t form_index = 0;
  MatModN composite;  // alpha * beta_Q mod level
  SL2Lift lift;
};

std::vector<GaloisElement> galois_orbit(const RayModulus& m, i64 level, const FormClassGroup& fcg);

// The image of e^{i pi phase} prod g_r^m under one Galois element, as an
// exact phase and reduced indices to be evaluated at theta_Q.
struct TransformedFamily {
  mpq_class phase;
  Family factors;
};

// Whether e^{i pi x} lies in Q(zeta_M).
bool phase_in_cyclotomic(const mpq_class& x, i64 level);
mpq_class combined_phase(const Family& family, const mpq_class& phase);

TransformedFamily act_on_family(const Family& family, const mpq_class& phase, const GaloisElement& g);

// Least multiple of spec.conductor at which the orbit engine applies.
i64 select_level(const InvariantSpec& spec, i64 max_multiple = 64);
bool level_admissible(const InvariantSpec& spec, i64 level);

}  // namespace cmforge
