#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "cmforge/field_data.hpp"
#include "cmforge/mpcomplex.hpp"
#include "cmforge/siegel.hpp"

namespace cmforge {

// Monic integer polynomial; coefficients stored in ascending degree.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<mpz_class> ascending);
  static PolyZ from_descending(const std::vector<mpz_class>& descending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& ascending() const { return coeffs_; }
  std::vector<mpz_class> descending() const;
  const mpz_class& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  mpz_class eval(const mpz_class& x) const;
  std::string to_string() const;

  bool operator==(const PolyZ& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_{1};
};

struct OrbitValues {
  std::vector<mp::Complex> values;
  // Complex conjugates of the distinct values are adjoined during reconstruction.
  bool include_conjugates = false;
  i64 declared_field_degree = 0;
  i64 level = 0;
};

OrbitValues evaluate_orbit(const InvariantSpec& spec, const RayModulus& m, i64 level, const PrecisionContext& ctx,
                           int threads = 1);

struct ReconstructionTolerance {
  double dedup_fraction = 1.0 / 3.0;        // 10^{-P * dedup_fraction}
  double integrality_fraction = 1.0 / 4.0;  // 10^{-P * integrality_fraction}
};

struct Reconstruction {
  PolyZ polynomial;
  std::size_t orbit_size = 0;
  std::size_t distinct = 0;
  std::size_t multiplicity = 0;
  double max_rounding_error_log10 = 0;  // log10 of the worst |coefficient - integer|
};

// Distinct values under the relative tolerance, with their multiplicities.
std::vector<std::pair<mp::Complex, std::size_t>> dedup_values(const std::vector<mp::Complex>& values,
                                                              const mp::Real& tol);

// Monic product of (X - r); ascending coefficients.
std::vector<mp::Complex> expand_roots(const std::vector<mp::Complex>& roots);

Reconstruction reconstruct_polynomial(const OrbitValues& orbit, const PrecisionContext& ctx,
                                      const ReconstructionTolerance& tol = {});

// Ascending-coefficient integer polynomial helpers.
mpz_class resultant(std::vector<mpz_class> A, std::vector<mpz_class> B);
mpz_class discriminant(const PolyZ& p);

struct Factorization {
  int sign = 1;
  std::vector<std::pair<mpz_class, int>> prime_powers;
  mpz_class cofactor = 1;  // unfactored part, 1 when complete

  bool complete() const { return cofactor == 1; }
  std::string to_string() const;
};

Factorization factor_integer(const mpz_class& n, unsigned long trial_bound = 1000000);

bool unit_check(const PolyZ& p);

// Monic product over the raw orbit values; descending order.
std::vector<mp::Complex> approx_polynomial(const OrbitValues& orbit);
std::string format_sci(const mp::Real& x, int significant = 5);

}  // namespace cmforge
