#pragma once

#include <string>
#include <vector>

#include "cmforge/arith.hpp"
#include "cmforge/form_class.hpp"

namespace cmforge {

enum class Splitting { split, inert, ramified };

std::string to_string(Splitting s);

struct ImagQuadField {
  i64 d = 1;
  i64 d_K = -4;
  i64 B_theta = 0;
  i64 C_theta = 1;
  int omega_K = 4;
  int h_K = 1;
  FormClassGroup forms;

  bool is_gaussian() const { return d_K == -4; }
  bool is_eisenstein() const { return d_K == -3; }
  Splitting splitting(i64 p) const;
};

// s*theta + t
struct AlgebraicIntegerZTheta {
  i64 s = 0;
  i64 t = 1;

  auto operator<=>(const AlgebraicIntegerZTheta&) const = default;
};

i64 norm(const ImagQuadField& K, const AlgebraicIntegerZTheta& w);
AlgebraicIntegerZTheta multiply(const ImagQuadField& K, const AlgebraicIntegerZTheta& x,
                                const AlgebraicIntegerZTheta& y);
// The omega_K roots of unity of K in the (s, t) basis.
std::vector<AlgebraicIntegerZTheta> units(const ImagQuadField& K);

struct PrimeLocal {
  i64 p;
  Splitting type;
  int n_p;  // ord_p(N)
};

struct RayModulus {
  ImagQuadField field;
  i64 N = 2;
  std::vector<PrimeLocal> prime_local_data;

  const PrimeLocal& local(i64 p) const;
};

// A prime power P^k dividing N*O_K. For split p, `conjugate` picks one of the
// two primes (theta - lambda) with lambda the smaller or larger root mod p.
struct IdealComponent {
  i64 p;
  Splitting type;
  int k;
  int conjugate = 0;
};

ImagQuadField make_field(i64 d);
RayModulus make_modulus(const ImagQuadField& K, i64 N);

int kronecker(i64 d_K, i64 p);

// Prime power components of N*O_K.
std::vector<IdealComponent> components(const RayModulus& m);
bool ideal_contains(const ImagQuadField& K, const IdealComponent& P, const AlgebraicIntegerZTheta& x);
i64 phi_component(const IdealComponent& P);
// Units congruent to 1 modulo the product of the given components.
int omega_of(const ImagQuadField& K, const std::vector<IdealComponent>& f);
// h_K * phi * omega / omega_K for the product of the given components.
i64 degree_of(const ImagQuadField& K, const std::vector<IdealComponent>& f);

i64 euler_phi_ideal(const RayModulus& m);
int omega_f(const RayModulus& m);
i64 ray_class_degree(const RayModulus& m);
i64 g_i_order(const RayModulus& m, i64 p);

struct SmallGiRow {
  i64 p;
  i64 order;
  bool matches_lemma_table;
};

// |G_i| <= 2 and |G_i| = 3 predicted from the small-order case tables.
bool lemma_table_le2(const ImagQuadField& K, i64 p, Splitting type, int k);
bool lemma_table_eq3(const ImagQuadField& K, i64 p, Splitting type, int k);
std::vector<SmallGiRow> check_small_gi_table(const RayModulus& m);

bool degree_drop_test(const RayModulus& m);

i64 k_p(const RayModulus& m, i64 p);
AlgebraicIntegerZTheta beta_of_lemma(const RayModulus& m, i64 p);

}  // namespace cmforge
